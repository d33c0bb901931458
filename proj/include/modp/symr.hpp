#pragma once

#include <array>
#include <string>
#include <vector>

#include "modp/gf.hpp"

namespace modp::symr {

/// Homogeneous degree-r polynomial in x, y over F_p with a det^a twist;
/// coeffs[j] is the coefficient of x^j y^(r-j).
struct SymPoly {
    int r = 0;
    int a = 0;
    FieldPtr F;
    std::vector<felt> c;

    static SymPoly zero(FieldPtr F, int r, int a);
    /// x^j y^(r-j)
    static SymPoly monomial(FieldPtr F, int r, int a, int j);
    bool operator==(const SymPoly& o) const { return r == o.r && a == o.a && c == o.c; }
    bool is_zero() const;
    std::string str() const;
};

SymPoly add(const SymPoly& f, const SymPoly& g);
SymPoly scale(const SymPoly& f, felt s);

/// Substitution action of g = [[a,b],[c,d]] in GL_2(F_p):
/// P(x,y) -> det(g)^twist * P(ax + cy, bx + dy). Entries are integers mod p.
SymPoly sym_act(const std::array<int, 4>& g, const SymPoly& f);

/// The sum f_j = sum_{l in F_p} l^(p-1-j) u([l]) s x^r computed term by
/// term (0^0 = 1), checked against the closed form before returning.
SymPoly f_sum(FieldPtr F, int p, int r, int a, int j);

/// Closed form of f_j.
SymPoly f_sum_closed(FieldPtr F, int p, int r, int a, int j);

/// X = u(1) - 1 applied k times.
SymPoly x_power(const SymPoly& f, int k);

/// X^r s x^r = (-1)^a r! x^r, checked exactly.
bool verify_calcsym2(FieldPtr F, int p, int r, int a);

struct RelationsReport {
    bool rel = false;
    bool trel = false;
    bool relX = false;
    bool all() const { return rel && trel && relX; }
};

/// The three basis relations, checked in Sym^r (x) det^a and its partner
/// Sym^(p-1-r) (x) det^(r+a) under the identification t v~ = s v.
RelationsReport verify_relations(FieldPtr F, int p, int r, int a);

/// The displacement u(1) w = w - (-1)^a r v for the vector
/// w = sum_l l^(p-r) u([l]) s x^r + (sum_mu mu) x^r; r = 0 is rejected.
bool w_sigma_check(FieldPtr F, int p, int r, int a);

} // namespace modp::symr
