#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "modp/gf.hpp"
#include "modp/hecke.hpp"

namespace modp::pgroup {

/// Congruence-level models of subgroups of the pro-p Iwahori subgroup.
/// I1modZ1, I1P, I1Ps are taken modulo the image of the center Z_1
/// (canonical representatives have upper-left entry 1); I1U, I1Us are the
/// one-parameter unipotent groups and need no quotient.
enum class Selector { I1modZ1, I1P, I1Ps, I1U, I1Us };

const char* selector_name(Selector s);
Selector selector_from(const std::string& name); // UnknownKind if invalid

struct FinitePGroup {
    int p = 0, n = 0;
    Selector sel;
    long long pn = 0;   // p^n
    bool mod_center = false;
    std::vector<std::array<long long, 4>> elems; // canonical (a,b,c,d) mod p^n
    std::unordered_map<std::uint64_t, int> index;
    std::vector<int> gens;

    int identity() const { return id_; }
    int mult(int i, int j) const;
    /// h^-1 x h for h = diag(tl, tm) with tl, tm units mod p^n.
    int conj_diag(int i, long long tl, long long tm) const;

    int id_ = 0;
};

long long expected_order(int p, int n, Selector sel);

/// Enumerates the group by closure from a fixed generating set and checks
/// the order against the closed-form count.
FinitePGroup group_build(int p, int n, Selector sel);

/// Teichmueller lift of x in (Z/p)^* to Z/p^n.
long long teichmuller(int x, int p, int n);

struct HomFp {
    int dim = 0;
    /// each hom as its value (in F_p) at every group element
    std::vector<std::vector<std::uint8_t>> homs;
};

/// Hom(G, F_p) through the quotient by <commutators, p-th powers>.
HomFp hom_fp(const FinitePGroup& G);

/// Number of assignments of generator values extending to homomorphisms,
/// by exhaustive propagation. Cross-check for small groups.
long long brute_hom_count(const FinitePGroup& G);

/// Eigencharacter multiset of the torus conjugation action
/// (h.phi)(x) = phi(h^-1 x h) on Hom(G, F_p), sorted.
std::vector<hecke::TorusCharacter> eigenchars(const FinitePGroup& G);

/// Finite-level Ext^1 dimension between torus characters through G:
/// the multiplicity of psi * chi^-1 in eigenchars(G).
int ext1_char(const hecke::TorusCharacter& psi, const hecke::TorusCharacter& chi,
              const FinitePGroup& G);

} // namespace modp::pgroup
