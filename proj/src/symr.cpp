#include "modp/symr.hpp"

#include <algorithm>

namespace modp::symr {

SymPoly SymPoly::zero(FieldPtr F, int r, int a) {
    SymPoly f;
    f.r = r;
    f.a = a;
    f.F = std::move(F);
    f.c.assign(r + 1, 0);
    return f;
}

SymPoly SymPoly::monomial(FieldPtr F, int r, int a, int j) {
    if (j < 0 || j > r) raise(ErrKind::RangeError, "monomial exponent out of range");
    SymPoly f = zero(std::move(F), r, a);
    f.c[j] = 1;
    return f;
}

bool SymPoly::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](felt x) { return x == 0; });
}

std::string SymPoly::str() const {
    std::string s;
    for (int j = r; j >= 0; --j) {
        if (c[j] == 0) continue;
        if (!s.empty()) s += " + ";
        s += std::to_string(c[j]) + "*x^" + std::to_string(j) + "y^" + std::to_string(r - j);
    }
    return s.empty() ? "0" : s;
}

SymPoly add(const SymPoly& f, const SymPoly& g) {
    if (f.r != g.r || f.a != g.a) raise(ErrKind::ShapeMismatch, "sym poly add");
    SymPoly h = f;
    for (int j = 0; j <= f.r; ++j) h.c[j] = f.F->add(f.c[j], g.c[j]);
    return h;
}

SymPoly scale(const SymPoly& f, felt s) {
    SymPoly h = f;
    for (auto& x : h.c) x = f.F->mul(x, s);
    return h;
}

namespace {

// integer binomials; n <= 12 here so no overflow concerns
long long binom_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

} // namespace

SymPoly sym_act(const std::array<int, 4>& g, const SymPoly& f) {
    const FieldCtx& F = *f.F;
    felt a = F.from_int(g[0]), b = F.from_int(g[1]), c = F.from_int(g[2]), d = F.from_int(g[3]);
    felt det = F.sub(F.mul(a, d), F.mul(b, c));
    if (det == 0) raise(ErrKind::SingularMatrix, "sym_act by a singular matrix");

    // (a x + c y)^j (b x + d y)^(r-j), expanded by binomials.
    SymPoly out = SymPoly::zero(f.F, f.r, f.a);
    for (int j = 0; j <= f.r; ++j) {
        if (f.c[j] == 0) continue;
        // first factor: sum_s C(j,s) a^s c^(j-s) x^s y^(j-s)
        std::vector<felt> first(j + 1), second(f.r - j + 1);
        for (int s = 0; s <= j; ++s)
            first[s] = F.mul(F.from_int(binom_ll(j, s)),
                             F.mul(F.pow(a, s), F.pow(c, j - s)));
        for (int t = 0; t <= f.r - j; ++t)
            second[t] = F.mul(F.from_int(binom_ll(f.r - j, t)),
                              F.mul(F.pow(b, t), F.pow(d, f.r - j - t)));
        for (int s = 0; s <= j; ++s) {
            if (first[s] == 0) continue;
            for (int t = 0; t <= f.r - j; ++t) {
                felt v = F.mul(f.c[j], F.mul(first[s], second[t]));
                out.c[s + t] = F.add(out.c[s + t], v);
            }
        }
    }
    return scale(out, F.pow(det, f.a));
}

namespace {

// l^e with the 0^0 = 1 convention, over the integers mod p.
felt pow0(const FieldCtx& F, int l, int e) {
    if (e == 0) return 1;
    return F.pow(F.from_int(l), e);
}

} // namespace

SymPoly f_sum_closed(FieldPtr F, int p, int r, int a, int j) {
    const FieldCtx& Fx = *F;
    felt sign = Fx.pow(Fx.neg(1), a + 1);
    if (r == p - 1 && j == 0) {
        SymPoly f = SymPoly::zero(F, r, a);
        f.c[r] = sign;
        f.c[0] = sign;
        return f;
    }
    SymPoly f = SymPoly::zero(F, r, a);
    f.c[j] = Fx.mul(sign, Fx.from_int(binom_ll(r, j)));
    return f;
}

SymPoly f_sum(FieldPtr F, int p, int r, int a, int j) {
    if (r < 0 || r > p - 1 || j < 0 || j > r) raise(ErrKind::RangeError, "f_sum arguments");
    const FieldCtx& Fx = *F;
    SymPoly sxr = sym_act({0, 1, 1, 0}, SymPoly::monomial(F, r, a, r));
    SymPoly acc = SymPoly::zero(F, r, a);
    for (int l = 0; l < p; ++l) {
        SymPoly term = sym_act({1, l, 0, 1}, sxr);
        acc = add(acc, scale(term, pow0(Fx, l, p - 1 - j)));
    }
    SymPoly closed = f_sum_closed(F, p, r, a, j);
    if (!(acc == closed))
        raise(ErrKind::RangeError, "f_sum direct summation disagrees with the closed form");
    return acc;
}

SymPoly x_power(const SymPoly& f, int k) {
    if (k < 0) raise(ErrKind::RangeError, "negative X power");
    SymPoly g = f;
    for (int i = 0; i < k; ++i) {
        SymPoly shifted = sym_act({1, 1, 0, 1}, g);
        g = add(shifted, scale(g, g.F->neg(1)));
    }
    return g;
}

bool verify_calcsym2(FieldPtr F, int p, int r, int a) {
    const FieldCtx& Fx = *F;
    if (p != F->p()) raise(ErrKind::ContextMismatch, "p does not match the field");
    SymPoly xr = SymPoly::monomial(F, r, a, r);
    SymPoly lhs = x_power(sym_act({0, 1, 1, 0}, xr), r);
    felt fact = 1;
    for (int i = 2; i <= r; ++i) fact = Fx.mul(fact, Fx.from_int(i));
    SymPoly rhs = scale(xr, Fx.mul(Fx.pow(Fx.neg(1), a), fact));
    return lhs == rhs;
}

namespace {

// One side of (rel): in Sym^r (x) det^a, check
// x^r = (-1)^(a+1) sum_l l^(p-1-r) u([l]) s x^r.
bool check_rel_side(FieldPtr F, int p, int r, int a) {
    const FieldCtx& Fx = *F;
    SymPoly sxr = sym_act({0, 1, 1, 0}, SymPoly::monomial(F, r, a, r));
    SymPoly acc = SymPoly::zero(F, r, a);
    for (int l = 0; l < p; ++l)
        acc = add(acc, scale(sym_act({1, l, 0, 1}, sxr), pow0(Fx, l, p - 1 - r)));
    SymPoly rhs = scale(acc, Fx.pow(Fx.neg(1), a + 1));
    return rhs == SymPoly::monomial(F, r, a, r);
}

// One side of (relX): X^r s x^r = (-1)^a r! x^r is calcsym2 itself.
bool check_relX_side(FieldPtr F, int p, int r, int a) { return verify_calcsym2(F, p, r, a); }

} // namespace

RelationsReport verify_relations(FieldPtr F, int p, int r, int a) {
    if (r < 0 || r > p - 1) raise(ErrKind::RangeError, "verify_relations r");
    const int rt = p - 1 - r;
    const int at = (r + a) % (p - 1);
    RelationsReport rep;
    // (rel) lives in Sym^r det^a with t v~ = s v; (trel) is the same
    // statement in the partner space Sym^(p-1-r) det^(r+a).
    rep.rel = check_rel_side(F, p, r, a);
    rep.trel = check_rel_side(F, p, rt, at);
    rep.relX = check_relX_side(F, p, r, a) && check_relX_side(F, p, rt, at);
    return rep;
}

bool w_sigma_check(FieldPtr F, int p, int r, int a) {
    if (r == 0)
        raise(ErrKind::RangeError,
              "r = 0 displacement needs depth-2 induction and is out of scope");
    if (r < 0 || r > p - 1) raise(ErrKind::RangeError, "w_sigma_check r");
    const FieldCtx& Fx = *F;

    SymPoly sxr = sym_act({0, 1, 1, 0}, SymPoly::monomial(F, r, a, r));
    SymPoly w = SymPoly::zero(F, r, a);
    for (int l = 0; l < p; ++l)
        w = add(w, scale(sym_act({1, l, 0, 1}, sxr), pow0(Fx, l, p - r)));
    felt musum = 0;
    for (int mu = 0; mu < p; ++mu) musum = Fx.add(musum, Fx.from_int(mu));
    w = add(w, scale(SymPoly::monomial(F, r, a, r), musum));

    SymPoly lhs = sym_act({1, 1, 0, 1}, w);
    felt disp = Fx.mul(Fx.pow(Fx.neg(1), a), Fx.from_int(r));
    SymPoly rhs = add(w, scale(SymPoly::monomial(F, r, a, r), Fx.neg(disp)));
    return lhs == rhs;
}

} // namespace modp::symr
