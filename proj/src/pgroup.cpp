#include "modp/pgroup.hpp"

#include <algorithm>
#include <deque>

namespace modp::pgroup {

const char* selector_name(Selector s) {
    switch (s) {
        case Selector::I1modZ1: return "I1modZ1";
        case Selector::I1P: return "I1P";
        case Selector::I1Ps: return "I1Ps";
        case Selector::I1U: return "I1U";
        case Selector::I1Us: return "I1Us";
    }
    return "?";
}

Selector selector_from(const std::string& name) {
    for (Selector s : {Selector::I1modZ1, Selector::I1P, Selector::I1Ps, Selector::I1U,
                       Selector::I1Us})
        if (name == selector_name(s)) return s;
    raise(ErrKind::UnknownKind, "unknown group selector " + name);
}

namespace {

long long pow_ll(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

long long mod_inv(long long a, long long m) {
    long long t = 0, nt = 1, r = m, nr = a % m;
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) raise(ErrKind::SingularMatrix, "non-unit in Z/p^n");
    return ((t % m) + m) % m;
}

using Mat2 = std::array<long long, 4>; // (a, b, c, d)

Mat2 mat_mul(const Mat2& x, const Mat2& y, long long m) {
    return {(x[0] * y[0] + x[1] * y[2]) % m, (x[0] * y[1] + x[1] * y[3]) % m,
            (x[2] * y[0] + x[3] * y[2]) % m, (x[2] * y[1] + x[3] * y[3]) % m};
}

std::uint64_t encode(const Mat2& x, long long m) {
    return ((static_cast<std::uint64_t>(x[0]) * m + x[1]) * m + x[2]) * m + x[3];
}

Mat2 canonicalize(Mat2 x, long long m, bool mod_center) {
    if (!mod_center) return x;
    long long s = mod_inv(x[0], m);
    for (auto& e : x) e = e * s % m;
    return x;
}

} // namespace

long long teichmuller(int x, int p, int n) {
    long long m = pow_ll(p, n);
    long long t = ((x % p) + p) % p;
    for (int i = 0; i < n; ++i) {
        long long s = 1;
        for (int e = 0; e < p; ++e) s = s * t % m;
        t = s;
    }
    return t;
}

long long expected_order(int p, int n, Selector sel) {
    switch (sel) {
        case Selector::I1modZ1: return pow_ll(p, 3 * n - 2);
        case Selector::I1P: return pow_ll(p, 2 * n - 1);
        case Selector::I1Ps: return pow_ll(p, 2 * (n - 1));
        case Selector::I1U: return pow_ll(p, n);
        case Selector::I1Us: return pow_ll(p, n - 1);
    }
    return 0;
}

int FinitePGroup::mult(int i, int j) const {
    Mat2 z = canonicalize(mat_mul(elems[i], elems[j], pn), pn, mod_center);
    auto it = index.find(encode(z, pn));
    if (it == index.end()) raise(ErrKind::NotStable, "product left the enumerated group");
    return it->second;
}

int FinitePGroup::conj_diag(int i, long long tl, long long tm) const {
    const Mat2& x = elems[i];
    long long il = mod_inv(tl, pn), im = mod_inv(tm, pn);
    Mat2 z = {x[0] % pn, x[1] * tm % pn * il % pn, x[2] * tl % pn * im % pn, x[3] % pn};
    z = canonicalize(z, pn, mod_center);
    auto it = index.find(encode(z, pn));
    if (it == index.end()) raise(ErrKind::NotStable, "conjugate left the group");
    return it->second;
}

FinitePGroup group_build(int p, int n, Selector sel) {
    if (p % 2 == 0) raise(ErrKind::EvenPrimeUnsupported, "p = 2");
    if (n < 1 || n > 3) raise(ErrKind::RangeError, "level n must be in {1,2,3}");
    long long order = expected_order(p, n, sel);
    if (order > 1000000) raise(ErrKind::TooLarge, "group order exceeds 10^6");

    FinitePGroup G;
    G.p = p;
    G.n = n;
    G.sel = sel;
    G.pn = pow_ll(p, n);
    G.mod_center = sel == Selector::I1modZ1 || sel == Selector::I1P || sel == Selector::I1Ps;

    const Mat2 u = {1, 1, 0, 1};
    const Mat2 l = {1, 0, p % G.pn, 1};
    const Mat2 t = {(1 + p) % G.pn, 0, 0, 1};
    std::vector<Mat2> gens;
    switch (sel) {
        case Selector::I1modZ1: gens = {u, l, t}; break;
        case Selector::I1P: gens = {u, t}; break;
        case Selector::I1Ps: gens = {l, t}; break;
        case Selector::I1U: gens = {u}; break;
        case Selector::I1Us: gens = {l}; break;
    }

    auto add = [&](const Mat2& x) -> int {
        Mat2 c = canonicalize(x, G.pn, G.mod_center);
        std::uint64_t code = encode(c, G.pn);
        auto it = G.index.find(code);
        if (it != G.index.end()) return it->second;
        int id = static_cast<int>(G.elems.size());
        G.elems.push_back(c);
        G.index.emplace(code, id);
        return id;
    };

    G.id_ = add({1, 0, 0, 1});
    for (const auto& g : gens) G.gens.push_back(add(g));

    // BFS closure; a finite sub-semigroup containing 1 is a subgroup.
    for (size_t head = 0; head < G.elems.size(); ++head)
        for (const auto& g : gens) add(mat_mul(G.elems[head], g, G.pn));

    if (static_cast<long long>(G.elems.size()) != order)
        raise(ErrKind::NotStable, std::string("enumerated order ") +
                                      std::to_string(G.elems.size()) + " != closed form " +
                                      std::to_string(order) + " for " + selector_name(sel));
    return G;
}

namespace {

int group_inverse(const FinitePGroup& G, int x) {
    if (x == G.identity()) return x;
    int y = x;
    while (G.mult(y, x) != G.identity()) y = G.mult(y, x);
    return y;
}

// Membership mask of the subgroup generated by the seed elements.
std::vector<bool> subgroup_closure(const FinitePGroup& G, const std::vector<int>& seeds) {
    std::vector<bool> in(G.elems.size(), false);
    std::vector<int> members;
    auto push = [&](int x) {
        if (!in[x]) {
            in[x] = true;
            members.push_back(x);
        }
    };
    push(G.identity());
    for (int s : seeds) push(s);
    for (size_t head = 0; head < members.size(); ++head)
        for (int s : seeds) push(G.mult(members[head], s));
    return in;
}

} // namespace

HomFp hom_fp(const FinitePGroup& G) {
    const int p = G.p;
    // Normal closure of generator commutators and p-th powers: quotient is
    // the largest elementary abelian image.
    std::vector<int> seeds;
    auto add_seed = [&](int x) {
        if (std::find(seeds.begin(), seeds.end(), x) == seeds.end()) seeds.push_back(x);
    };
    for (int gi : G.gens)
        for (int gj : G.gens) {
            int inv_i = group_inverse(G, gi), inv_j = group_inverse(G, gj);
            add_seed(G.mult(G.mult(gi, gj), G.mult(inv_i, inv_j)));
        }
    for (int gi : G.gens) {
        int x = G.identity();
        for (int k = 0; k < p; ++k) x = G.mult(x, gi);
        add_seed(x);
    }

    std::vector<bool> N;
    for (;;) {
        N = subgroup_closure(G, seeds);
        bool stable = true;
        for (size_t x = 0; x < N.size() && stable; ++x) {
            if (!N[x]) continue;
            for (int g : G.gens) {
                int gx = G.mult(G.mult(group_inverse(G, g), static_cast<int>(x)), g);
                if (!N[gx]) {
                    add_seed(gx);
                    stable = false;
                }
            }
        }
        if (stable) break;
    }

    // Coset labels with exponent vectors over the generator images.
    const int k = static_cast<int>(G.gens.size());
    std::vector<int> coset(G.elems.size(), -1);
    std::vector<std::vector<int>> coset_exp;
    std::deque<int> reps;
    auto mark_coset = [&](int rep, std::vector<int> expvec) {
        int cid = static_cast<int>(coset_exp.size());
        coset_exp.push_back(std::move(expvec));
        for (size_t x = 0; x < N.size(); ++x)
            if (N[x]) coset[G.mult(static_cast<int>(x), rep)] = cid;
        reps.push_back(rep);
    };
    mark_coset(G.identity(), std::vector<int>(k, 0));
    while (!reps.empty()) {
        int rep = reps.front();
        reps.pop_front();
        std::vector<int> base = coset_exp[coset[rep]];
        for (int gi = 0; gi < k; ++gi) {
            int y = G.mult(rep, G.gens[gi]);
            if (coset[y] >= 0) continue;
            std::vector<int> e = base;
            e[gi] = (e[gi] + 1) % p;
            mark_coset(y, std::move(e));
        }
    }

    // Exponent vectors mapping to the identity coset span the relation
    // lattice; homomorphisms are the functionals vanishing on it.
    FieldPtr F = FieldCtx::make(p, 1);
    std::vector<std::vector<felt>> rel_rows;
    long long total = pow_ll(p, k);
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        int x = G.identity();
        std::vector<felt> row(k);
        for (int i = 0; i < k; ++i) {
            int ei = static_cast<int>(c % p);
            c /= p;
            row[i] = static_cast<felt>(ei);
            for (int rep = 0; rep < ei; ++rep) x = G.mult(x, G.gens[i]);
        }
        if (coset[x] == 0) rel_rows.push_back(std::move(row));
    }
    FMat L(F, static_cast<int>(rel_rows.size()), k);
    for (size_t i = 0; i < rel_rows.size(); ++i) L.set_row(static_cast<int>(i), rel_rows[i]);
    FMat duals = kernel(L);

    HomFp out;
    out.dim = duals.rows();
    for (int t = 0; t < duals.rows(); ++t) {
        std::vector<std::uint8_t> vals(G.elems.size(), 0);
        for (size_t x = 0; x < G.elems.size(); ++x) {
            const std::vector<int>& e = coset_exp[coset[x]];
            int acc = 0;
            for (int i = 0; i < k; ++i) acc = (acc + duals.at(t, i) * e[i]) % p;
            vals[x] = static_cast<std::uint8_t>(acc);
        }
        out.homs.push_back(std::move(vals));
    }
    return out;
}

long long brute_hom_count(const FinitePGroup& G) {
    if (G.elems.size() > 81) raise(ErrKind::TooLarge, "brute force limited to |G| <= 81");
    const int p = G.p;
    const int k = static_cast<int>(G.gens.size());
    long long total = pow_ll(p, k), found = 0;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        std::vector<int> t(k);
        for (int i = 0; i < k; ++i) {
            t[i] = static_cast<int>(c % p);
            c /= p;
        }
        std::vector<int> phi(G.elems.size(), -1);
        phi[G.identity()] = 0;
        std::deque<int> q{G.identity()};
        bool ok = true;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int i = 0; i < k; ++i) {
                int y = G.mult(x, G.gens[i]);
                int v = (phi[x] + t[i]) % p;
                if (phi[y] < 0) {
                    phi[y] = v;
                    q.push_back(y);
                }
            }
        }
        for (size_t x = 0; x < G.elems.size() && ok; ++x)
            for (int i = 0; i < k && ok; ++i)
                if ((phi[x] + t[i]) % p != phi[G.mult(static_cast<int>(x), G.gens[i])]) ok = false;
        if (ok) ++found;
    }
    return found;
}

std::vector<hecke::TorusCharacter> eigenchars(const FinitePGroup& G) {
    const int p = G.p;
    HomFp H = hom_fp(G);
    const int d = H.dim;
    std::vector<hecke::TorusCharacter> out;
    if (d == 0) return out;
    FieldPtr F = FieldCtx::make(p, 1);

    // A hom is determined by its values on the generators.
    const int k = static_cast<int>(G.gens.size());
    FMat coords_t(F, k, d); // columns = basis homs
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < k; ++j) coords_t.at(j, i) = H.homs[i][G.gens[j]];

    int g = 2;
    for (;; ++g) { // least primitive root mod p
        int x = 1;
        bool prim = true;
        for (int e = 1; e < p - 1; ++e) {
            x = x * g % p;
            if (x == 1) {
                prim = false;
                break;
            }
        }
        if (prim) break;
    }
    long long tg = teichmuller(g, p, G.n);

    // (h.phi)(x) = phi(h^-1 x h); rows of M express h.phi_i in the basis.
    auto action_matrix = [&](long long tl, long long tm) {
        FMat M(F, d, d);
        for (int i = 0; i < d; ++i) {
            std::vector<felt> vals(k);
            for (int j = 0; j < k; ++j)
                vals[j] = H.homs[i][G.conj_diag(G.gens[j], tl, tm)];
            auto c = solve(coords_t, vals);
            if (!c) raise(ErrKind::NotDiagonalizable, "conjugated hom left the hom space");
            M.set_row(i, *c);
        }
        return M;
    };
    FMat M1 = action_matrix(tg, 1);
    FMat M2 = action_matrix(1, tg);

    felt gf = F->from_int(g);
    int covered = 0;
    for (int mm = 0; mm < p - 1; ++mm)
        for (int nn = 0; nn < p - 1; ++nn) {
            felt c1 = F->pow(gf, mm), c2 = F->pow(gf, nn);
            FMat S = vstack(transpose(M1 - FMat::identity(F, d).scaled(c1)),
                            transpose(M2 - FMat::identity(F, d).scaled(c2)));
            int mult = d - rank(S);
            covered += mult;
            for (int c = 0; c < mult; ++c) out.emplace_back(p - 1, mm, nn);
        }
    if (covered != d)
        raise(ErrKind::NotDiagonalizable, "torus action not diagonalizable over F_p");
    std::sort(out.begin(), out.end());
    return out;
}

int ext1_char(const hecke::TorusCharacter& psi, const hecke::TorusCharacter& chi,
              const FinitePGroup& G) {
    hecke::TorusCharacter target = psi * chi.inv();
    int mult = 0;
    for (const auto& c : eigenchars(G))
        if (c == target) ++mult;
    return mult;
}

} // namespace modp::pgroup
