#include "modp/envelope.hpp"

#include "modp/pgroup.hpp"

namespace modp::envelope {

using presalg::AlgebraModule;
using presalg::AlgebraPtr;
using presalg::Generator;
using presalg::Relation;
using presalg::Word;

namespace {

int least_primitive_root(int p) {
    for (int g = 2;; ++g) {
        int x = 1;
        bool prim = true;
        for (int e = 1; e < p - 1; ++e) {
            x = x * g % p;
            if (x == 1) {
                prim = false;
                break;
            }
        }
        if (prim) return g;
    }
}

Word word_pow(int gen, long long e) { return Word(static_cast<size_t>(e), gen); }

// Group algebra of the semidirect product of the torus with C_{p^m};
// conjugation relation in the right-module direction: u h = h u^t(h).
AlgebraPtr envelope_algebra(const FieldPtr& F, int p, int m, long long a1, long long a2) {
    long long N = 1;
    for (int i = 0; i < m; ++i) N *= p;
    std::vector<Generator> gens = {{"u", -1}, {"h1", -1}, {"h2", -1}};
    const felt one = 1;
    const felt minus_one = F->neg(1);
    std::vector<Relation> rels;
    rels.push_back({{{one, word_pow(0, N)}}, one, "u^(p^m)=1"});
    rels.push_back({{{one, word_pow(1, p - 1)}}, one, "h1^(p-1)=1"});
    rels.push_back({{{one, word_pow(2, p - 1)}}, one, "h2^(p-1)=1"});
    rels.push_back({{{one, {1, 2}}, {minus_one, {2, 1}}}, 0, "h1 h2 = h2 h1"});
    {
        Word w = {1};
        Word upow = word_pow(0, a1);
        w.insert(w.end(), upow.begin(), upow.end());
        rels.push_back({{{one, {0, 1}}, {minus_one, w}}, 0, "u h1 = h1 u^t1"});
    }
    {
        Word w = {2};
        Word upow = word_pow(0, a2);
        w.insert(w.end(), upow.begin(), upow.end());
        rels.push_back({{{one, {0, 2}}, {minus_one, w}}, 0, "u h2 = h2 u^t2"});
    }
    return presalg::algebra_make(F, std::move(gens), std::move(rels));
}

} // namespace

FMat EnvelopeModule::X() const {
    return mod.action[gen_u()] - FMat::identity(F, dim);
}

EnvelopeModule envelope_make(FieldPtr F, const hecke::TorusCharacter& chi, int m) {
    const int p = F->p();
    if (chi.mod != p - 1) raise(ErrKind::ContextMismatch, "character modulus != p-1");
    if (m < 1 || m > 2) raise(ErrKind::RangeError, "m must be 1 or 2");
    long long N = 1;
    for (int i = 0; i < m; ++i) N *= p;
    if (N > 343) raise(ErrKind::TooLarge, "p^m > 343");

    EnvelopeModule J;
    J.chi = chi;
    J.p = p;
    J.m = m;
    J.dim = static_cast<int>(N);
    J.g = least_primitive_root(p);
    J.F = F;

    long long a1 = pgroup::teichmuller(J.g, p, m);
    int ginv = 1;
    for (int x = 1; x < p; ++x)
        if (x * J.g % p == 1) ginv = x;
    long long a2 = pgroup::teichmuller(ginv, p, m);

    AlgebraPtr A = envelope_algebra(F, p, m, a1, a2);
    const FieldCtx& Fx = *F;

    // delta_i . u = delta_{i+1}; delta_i . h = chi(h) delta_{t(h) i}.
    FMat U(F, J.dim, J.dim);
    for (int i = 0; i < J.dim; ++i) U.at(i, static_cast<int>((i + 1) % N)) = 1;
    felt c1 = Fx.pow(Fx.from_int(J.g), chi.m);
    felt c2 = Fx.pow(Fx.from_int(J.g), chi.n);
    FMat H1(F, J.dim, J.dim), H2(F, J.dim, J.dim);
    for (int i = 0; i < J.dim; ++i) {
        H1.at(i, static_cast<int>(a1 * i % N)) = c1;
        H2.at(i, static_cast<int>(a2 * i % N)) = c2;
    }
    J.mod = presalg::make_module(A, {U, H1, H2});
    return J;
}

namespace {

// Echelon basis of {v : v M = 0}.
FMat left_kernel(const FMat& M) { return kernel(transpose(M)); }

felt eigenvalue_on_quotient(const FieldCtx& F, const FMat& lower, const std::vector<int>& lower_piv,
                            const std::vector<felt>& v, const std::vector<felt>& w) {
    std::vector<felt> vr = lower.rows() ? reduce_against(lower, lower_piv, v) : v;
    std::vector<felt> wr = lower.rows() ? reduce_against(lower, lower_piv, w) : w;
    int lead = -1;
    for (size_t j = 0; j < vr.size(); ++j)
        if (vr[j] != 0) {
            lead = static_cast<int>(j);
            break;
        }
    if (lead < 0) raise(ErrKind::NotDiagonalizable, "representative inside lower filtration step");
    felt c = F.mul(wr[lead], F.inv(vr[lead]));
    for (size_t j = 0; j < vr.size(); ++j)
        if (wr[j] != F.mul(c, vr[j]))
            raise(ErrKind::NotDiagonalizable, "graded torus action is not scalar");
    return c;
}

int dlog(const FieldCtx& F, int g, felt c) {
    felt x = 1;
    for (int e = 0; e < F.p() - 1; ++e) {
        if (x == c) return e;
        x = F.mul(x, F.from_int(g));
    }
    raise(ErrKind::NotDiagonalizable, "eigenvalue is not a power of the primitive root");
}

} // namespace

std::vector<hecke::TorusCharacter> socle_series(const EnvelopeModule& J) {
    const FieldCtx& F = *J.F;
    FMat X = J.X();
    std::vector<hecke::TorusCharacter> out;

    FMat prev(J.F, 0, J.dim);
    std::vector<int> prev_piv;
    FMat Xk = FMat::identity(J.F, J.dim);
    for (int k = 1; k <= J.dim; ++k) {
        Xk = Xk * X;
        std::vector<int> piv;
        FMat sock = rref(left_kernel(Xk), &piv);
        if (sock.rows() != k)
            raise(ErrKind::NotDiagonalizable, "socle step is not 1-dimensional");
        // representative of soc_k outside soc_{k-1}
        int pick = -1;
        for (int i = 0; i < sock.rows(); ++i) {
            std::vector<felt> red =
                prev.rows() ? reduce_against(prev, prev_piv, sock.row(i)) : sock.row(i);
            bool nz = false;
            for (felt x : red) nz |= x != 0;
            if (nz) {
                pick = i;
                break;
            }
        }
        if (pick < 0) raise(ErrKind::NotDiagonalizable, "socle filtration did not grow");
        std::vector<felt> v = sock.row(pick);
        std::vector<felt> w1 = vec_mat(F, v, J.mod.action[J.gen_h1()]);
        std::vector<felt> w2 = vec_mat(F, v, J.mod.action[J.gen_h2()]);
        felt c1 = eigenvalue_on_quotient(F, prev, prev_piv, v, w1);
        felt c2 = eigenvalue_on_quotient(F, prev, prev_piv, v, w2);
        out.emplace_back(J.p - 1, dlog(F, J.g, c1), dlog(F, J.g, c2));

        prev = sock;
        prev_piv = piv;
    }
    return out;
}

std::pair<long long, felt> minj_recursion(const FieldPtr& F, int r, int n) {
    const int p = F->p();
    if (r < 0 || r > p - 1) raise(ErrKind::RangeError, "r out of [0, p-1]");
    if (n < 0) raise(ErrKind::RangeError, "n must be >= 0");
    long long e = 0;
    for (int i = 0; i < n; ++i) e = r + static_cast<long long>(p) * (p - 1 - r) + p * 1LL * p * e;

    const FieldCtx& Fx = *F;
    felt fact_r = 1, fact_c = 1;
    for (int i = 2; i <= r; ++i) fact_r = Fx.mul(fact_r, Fx.from_int(i));
    for (int i = 2; i <= p - 1 - r; ++i) fact_c = Fx.mul(fact_c, Fx.from_int(i));
    felt base = Fx.mul(Fx.pow(Fx.neg(1), r), Fx.mul(fact_r, fact_c));
    felt lambda = 1;
    for (int i = 0; i < n; ++i) lambda = Fx.mul(lambda, base);
    return {e, lambda};
}

bool minj_identity_check(const EnvelopeModule& J, int r, int n) {
    auto [e, lambda] = minj_recursion(J.F, r, n);
    if (e >= J.dim) raise(ErrKind::RangeError, "e_n >= p^m, no room at this level");
    const FieldCtx& F = *J.F;

    // e_n is divisible by p-1, so the depth-e_n graded piece carries chi
    // again; pick an honest chi-eigenvector at that depth.
    if (e % (J.p - 1) != 0) raise(ErrKind::RangeError, "e_n not divisible by p-1");
    felt c1 = F.pow(F.from_int(J.g), J.chi.m);
    felt c2 = F.pow(F.from_int(J.g), J.chi.n);
    FMat E1 = J.mod.action[J.gen_h1()] - FMat::identity(J.F, J.dim).scaled(c1);
    FMat E2 = J.mod.action[J.gen_h2()] - FMat::identity(J.F, J.dim).scaled(c2);

    FMat X = J.X();
    FMat Xe = FMat::identity(J.F, J.dim);
    for (long long i = 0; i < e; ++i) Xe = Xe * X;
    std::vector<int> piv;
    FMat soc_e = rref(kernel(transpose(Xe)), &piv); // soc_{e_n}

    // chi-eigenvectors inside soc_{e_n + 1}: depth exactly e_n once they
    // escape soc_{e_n}.
    FMat eig = kernel(vstack(vstack(transpose(E1), transpose(E2)), transpose(Xe * X)));

    int pick = -1;
    for (int i = 0; i < eig.rows(); ++i) {
        std::vector<felt> red =
            soc_e.rows() ? reduce_against(soc_e, piv, eig.row(i)) : eig.row(i);
        bool nz = false;
        for (felt x : red) nz |= x != 0;
        if (nz) {
            pick = i;
            break;
        }
    }
    if (pick < 0) return false; // no chi-eigenvector at depth e_n

    std::vector<felt> w = eig.row(pick);
    std::vector<felt> v = vec_mat(F, w, Xe);
    for (auto& x : v) x = F.mul(x, lambda);

    // v must span the socle line and carry chi.
    bool nz = false;
    for (felt x : v) nz |= x != 0;
    if (!nz) return false;
    std::vector<felt> vX = vec_mat(F, v, X);
    for (felt x : vX)
        if (x != 0) return false;
    std::vector<felt> vh1 = vec_mat(F, v, J.mod.action[J.gen_h1()]);
    std::vector<felt> vh2 = vec_mat(F, v, J.mod.action[J.gen_h2()]);
    for (int j = 0; j < J.dim; ++j)
        if (vh1[j] != F.mul(c1, v[j]) || vh2[j] != F.mul(c2, v[j])) return false;
    return true;
}

presalg::AlgebraModule char_module(const EnvelopeModule& J, const hecke::TorusCharacter& psi) {
    const FieldCtx& F = *J.F;
    if (psi.mod != J.p - 1) raise(ErrKind::ContextMismatch, "character modulus");
    FMat U(J.F, 1, 1), H1(J.F, 1, 1), H2(J.F, 1, 1);
    U.at(0, 0) = 1;
    H1.at(0, 0) = F.pow(F.from_int(J.g), psi.m);
    H2.at(0, 0) = F.pow(F.from_int(J.g), psi.n);
    return presalg::make_module(J.mod.alg, {U, H1, H2});
}

int ext1_envelope(const hecke::TorusCharacter& psi, const EnvelopeModule& J) {
    const FieldCtx& F = *J.F;

    // Injectivity at finite level: Ext^1(psi, J) = 0 through the engine.
    presalg::AlgebraModule psi_mod = char_module(J, psi);
    if (presalg::ext1(psi_mod, J.mod).dim != 0)
        raise(ErrKind::NotStable, "envelope is not injective at finite level");

    // Socle line.
    FMat X = J.X();
    FMat soc = left_kernel(X);
    if (soc.rows() != 1) raise(ErrKind::NotDiagonalizable, "socle is not a line");

    presalg::AlgebraModule Q = presalg::quotient_module(J.mod, soc);
    FMat XQ = Q.action[J.gen_u()] - FMat::identity(J.F, Q.dim);
    std::vector<int> piv;
    FMat inv = rref(left_kernel(XQ), &piv);

    // Torus action restricted to the u-invariants of the quotient.
    const int d = inv.rows();
    FMat R1(J.F, d, d), R2(J.F, d, d);
    for (int i = 0; i < d; ++i) {
        auto c1 = express_in_rows(inv, piv, vec_mat(F, inv.row(i), Q.action[J.gen_h1()]));
        auto c2 = express_in_rows(inv, piv, vec_mat(F, inv.row(i), Q.action[J.gen_h2()]));
        if (!c1 || !c2) raise(ErrKind::NotStable, "torus does not preserve the u-invariants");
        R1.set_row(i, *c1);
        R2.set_row(i, *c2);
    }
    felt c1 = F.pow(F.from_int(J.g), psi.m);
    felt c2 = F.pow(F.from_int(J.g), psi.n);
    FMat S = vstack(transpose(R1 - FMat::identity(J.F, d).scaled(c1)),
                    transpose(R2 - FMat::identity(J.F, d).scaled(c2)));
    return d - rank(S);
}

} // namespace modp::envelope
