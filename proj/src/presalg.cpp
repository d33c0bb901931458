#include "modp/presalg.hpp"

#include <algorithm>

namespace modp::presalg {

PresentedAlgebra::PresentedAlgebra(FieldPtr f, std::vector<Generator> gens,
                                   std::vector<Relation> rels)
    : f_(std::move(f)), gens_(std::move(gens)), rels_(std::move(rels)) {}

int PresentedAlgebra::gen_index(const std::string& name) const {
    for (int i = 0; i < ngens(); ++i)
        if (gens_[i].name == name) return i;
    raise(ErrKind::UnknownGenerator, name);
}

bool PresentedAlgebra::compatible(const PresentedAlgebra& o) const {
    if (!f_->same(*o.f_) || gens_.size() != o.gens_.size() || rels_.size() != o.rels_.size())
        return false;
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name != o.gens_[i].name || gens_[i].inverse_of != o.gens_[i].inverse_of)
            return false;
    for (size_t i = 0; i < rels_.size(); ++i) {
        const Relation &a = rels_[i], &b = o.rels_[i];
        if (a.constant != b.constant || a.terms.size() != b.terms.size()) return false;
        for (size_t t = 0; t < a.terms.size(); ++t)
            if (a.terms[t].coeff != b.terms[t].coeff || a.terms[t].word != b.terms[t].word)
                return false;
    }
    return true;
}

AlgebraPtr algebra_make(FieldPtr f, std::vector<Generator> gens, std::vector<Relation> rels) {
    const int n = static_cast<int>(gens.size());
    for (const auto& g : gens) {
        if (g.name.empty()) raise(ErrKind::MalformedRelation, "generator with empty name");
        if (g.inverse_of >= n) raise(ErrKind::UnknownGenerator, "inverse pairing out of range");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (gens[i].name == gens[j].name)
                raise(ErrKind::MalformedRelation, "duplicate generator " + gens[i].name);
    for (const auto& r : rels) {
        if (r.terms.empty()) raise(ErrKind::MalformedRelation, "relation with no terms: " + r.name);
        for (const auto& t : r.terms)
            for (int g : t.word)
                if (g < 0 || g >= n)
                    raise(ErrKind::UnknownGenerator,
                          "relation " + r.name + " references generator #" + std::to_string(g));
    }
    // Formal inverses must come with the two product relations.
    for (int i = 0; i < n; ++i) {
        int j = gens[i].inverse_of;
        if (j < 0) continue;
        if (gens[j].inverse_of != i)
            raise(ErrKind::MalformedRelation, "one-sided inverse pairing for " + gens[i].name);
        bool found = false;
        for (const auto& r : rels)
            if (r.terms.size() == 1 && r.constant == 1 && r.terms[0].coeff == 1 &&
                r.terms[0].word == Word{i, j})
                found = true;
        if (!found)
            raise(ErrKind::MalformedRelation,
                  "missing relation " + gens[i].name + "*" + gens[j].name + " = 1");
    }
    return std::make_shared<const PresentedAlgebra>(std::move(f), std::move(gens),
                                                    std::move(rels));
}

AlgebraModule make_module(AlgebraPtr alg, std::vector<FMat> action) {
    AlgebraModule M;
    M.alg = std::move(alg);
    if (static_cast<int>(action.size()) != M.alg->ngens())
        raise(ErrKind::ShapeMismatch, "one action matrix per generator required");
    M.dim = action.empty() ? 0 : action[0].rows();
    for (const auto& m : action) {
        if (m.rows() != M.dim || m.cols() != M.dim)
            raise(ErrKind::ShapeMismatch, "action matrices must be square of equal size");
        if (!m.field()->same(*M.alg->field()))
            raise(ErrKind::ContextMismatch, "module matrices over wrong field");
    }
    M.action = std::move(action);
    return M;
}

FMat word_matrix(const AlgebraModule& M, const Word& w) {
    FMat R = FMat::identity(M.alg->field(), M.dim);
    for (int g : w) R = R * M.action[g];
    return R;
}

std::vector<std::string> module_check(const AlgebraModule& M) {
    std::vector<std::string> bad;
    for (const auto& rel : M.alg->relations()) {
        FMat acc(M.alg->field(), M.dim, M.dim);
        for (const auto& t : rel.terms) acc = acc + word_matrix(M, t.word).scaled(t.coeff);
        FMat want = FMat::identity(M.alg->field(), M.dim).scaled(rel.constant);
        if (!(acc == want)) bad.push_back(rel.name);
    }
    // Inverse pairs must act by inverse matrices.
    for (int i = 0; i < M.alg->ngens(); ++i) {
        int j = M.alg->generators()[i].inverse_of;
        if (j <= i) continue;
        if (!(M.action[i] * M.action[j] == FMat::identity(M.alg->field(), M.dim)))
            bad.push_back(M.alg->generators()[i].name + "*" + M.alg->generators()[j].name +
                          " != 1 (inverse pair)");
    }
    std::sort(bad.begin(), bad.end());
    bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
    return bad;
}

namespace {

void check_pair(const AlgebraModule& M, const AlgebraModule& N) {
    if (!M.alg->compatible(*N.alg))
        raise(ErrKind::ContextMismatch, "modules over incompatible algebras");
}

} // namespace

std::vector<FMat> hom_space(const AlgebraModule& M, const AlgebraModule& N) {
    check_pair(M, N);
    const FieldPtr& f = M.alg->field();
    const FieldCtx& F = *f;
    const int m = M.dim, n = N.dim, nv = m * n;
    if (nv == 0) return {};
    // A_g F - F B_g = 0, unknowns F[i][j] at i*n + j.
    FMat C(f, M.alg->ngens() * nv, nv);
    int row = 0;
    for (int g = 0; g < M.alg->ngens(); ++g) {
        const FMat &A = M.action[g], &B = N.action[g];
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                for (int k = 0; k < m; ++k)
                    C.at(row, k * n + j) = F.add(C.at(row, k * n + j), A.at(i, k));
                for (int k = 0; k < n; ++k)
                    C.at(row, i * n + k) = F.sub(C.at(row, i * n + k), B.at(k, j));
                ++row;
            }
    }
    FMat K = kernel(C);
    std::vector<FMat> basis;
    for (int r = 0; r < K.rows(); ++r) {
        FMat Fm(f, m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) Fm.at(i, j) = K.at(r, i * n + j);
        basis.push_back(std::move(Fm));
    }
    return basis;
}

int hom_dim(const AlgebraModule& M, const AlgebraModule& N) {
    if (M.dim == 0 || N.dim == 0) return 0;
    return static_cast<int>(hom_space(M, N).size());
}

namespace {

// m x n matrix of linear forms in nv unknowns, stored as one coefficient
// matrix per unknown. Used to evaluate relation words on the block
// matrices [[B_g, 0], [C_g, A_g]] with unknown lower blocks C_g.
struct LinMat {
    int m = 0, n = 0;
    std::vector<FMat> d; // d[v] = coefficient matrix of unknown v

    static LinMat zeros(const FieldPtr& f, int m, int n, int nv) {
        LinMat L;
        L.m = m;
        L.n = n;
        L.d.assign(nv, FMat(f, m, n));
        return L;
    }
};

// C * B for known B.
LinMat lin_mul_right(const LinMat& C, const FMat& B) {
    LinMat R;
    R.m = C.m;
    R.n = B.cols();
    R.d.reserve(C.d.size());
    for (const auto& Dv : C.d) R.d.push_back(Dv * B);
    return R;
}

void lin_axpy(LinMat& acc, felt c, const LinMat& X) {
    for (size_t v = 0; v < acc.d.size(); ++v) acc.d[v] = acc.d[v] + X.d[v].scaled(c);
}

} // namespace

Ext1Result ext1(const AlgebraModule& M, const AlgebraModule& N) {
    check_pair(M, N);
    const FieldPtr& f = M.alg->field();
    const FieldCtx& F = *f;
    const int m = M.dim, n = N.dim;
    const int G = M.alg->ngens();
    const int nv = G * m * n;

    Ext1Result res;
    if (m == 0 || n == 0) {
        res.cocycle_space = FMat(f, 0, nv);
        res.coboundaries = FMat(f, 0, nv);
        res.representatives = FMat(f, 0, nv);
        return res;
    }
    auto var = [&](int g, int i, int j) { return g * m * n + i * n + j; };

    // Unknown blocks C_g as unit linear forms.
    std::vector<LinMat> Cg;
    Cg.reserve(G);
    for (int g = 0; g < G; ++g) {
        LinMat L = LinMat::zeros(f, m, n, nv);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) L.d[var(g, i, j)].at(i, j) = 1;
        Cg.push_back(std::move(L));
    }

    std::vector<std::vector<felt>> rows;
    for (const auto& rel : M.alg->relations()) {
        LinMat Ctot = LinMat::zeros(f, m, n, nv);
        for (const auto& t : rel.terms) {
            // Walk the word keeping (B_w, C_w, A_w); C stays linear.
            FMat Bw = FMat::identity(f, n);
            FMat Aw = FMat::identity(f, m);
            LinMat Cw = LinMat::zeros(f, m, n, nv);
            for (int g : t.word) {
                LinMat Cnew = lin_mul_right(Cw, N.action[g]);
                // Aw * C_g touches only the unknowns of g.
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < n; ++j) {
                        // d/d x_{g,k,j} (Aw * C_g)[i][j] = Aw[i][k]
                        for (int k = 0; k < m; ++k) {
                            felt a = Aw.at(i, k);
                            if (a == 0) continue;
                            FMat& Dv = Cnew.d[var(g, k, j)];
                            Dv.at(i, j) = F.add(Dv.at(i, j), a);
                        }
                    }
                Cw = std::move(Cnew);
                Bw = Bw * N.action[g];
                Aw = Aw * M.action[g];
            }
            lin_axpy(Ctot, t.coeff, Cw);
        }
        // Off-diagonal block of the relation must vanish.
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<felt> row(nv, 0);
                bool nonzero = false;
                for (int v = 0; v < nv; ++v) {
                    row[v] = Ctot.d[v].at(i, j);
                    nonzero |= row[v] != 0;
                }
                if (nonzero) rows.push_back(std::move(row));
            }
    }
    // Inverse pairs induce g * g^-1 = 1 constraints; these are already in
    // the relation list by construction of algebra_make.

    FMat Constr(f, static_cast<int>(rows.size()), nv);
    for (size_t i = 0; i < rows.size(); ++i) Constr.set_row(static_cast<int>(i), rows[i]);
    res.cocycle_space = rows.empty() ? rref(FMat::identity(f, nv)) : kernel(Constr);

    // Coboundaries: C_g = K B_g - A_g K over all K.
    FMat Cob(f, m * n, nv);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            int r = i * n + j;
            for (int g = 0; g < G; ++g) {
                const FMat &A = M.action[g], &B = N.action[g];
                // (E_ij B)[i][l] = B[j][l]; (A E_ij)[k][j] = A[k][i]
                for (int l = 0; l < n; ++l)
                    Cob.at(r, var(g, i, l)) = F.add(Cob.at(r, var(g, i, l)), B.at(j, l));
                for (int k = 0; k < m; ++k)
                    Cob.at(r, var(g, k, j)) = F.sub(Cob.at(r, var(g, k, j)), A.at(k, i));
            }
        }
    std::vector<int> cob_piv;
    res.coboundaries = rref(Cob, &cob_piv);
    int cob_rank = 0;
    for (int i = 0; i < res.coboundaries.rows(); ++i) {
        bool nz = false;
        for (int j = 0; j < nv; ++j) nz |= res.coboundaries.at(i, j) != 0;
        if (nz) ++cob_rank;
    }
    FMat CobBasis(f, cob_rank, nv);
    for (int i = 0; i < cob_rank; ++i)
        for (int j = 0; j < nv; ++j) CobBasis.at(i, j) = res.coboundaries.at(i, j);
    res.coboundaries = CobBasis;

    // Representatives: cocycles reduced modulo coboundaries.
    std::vector<int> bpiv;
    FMat Bech = rref(res.coboundaries, &bpiv);
    std::vector<std::vector<felt>> reps;
    FMat span = Bech;
    std::vector<int> span_piv = bpiv;
    for (int r = 0; r < res.cocycle_space.rows(); ++r) {
        std::vector<felt> z = reduce_against(span, span_piv, res.cocycle_space.row(r));
        bool nz = false;
        for (felt x : z) nz |= x != 0;
        if (!nz) continue;
        reps.push_back(z);
        FMat nspan(f, span.rows() + 1, nv);
        for (int i = 0; i < span.rows(); ++i)
            for (int j = 0; j < nv; ++j) nspan.at(i, j) = span.at(i, j);
        nspan.set_row(span.rows(), z);
        span_piv.clear();
        span = rref(nspan, &span_piv);
        // drop the zero row rref may leave at the bottom
        FMat tight(f, static_cast<int>(span_piv.size()), nv);
        for (int i = 0; i < tight.rows(); ++i)
            for (int j = 0; j < nv; ++j) tight.at(i, j) = span.at(i, j);
        span = tight;
    }
    res.representatives = FMat(f, static_cast<int>(reps.size()), nv);
    for (size_t i = 0; i < reps.size(); ++i) res.representatives.set_row(static_cast<int>(i), reps[i]);
    res.dim = res.cocycle_space.rows() - res.coboundaries.rows();
    return res;
}

AlgebraModule middle_module(const AlgebraModule& M, const AlgebraModule& N,
                            const std::vector<felt>& cocycle) {
    check_pair(M, N);
    const FieldPtr& f = M.alg->field();
    const int m = M.dim, n = N.dim;
    if (static_cast<int>(cocycle.size()) != M.alg->ngens() * m * n)
        raise(ErrKind::ShapeMismatch, "cocycle vector length");
    std::vector<FMat> action;
    for (int g = 0; g < M.alg->ngens(); ++g) {
        FMat E(f, n + m, n + m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) E.at(i, j) = N.action[g].at(i, j);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) E.at(n + i, n + j) = M.action[g].at(i, j);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) E.at(n + i, j) = cocycle[g * m * n + i * n + j];
        action.push_back(std::move(E));
    }
    return make_module(M.alg, std::move(action));
}

FMat submodule_closure(const AlgebraModule& M, const FMat& seeds) {
    if (seeds.cols() != M.dim) raise(ErrKind::ShapeMismatch, "seed width != module dim");
    FMat basis = row_space(seeds);
    for (;;) {
        std::vector<int> piv;
        FMat ech = rref(basis, &piv);
        FMat tight(M.alg->field(), static_cast<int>(piv.size()), M.dim);
        for (int i = 0; i < tight.rows(); ++i)
            for (int j = 0; j < M.dim; ++j) tight.at(i, j) = ech.at(i, j);
        basis = tight;

        bool grew = false;
        for (int r = 0; r < basis.rows() && !grew; ++r)
            for (int g = 0; g < M.alg->ngens() && !grew; ++g) {
                std::vector<felt> w =
                    vec_mat(*M.alg->field(), basis.row(r), M.action[g]);
                std::vector<felt> red = reduce_against(basis, piv, w);
                for (felt x : red)
                    if (x != 0) {
                        FMat nb(M.alg->field(), basis.rows() + 1, M.dim);
                        for (int i = 0; i < basis.rows(); ++i)
                            for (int j = 0; j < M.dim; ++j) nb.at(i, j) = basis.at(i, j);
                        nb.set_row(basis.rows(), red);
                        basis = nb;
                        grew = true;
                        break;
                    }
            }
        if (!grew) return basis;
    }
}

AlgebraModule restrict_to(const AlgebraModule& M, const FMat& sub) {
    std::vector<int> piv;
    FMat S = rref(sub, &piv);
    FMat basis(M.alg->field(), static_cast<int>(piv.size()), M.dim);
    for (int i = 0; i < basis.rows(); ++i)
        for (int j = 0; j < M.dim; ++j) basis.at(i, j) = S.at(i, j);

    std::vector<FMat> action;
    for (int g = 0; g < M.alg->ngens(); ++g) {
        FMat R(M.alg->field(), basis.rows(), basis.rows());
        for (int i = 0; i < basis.rows(); ++i) {
            std::vector<felt> w = vec_mat(*M.alg->field(), basis.row(i), M.action[g]);
            auto coords = express_in_rows(basis, piv, w);
            if (!coords) raise(ErrKind::NotStable, "subspace not action-stable");
            R.set_row(i, *coords);
        }
        action.push_back(std::move(R));
    }
    return make_module(M.alg, std::move(action));
}

AlgebraModule quotient_module(const AlgebraModule& M, const FMat& sub) {
    std::vector<int> piv;
    FMat S = rref(sub, &piv);
    FMat basis(M.alg->field(), static_cast<int>(piv.size()), M.dim);
    for (int i = 0; i < basis.rows(); ++i)
        for (int j = 0; j < M.dim; ++j) basis.at(i, j) = S.at(i, j);

    // Stability check.
    for (int g = 0; g < M.alg->ngens(); ++g)
        for (int i = 0; i < basis.rows(); ++i) {
            std::vector<felt> w = vec_mat(*M.alg->field(), basis.row(i), M.action[g]);
            if (!express_in_rows(basis, piv, w))
                raise(ErrKind::NotStable, "quotient by a non-stable subspace");
        }

    std::vector<bool> is_piv(M.dim, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < M.dim; ++j)
        if (!is_piv[j]) free_cols.push_back(j);

    const int qd = static_cast<int>(free_cols.size());
    std::vector<FMat> action;
    for (int g = 0; g < M.alg->ngens(); ++g) {
        FMat Q(M.alg->field(), qd, qd);
        for (int i = 0; i < qd; ++i) {
            std::vector<felt> v = M.action[g].row(free_cols[i]);
            std::vector<felt> red = reduce_against(basis, piv, v);
            for (int j = 0; j < qd; ++j) Q.at(i, j) = red[free_cols[j]];
        }
        action.push_back(std::move(Q));
    }
    return make_module(M.alg, std::move(action));
}

bool is_simple(const AlgebraModule& M) {
    if (M.dim == 0) return false;
    const int q = M.alg->field()->q();
    double total = 1;
    for (int i = 0; i < M.dim; ++i) total *= q;
    if (total > 1e6) raise(ErrKind::TooLarge, "exhaustive simplicity test infeasible");

    long long count = static_cast<long long>(total);
    std::vector<felt> v(M.dim, 0);
    for (long long code = 1; code < count; ++code) {
        long long c = code;
        for (int i = 0; i < M.dim; ++i) {
            v[i] = static_cast<felt>(c % q);
            c /= q;
        }
        FMat seed(M.alg->field(), 1, M.dim);
        seed.set_row(0, v);
        if (submodule_closure(M, seed).rows() != M.dim) return false;
    }
    return true;
}

IsoResult is_isomorphic(const AlgebraModule& M, const AlgebraModule& N) {
    check_pair(M, N);
    IsoResult res;
    if (M.dim != N.dim) return res;
    if (M.dim == 0) {
        res.isomorphic = true;
        return res;
    }
    // Generator ranks are conjugation invariants.
    for (int g = 0; g < M.alg->ngens(); ++g)
        if (rank(M.action[g]) != rank(N.action[g])) return res;

    std::vector<FMat> H = hom_space(M, N);
    const int h = static_cast<int>(H.size());
    if (h == 0) return res;
    const int q = M.alg->field()->q();
    double total = 1;
    for (int i = 0; i < h; ++i) total *= q;
    if (total > 1e6) raise(ErrKind::TooLarge, "hom space too big for exhaustive search");

    long long count = static_cast<long long>(total);
    for (long long code = 1; code < count; ++code) {
        long long c = code;
        FMat cand(M.alg->field(), M.dim, N.dim);
        for (int i = 0; i < h; ++i) {
            felt ci = static_cast<felt>(c % q);
            c /= q;
            if (ci != 0) cand = cand + H[i].scaled(ci);
        }
        if (rank(cand) == M.dim) {
            res.isomorphic = true;
            res.witness = cand;
            return res;
        }
    }
    return res;
}

AlgebraModule direct_sum(const AlgebraModule& M, const AlgebraModule& N) {
    check_pair(M, N);
    std::vector<FMat> action;
    for (int g = 0; g < M.alg->ngens(); ++g) {
        FMat D(M.alg->field(), M.dim + N.dim, M.dim + N.dim);
        for (int i = 0; i < M.dim; ++i)
            for (int j = 0; j < M.dim; ++j) D.at(i, j) = M.action[g].at(i, j);
        for (int i = 0; i < N.dim; ++i)
            for (int j = 0; j < N.dim; ++j) D.at(M.dim + i, M.dim + j) = N.action[g].at(i, j);
        action.push_back(std::move(D));
    }
    return make_module(M.alg, std::move(action));
}

AlgebraModule base_change(const AlgebraModule& M, const FMat& P) {
    auto Pi = inverse(P);
    if (!Pi) raise(ErrKind::SingularMatrix, "base change by singular matrix");
    std::vector<FMat> action;
    for (int g = 0; g < M.alg->ngens(); ++g) action.push_back(P * M.action[g] * *Pi);
    return make_module(M.alg, std::move(action));
}

std::vector<felt> extension_class(const AlgebraModule& E, const FMat& sub) {
    std::vector<int> piv;
    FMat S = rref(sub, &piv);
    FMat basis(E.alg->field(), static_cast<int>(piv.size()), E.dim);
    for (int i = 0; i < basis.rows(); ++i)
        for (int j = 0; j < E.dim; ++j) basis.at(i, j) = S.at(i, j);

    // Adapted basis: submodule rows first, complement unit rows after.
    std::vector<bool> is_piv(E.dim, false);
    for (int c : piv) is_piv[c] = true;
    FMat T(E.alg->field(), E.dim, E.dim);
    for (int i = 0; i < basis.rows(); ++i)
        for (int j = 0; j < E.dim; ++j) T.at(i, j) = basis.at(i, j);
    int r = basis.rows();
    for (int j = 0; j < E.dim; ++j)
        if (!is_piv[j]) T.at(r++, j) = 1;

    AlgebraModule Ead = base_change(E, T);
    const int n = basis.rows();
    const int m = E.dim - n;
    AlgebraModule N = restrict_to(E, basis);
    AlgebraModule M = quotient_module(E, basis);

    std::vector<felt> cocycle(static_cast<size_t>(E.alg->ngens()) * m * n, 0);
    for (int g = 0; g < E.alg->ngens(); ++g) {
        // Lower-left block of the adapted action; upper-right must vanish.
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                if (Ead.action[g].at(i, n + j) != 0)
                    raise(ErrKind::NotStable, "subspace not action-stable");
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                cocycle[static_cast<size_t>(g) * m * n + i * n + j] = Ead.action[g].at(n + i, j);
    }

    Ext1Result ext = ext1(M, N);
    std::vector<int> bpiv;
    FMat Bech = rref(ext.coboundaries, &bpiv);
    FMat tight(E.alg->field(), static_cast<int>(bpiv.size()), Bech.cols());
    for (int i = 0; i < tight.rows(); ++i)
        for (int j = 0; j < Bech.cols(); ++j) tight.at(i, j) = Bech.at(i, j);
    return reduce_against(tight, bpiv, cocycle);
}

int extension_class_rank(const AlgebraModule& E, const FMat& sub) {
    for (felt x : extension_class(E, sub))
        if (x != 0) return 1;
    return 0;
}

} // namespace modp::presalg
