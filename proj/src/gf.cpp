#include "modp/gf.hpp"

#include <algorithm>

namespace modp {

const char* err_name(ErrKind k) {
    switch (k) {
        case ErrKind::NonPrime: return "NonPrime";
        case ErrKind::EvenPrimeUnsupported: return "EvenPrimeUnsupported";
        case ErrKind::DegreeUnsupported: return "DegreeUnsupported";
        case ErrKind::ShapeMismatch: return "ShapeMismatch";
        case ErrKind::ContextMismatch: return "ContextMismatch";
        case ErrKind::UnknownGenerator: return "UnknownGenerator";
        case ErrKind::MalformedRelation: return "MalformedRelation";
        case ErrKind::NotStable: return "NotStable";
        case ErrKind::TooLarge: return "TooLarge";
        case ErrKind::RangeError: return "RangeError";
        case ErrKind::InvalidCharacterData: return "InvalidCharacterData";
        case ErrKind::UnsupportedCentralCharacter: return "UnsupportedCentralCharacter";
        case ErrKind::UnknownPiSpec: return "UnknownPiSpec";
        case ErrKind::UnknownKind: return "UnknownKind";
        case ErrKind::ExcludedCase: return "ExcludedCase";
        case ErrKind::NotDiagonalizable: return "NotDiagonalizable";
        case ErrKind::SingularMatrix: return "SingularMatrix";
        case ErrKind::ParseError: return "ParseError";
    }
    return "Error";
}

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// x^2 + b x + c irreducible over F_p iff it has no root.
bool quad_irreducible(int p, int b, int c) {
    for (int x = 0; x < p; ++x)
        if ((x * x + b * x + c) % p == 0) return false;
    return true;
}

} // namespace

FieldPtr FieldCtx::make(int p, int k) {
    if (p == 2) raise(ErrKind::EvenPrimeUnsupported, "p = 2 is not supported");
    if (!is_prime(p)) raise(ErrKind::NonPrime, "p = " + std::to_string(p) + " is not prime");
    if (p > 13) raise(ErrKind::RangeError, "p = " + std::to_string(p) + " exceeds 13");
    if (k < 1 || k > 2) raise(ErrKind::DegreeUnsupported, "k = " + std::to_string(k));

    auto F = std::shared_ptr<FieldCtx>(new FieldCtx());
    F->p_ = p;
    F->k_ = k;
    F->q_ = 1;
    for (int i = 0; i < k; ++i) F->q_ *= p;
    const int q = F->q_;

    int mb = 0, mc = 0;
    if (k == 2) {
        bool found = false;
        for (int b = 0; b < p && !found; ++b)
            for (int c = 0; c < p && !found; ++c)
                if (quad_irreducible(p, b, c)) {
                    mb = b;
                    mc = c;
                    found = true;
                }
        F->modulus_ = {mc, mb, 1};
    }

    F->add_.assign(static_cast<size_t>(q) * q, 0);
    F->mul_.assign(static_cast<size_t>(q) * q, 0);
    F->neg_.assign(q, 0);
    F->inv_.assign(q, 0);

    auto decode = [&](int a, int& a0, int& a1) {
        a0 = a % p;
        a1 = a / p;
    };
    for (int a = 0; a < q; ++a) {
        int a0, a1;
        decode(a, a0, a1);
        F->neg_[a] = static_cast<felt>(((p - a0) % p) + ((p - a1) % p) * p);
        for (int b = 0; b < q; ++b) {
            int b0, b1;
            decode(b, b0, b1);
            F->add_[static_cast<size_t>(a) * q + b] =
                static_cast<felt>((a0 + b0) % p + ((a1 + b1) % p) * p);
            if (k == 1) {
                F->mul_[static_cast<size_t>(a) * q + b] = static_cast<felt>((a0 * b0) % p);
            } else {
                // (a0 + a1 x)(b0 + b1 x), x^2 = -mb x - mc
                int c0 = a0 * b0;
                int c1 = a0 * b1 + a1 * b0;
                int c2 = a1 * b1;
                c1 += c2 * (p - mb);
                c0 += c2 * (p - mc);
                F->mul_[static_cast<size_t>(a) * q + b] =
                    static_cast<felt>(c0 % p + (c1 % p) * p);
            }
        }
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (F->mul_[static_cast<size_t>(a) * q + b] == 1) {
                F->inv_[a] = static_cast<felt>(b);
                break;
            }
    return F;
}

felt FieldCtx::inv(felt a) const {
    if (a == 0) raise(ErrKind::SingularMatrix, "inverse of zero");
    return inv_[a];
}

felt FieldCtx::pow(felt a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    felt r = 1, b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

felt FieldCtx::from_int(long long n) const {
    long long m = n % p_;
    if (m < 0) m += p_;
    return static_cast<felt>(m);
}

std::vector<int> FieldCtx::coeffs(felt a) const {
    std::vector<int> c(k_);
    int v = a;
    for (int i = 0; i < k_; ++i) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

FMat::FMat(FieldPtr f, int rows, int cols)
    : f_(std::move(f)), rows_(rows), cols_(cols),
      e_(static_cast<size_t>(rows) * cols, 0) {}

FMat FMat::identity(FieldPtr f, int n) {
    FMat m(std::move(f), n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void FMat::check_compat(const FMat& o) const {
    if (!f_ || !o.f_ || !f_->same(*o.f_))
        raise(ErrKind::ContextMismatch, "matrices over different fields");
}

FMat FMat::operator*(const FMat& o) const {
    check_compat(o);
    if (cols_ != o.rows_) raise(ErrKind::ShapeMismatch, "matrix product shapes");
    FMat r(f_, rows_, o.cols_);
    const FieldCtx& F = *f_;
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            felt a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = F.add(r.at(i, j), F.mul(a, o.at(k, j)));
        }
    return r;
}

FMat FMat::operator+(const FMat& o) const {
    check_compat(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) raise(ErrKind::ShapeMismatch, "matrix sum shapes");
    FMat r(f_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_->add(e_[i], o.e_[i]);
    return r;
}

FMat FMat::operator-(const FMat& o) const {
    check_compat(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) raise(ErrKind::ShapeMismatch, "matrix diff shapes");
    FMat r(f_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_->sub(e_[i], o.e_[i]);
    return r;
}

FMat FMat::scaled(felt c) const {
    FMat r(f_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_->mul(e_[i], c);
    return r;
}

bool FMat::operator==(const FMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_ && f_ && o.f_ && f_->same(*o.f_);
}

bool FMat::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](felt x) { return x == 0; });
}

std::vector<felt> FMat::row(int i) const {
    return std::vector<felt>(e_.begin() + static_cast<size_t>(i) * cols_,
                             e_.begin() + static_cast<size_t>(i + 1) * cols_);
}

void FMat::set_row(int i, const std::vector<felt>& v) {
    if (static_cast<int>(v.size()) != cols_) raise(ErrKind::ShapeMismatch, "set_row length");
    std::copy(v.begin(), v.end(), e_.begin() + static_cast<size_t>(i) * cols_);
}

std::vector<felt> vec_mat(const FieldCtx& F, const std::vector<felt>& v, const FMat& A) {
    if (static_cast<int>(v.size()) != A.rows()) raise(ErrKind::ShapeMismatch, "vec_mat length");
    std::vector<felt> r(A.cols(), 0);
    for (int i = 0; i < A.rows(); ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < A.cols(); ++j) r[j] = F.add(r[j], F.mul(v[i], A.at(i, j)));
    }
    return r;
}

FMat transpose(const FMat& A) {
    FMat r(A.field(), A.cols(), A.rows());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) r.at(j, i) = A.at(i, j);
    return r;
}

FMat vstack(const FMat& top, const FMat& bottom) {
    if (top.cols() != bottom.cols()) raise(ErrKind::ShapeMismatch, "vstack widths");
    FMat r(top.field(), top.rows() + bottom.rows(), top.cols());
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) r.at(i, j) = top.at(i, j);
    for (int i = 0; i < bottom.rows(); ++i)
        for (int j = 0; j < bottom.cols(); ++j) r.at(top.rows() + i, j) = bottom.at(i, j);
    return r;
}

FMat rref(const FMat& A, std::vector<int>* pivots) {
    FMat R = A;
    const FieldCtx& F = *A.field();
    int pr = 0;
    for (int pc = 0; pc < R.cols() && pr < R.rows(); ++pc) {
        int sel = -1;
        for (int i = pr; i < R.rows(); ++i)
            if (R.at(i, pc) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != pr)
            for (int j = 0; j < R.cols(); ++j) std::swap(R.at(sel, j), R.at(pr, j));
        felt s = F.inv(R.at(pr, pc));
        for (int j = 0; j < R.cols(); ++j) R.at(pr, j) = F.mul(R.at(pr, j), s);
        for (int i = 0; i < R.rows(); ++i) {
            if (i == pr) continue;
            felt c = R.at(i, pc);
            if (c == 0) continue;
            for (int j = 0; j < R.cols(); ++j)
                R.at(i, j) = F.sub(R.at(i, j), F.mul(c, R.at(pr, j)));
        }
        if (pivots) pivots->push_back(pc);
        ++pr;
    }
    return R;
}

int rank(const FMat& A) {
    std::vector<int> piv;
    rref(A, &piv);
    return static_cast<int>(piv.size());
}

FMat kernel(const FMat& A) {
    std::vector<int> piv;
    FMat R = rref(A, &piv);
    const FieldCtx& F = *A.field();
    std::vector<bool> is_piv(A.cols(), false);
    for (int c : piv) is_piv[c] = true;

    int nfree = A.cols() - static_cast<int>(piv.size());
    FMat K(A.field(), nfree, A.cols());
    int r = 0;
    for (int j = 0; j < A.cols(); ++j) {
        if (is_piv[j]) continue;
        K.at(r, j) = 1;
        for (size_t i = 0; i < piv.size(); ++i) K.at(r, piv[i]) = F.neg(R.at(static_cast<int>(i), j));
        ++r;
    }
    return rref(K);
}

std::optional<std::vector<felt>> solve(const FMat& A, const std::vector<felt>& b) {
    if (static_cast<int>(b.size()) != A.rows()) raise(ErrKind::ShapeMismatch, "solve rhs length");
    FMat Ab(A.field(), A.rows(), A.cols() + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) Ab.at(i, j) = A.at(i, j);
        Ab.at(i, A.cols()) = b[i];
    }
    std::vector<int> piv;
    FMat R = rref(Ab, &piv);
    for (int c : piv)
        if (c == A.cols()) return std::nullopt;
    std::vector<felt> x(A.cols(), 0);
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = R.at(static_cast<int>(i), A.cols());
    return x;
}

std::optional<FMat> inverse(const FMat& A) {
    if (A.rows() != A.cols()) raise(ErrKind::ShapeMismatch, "inverse of non-square matrix");
    int n = A.rows();
    FMat Ai(A.field(), n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) Ai.at(i, j) = A.at(i, j);
        Ai.at(i, n + i) = 1;
    }
    std::vector<int> piv;
    FMat R = rref(Ai, &piv);
    if (static_cast<int>(piv.size()) != n || piv[n - 1] != n - 1) return std::nullopt;
    FMat inv(A.field(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = R.at(i, n + j);
    return inv;
}

FMat row_space(const FMat& A) {
    std::vector<int> piv;
    FMat R = rref(A, &piv);
    FMat B(A.field(), static_cast<int>(piv.size()), A.cols());
    for (int i = 0; i < B.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) B.at(i, j) = R.at(i, j);
    return B;
}

std::vector<felt> reduce_against(const FMat& basis, const std::vector<int>& pivots,
                                 std::vector<felt> v) {
    const FieldCtx& F = *basis.field();
    for (int i = 0; i < basis.rows(); ++i) {
        felt c = v[pivots[i]];
        if (c == 0) continue;
        for (int j = 0; j < basis.cols(); ++j) v[j] = F.sub(v[j], F.mul(c, basis.at(i, j)));
    }
    return v;
}

std::optional<std::vector<felt>> express_in_rows(const FMat& basis, const std::vector<int>& pivots,
                                                 const std::vector<felt>& v) {
    std::vector<felt> coords(basis.rows(), 0);
    for (int i = 0; i < basis.rows(); ++i) coords[i] = v[pivots[i]];
    std::vector<felt> rem = reduce_against(basis, pivots, v);
    for (felt x : rem)
        if (x != 0) return std::nullopt;
    return coords;
}

} // namespace modp
