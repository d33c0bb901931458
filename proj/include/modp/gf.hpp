#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "modp/errors.hpp"

namespace modp {

/// Canonical element code of F_{p^k}: c0 + c1*p + ... for the reduced
/// coefficient sequence (c0,...,c_{k-1}).
using felt = std::uint16_t;

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Exact arithmetic over F_{p^k}, small odd p, k <= 2. All operation
/// tables are precomputed at construction; instances are immutable.
class FieldCtx {
public:
    /// p odd prime <= 13, 1 <= k <= 2. For k = 2 the modulus is the
    /// lexicographically least monic irreducible x^2 + b x + c (ordered
    /// by (b, c)), which fixes the element encoding across runs.
    static FieldPtr make(int p, int k = 1);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }

    felt zero() const { return 0; }
    felt one() const { return 1; }

    felt add(felt a, felt b) const { return add_[a * q_ + b]; }
    felt sub(felt a, felt b) const { return add_[a * q_ + neg_[b]]; }
    felt mul(felt a, felt b) const { return mul_[a * q_ + b]; }
    felt neg(felt a) const { return neg_[a]; }
    felt inv(felt a) const;
    felt pow(felt a, long long e) const;

    /// Embeds an integer through the prime subfield.
    felt from_int(long long n) const;

    /// Reduced coefficient sequence (length k) of an element code.
    std::vector<int> coeffs(felt a) const;

    /// Monic modulus coefficients (c, b, 1) for k = 2; empty for k = 1.
    const std::vector<int>& modulus() const { return modulus_; }

    bool same(const FieldCtx& o) const {
        return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
    }

private:
    FieldCtx() = default;

    int p_ = 0, k_ = 0, q_ = 0;
    std::vector<int> modulus_;
    std::vector<felt> add_, mul_, neg_, inv_;
};

/// Dense row-major matrix over a FieldCtx.
class FMat {
public:
    FMat() = default;
    FMat(FieldPtr f, int rows, int cols);
    static FMat identity(FieldPtr f, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return f_; }

    felt& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    felt at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    FMat operator*(const FMat& o) const;
    FMat operator+(const FMat& o) const;
    FMat operator-(const FMat& o) const;
    FMat scaled(felt c) const;
    bool operator==(const FMat& o) const;
    bool operator!=(const FMat& o) const { return !(*this == o); }
    bool is_zero() const;

    std::vector<felt> row(int i) const;
    void set_row(int i, const std::vector<felt>& v);

private:
    void check_compat(const FMat& o) const;

    FieldPtr f_;
    int rows_ = 0, cols_ = 0;
    std::vector<felt> e_;
};

/// Row vector times matrix.
std::vector<felt> vec_mat(const FieldCtx& F, const std::vector<felt>& v, const FMat& A);

FMat transpose(const FMat& A);
FMat vstack(const FMat& top, const FMat& bottom);

/// Reduced row echelon form; pivot column indices appended to *pivots.
FMat rref(const FMat& A, std::vector<int>* pivots = nullptr);

int rank(const FMat& A);

/// Basis of {x : A x = 0} as rows, in reduced echelon form.
FMat kernel(const FMat& A);

/// A particular solution of A x = b, or nullopt when inconsistent.
std::optional<std::vector<felt>> solve(const FMat& A, const std::vector<felt>& b);

std::optional<FMat> inverse(const FMat& A);

/// Canonical echelon basis of the row span.
FMat row_space(const FMat& A);

/// Subtracts multiples of echelon basis rows to clear their pivot
/// coordinates of v. Basis must be in reduced echelon form.
std::vector<felt> reduce_against(const FMat& basis, const std::vector<int>& pivots,
                                 std::vector<felt> v);

/// Coordinates of v in an echelon row basis, or nullopt if outside the span.
std::optional<std::vector<felt>> express_in_rows(const FMat& basis, const std::vector<int>& pivots,
                                                 const std::vector<felt>& v);

} // namespace modp
