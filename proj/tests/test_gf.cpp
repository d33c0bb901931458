#include "doctest.h"

#include <random>

#include "modp/gf.hpp"

using namespace modp;

namespace {

// Independent row-reduction oracle: plain Gaussian elimination rank,
// written against the naive definition, no pivot normalization shared
// with the library path.
int oracle_rank(const FMat& A) {
    const FieldCtx& F = *A.field();
    std::vector<std::vector<felt>> m(A.rows(), std::vector<felt>(A.cols()));
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) m[i][j] = A.at(i, j);
    int rank = 0;
    for (int col = 0; col < A.cols(); ++col) {
        int pivot = -1;
        for (int row = rank; row < A.rows(); ++row)
            if (m[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        for (int row = 0; row < A.rows(); ++row) {
            if (row == rank || m[row][col] == 0) continue;
            felt f = F.mul(m[row][col], F.inv(m[rank][col]));
            for (int j = 0; j < A.cols(); ++j) m[row][j] = F.sub(m[row][j], F.mul(f, m[rank][j]));
        }
        ++rank;
    }
    return rank;
}

FMat random_matrix(const FieldPtr& F, int rows, int cols, std::mt19937& rng) {
    FMat A(F, rows, cols);
    std::uniform_int_distribution<int> dist(0, F->q() - 1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) A.at(i, j) = static_cast<felt>(dist(rng));
    return A;
}

} // namespace

TEST_CASE("field_make basics and errors") {
    auto F5 = FieldCtx::make(5, 1);
    CHECK(F5->q() == 5);
    CHECK(F5->add(3, 4) == 2);
    CHECK(F5->mul(3, 4) == 2);
    CHECK(F5->inv(2) == 3);

    CHECK_THROWS_AS(FieldCtx::make(4, 1), Error);
    CHECK_THROWS_AS(FieldCtx::make(2, 1), Error);
    CHECK_THROWS_AS(FieldCtx::make(5, 3), Error);
    try {
        FieldCtx::make(4, 1);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrKind::NonPrime);
    }
    try {
        FieldCtx::make(2, 2);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrKind::EvenPrimeUnsupported);
    }
}

TEST_CASE("F9 modulus is the least irreducible monic quadratic") {
    auto F9 = FieldCtx::make(3, 2);
    CHECK(F9->q() == 9);
    // oracle: enumerate monic x^2 + b x + c by (b, c) and take the first
    // with no root in F_3
    int eb = -1, ec = -1;
    for (int b = 0; b < 3 && eb < 0; ++b)
        for (int c = 0; c < 3 && eb < 0; ++c) {
            bool has_root = false;
            for (int x = 0; x < 3; ++x)
                if ((x * x + b * x + c) % 3 == 0) has_root = true;
            if (!has_root) {
                eb = b;
                ec = c;
            }
        }
    CHECK(F9->modulus() == std::vector<int>{ec, eb, 1});
}

TEST_CASE("field axioms exhaustively for q <= 9") {
    for (auto [p, k] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
        auto F = FieldCtx::make(p, k);
        const int q = F->q();
        for (int a = 0; a < q; ++a) {
            CHECK(F->add(a, 0) == a);
            CHECK(F->mul(a, 1) == a);
            CHECK(F->add(a, F->neg(a)) == 0);
            if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(F->add(a, b) == F->add(b, a));
                CHECK(F->mul(a, b) == F->mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
                    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("kernel and rank basics") {
    auto F3 = FieldCtx::make(3, 1);
    FMat I3 = FMat::identity(F3, 3);
    CHECK(kernel(I3).rows() == 0);
    CHECK(rank(I3) == 3);

    FMat Z(F3, 2, 2);
    FMat K = kernel(Z);
    CHECK(K.rows() == 2);
    CHECK(rank(K) == 2);
}

TEST_CASE("rank-nullity on random matrices with oracle rank") {
    std::mt19937 rng(20240811);
    auto F5 = FieldCtx::make(5, 1);
    for (int trial = 0; trial < 50; ++trial) {
        FMat A = random_matrix(F5, 4, 6, rng);
        int r = rank(A);
        CHECK(r == oracle_rank(A));
        FMat K = kernel(A);
        CHECK(r + K.rows() == 6);
        // every kernel row solves A x = 0
        for (int i = 0; i < K.rows(); ++i) {
            std::vector<felt> x = K.row(i);
            for (int row = 0; row < A.rows(); ++row) {
                felt acc = 0;
                for (int j = 0; j < A.cols(); ++j)
                    acc = F5->add(acc, F5->mul(A.at(row, j), x[j]));
                CHECK(acc == 0);
            }
        }
    }
}

TEST_CASE("echelon output is idempotent") {
    std::mt19937 rng(7);
    for (auto [p, k] : {std::pair{3, 1}, {7, 1}, {3, 2}}) {
        auto F = FieldCtx::make(p, k);
        for (int trial = 0; trial < 20; ++trial) {
            FMat A = random_matrix(F, 3, 5, rng);
            FMat R = row_space(A);
            CHECK(row_space(R) == R);
            FMat K = kernel(A);
            CHECK(rref(K) == K);
        }
    }
}

TEST_CASE("solve returns a solution iff consistent") {
    auto F7 = FieldCtx::make(7, 1);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        FMat A = random_matrix(F7, 3, 4, rng);
        std::vector<felt> x0(4);
        std::uniform_int_distribution<int> dist(0, 6);
        for (auto& v : x0) v = static_cast<felt>(dist(rng));
        std::vector<felt> b(3, 0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 4; ++j) b[i] = F7->add(b[i], F7->mul(A.at(i, j), x0[j]));
        auto sol = solve(A, b);
        REQUIRE(sol.has_value());
        for (int i = 0; i < 3; ++i) {
            felt acc = 0;
            for (int j = 0; j < 4; ++j) acc = F7->add(acc, F7->mul(A.at(i, j), (*sol)[j]));
            CHECK(acc == b[i]);
        }
    }
    // inconsistent system
    FMat A(F7, 2, 1);
    A.at(0, 0) = 1;
    A.at(1, 0) = 1;
    CHECK_FALSE(solve(A, {1, 2}).has_value());
}

TEST_CASE("inverse round trip and extension-field matrices") {
    auto F9 = FieldCtx::make(3, 2);
    std::mt19937 rng(13);
    int found = 0;
    for (int trial = 0; trial < 60 && found < 10; ++trial) {
        FMat A = random_matrix(F9, 3, 3, rng);
        auto inv = inverse(A);
        if (!inv) continue;
        ++found;
        CHECK(A * *inv == FMat::identity(F9, 3));
        CHECK(*inv * A == FMat::identity(F9, 3));
    }
    CHECK(found > 0);
}
