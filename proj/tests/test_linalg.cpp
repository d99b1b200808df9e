#include "doctest.h"

#include <random>

#include "klrcalc/linalg.hpp"

using namespace klrcalc;

namespace {

SparseMat to_sparse(const ZMat& a) {
    SparseMat s;
    s.ncols = zm_cols(a);
    for (int i = 0; i < zm_rows(a); ++i)
        for (int j = 0; j < s.ncols; ++j)
            if (a[i][j] != 0) s.add(i, j, a[i][j]);
    return s;
}

ZMat random_mat(std::mt19937& rng, int n, int m, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    ZMat a(n, std::vector<mpz_class>(m, 0));
    for (auto& row : a)
        for (auto& v : row) v = d(rng);
    return a;
}

// Dense rational rank, as an independent check on the sparse version.
long rank_dense_q(const ZMat& a) {
    int n = zm_rows(a), m = zm_cols(a);
    std::vector<std::vector<mpq_class>> w(n, std::vector<mpq_class>(m, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) w[i][j] = mpq_class(a[i][j]);
    long rank = 0;
    int row = 0;
    for (int col = 0; col < m && row < n; ++col) {
        int pr = -1;
        for (int i = row; i < n; ++i)
            if (w[i][col] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(w[row], w[pr]);
        for (int i = row + 1; i < n; ++i) {
            if (w[i][col] == 0) continue;
            mpq_class f = w[i][col] / w[row][col];
            for (int j = col; j < m; ++j) w[i][j] -= f * w[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("sparse rank over Q and F_p on random matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + (int)(rng() % 6), m = 1 + (int)(rng() % 6);
        ZMat a = random_mat(rng, n, m, -3, 3);
        long r = rank_q(to_sparse(a));
        CHECK(r == rank_dense_q(a));
        CHECK(rank_fp(to_sparse(a), 2) <= r);
        CHECK(rank_fp(to_sparse(a), 3) <= r);
        CHECK(rank_fp(to_sparse(a), 101) <= r);
    }
    // rank mod p drops exactly where p divides the elementary divisors
    ZMat a = {{2, 0}, {0, 3}};
    CHECK(rank_q(to_sparse(a)) == 2);
    CHECK(rank_fp(to_sparse(a), 2) == 1);
    CHECK(rank_fp(to_sparse(a), 3) == 1);
    CHECK(rank_fp(to_sparse(a), 5) == 2);
}

TEST_CASE("column Hermite basis spans the column lattice") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + (int)(rng() % 5), m = 1 + (int)(rng() % 5);
        ZMat a = random_mat(rng, n, m, -4, 4);
        ZMat h = hnf_col_basis(a);
        CHECK(zm_cols(h) == rank_dense_q(a));
        // each original column is an integral combination of the basis
        for (int j = 0; j < m; ++j) {
            std::vector<mpz_class> v(n);
            for (int i = 0; i < n; ++i) v[i] = a[i][j];
            std::vector<mpq_class> x;
            REQUIRE(solve_columns(h, v, x));
            for (auto& c : x) CHECK(c.get_den() == 1);
        }
        // and each basis column lies in the column span over Q
        for (int j = 0; j < zm_cols(h); ++j) {
            std::vector<mpz_class> v(n);
            for (int i = 0; i < n; ++i) v[i] = h[i][j];
            std::vector<mpq_class> x;
            CHECK(solve_columns(a, v, x));
        }
    }
}

TEST_CASE("integer kernel is a saturated lattice basis") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + (int)(rng() % 4), m = 1 + (int)(rng() % 5);
        ZMat a = random_mat(rng, n, m, -3, 3);
        ZMat k = z_kernel(a);
        CHECK(zm_cols(k) == m - rank_dense_q(a));
        if (zm_cols(k) > 0) {
            ZMat prod = zm_mul(a, k);
            for (auto& row : prod)
                for (auto& v : row) CHECK(v == 0);
            // saturated: the kernel basis has unit elementary divisors
            for (auto& d : snf_invariants(k)) CHECK(d == 1);
        }
    }
    // kernel of (2 4) is generated by (2,-1), not (4,-2)
    ZMat a = {{2, 4}};
    ZMat k = z_kernel(a);
    REQUIRE(zm_cols(k) == 1);
    CHECK(abs(k[0][0]) == 2);
    CHECK(abs(k[1][0]) == 1);
}

TEST_CASE("Smith invariant factors") {
    ZMat a = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    auto inv = snf_invariants(a);
    REQUIRE(inv.size() == 3);
    CHECK(inv[0] == 2);
    CHECK(inv[1] == 2);
    CHECK(inv[2] == 156);

    ZMat b = {{1, 0}, {0, 0}};
    auto inv2 = snf_invariants(b);
    REQUIRE(inv2.size() == 1);
    CHECK(inv2[0] == 1);

    // divisibility chain and product = gcd of k x k minors, random check
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + (int)(rng() % 3), m = 2 + (int)(rng() % 3);
        ZMat c = random_mat(rng, n, m, -5, 5);
        auto iv = snf_invariants(c);
        CHECK((long)iv.size() == rank_dense_q(c));
        for (std::size_t i = 1; i < iv.size(); ++i)
            CHECK(iv[i] % iv[i - 1] == 0);
    }
}

TEST_CASE("rational solve") {
    ZMat a = {{2, 0}, {0, 3}, {2, 3}};
    std::vector<mpq_class> x;
    CHECK(solve_columns(a, {1, 3, 4}, x));
    CHECK(x[0] == mpq_class(1, 2));
    CHECK(x[1] == 1);
    CHECK_FALSE(solve_columns(a, {1, 0, 0}, x));
}
