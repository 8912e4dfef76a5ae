#include "doctest.h"

#include "fpcat/linalg.hpp"
#include "test_rng.hpp"

using namespace fpcat;

TEST_CASE("solve_left over Z: forced and impossible cases") {
    auto Z = make_ZZ();
    matrix A = mat_from_ints(Z, 1, 1, {2});
    auto X = solve_left(A, mat_from_ints(Z, 1, 1, {4}));
    REQUIRE(X.has_value());
    CHECK(mat_eq(*X, mat_from_ints(Z, 1, 1, {2})));
    CHECK_FALSE(solve_left(A, mat_from_ints(Z, 1, 1, {3})).has_value());
}

TEST_CASE("row_syzygies of identity is 0 x n") {
    for (auto R : {make_QQ(), make_ZZ()}) {
        matrix I = mat_identity(R, 3);
        matrix S = row_syzygies(I);
        CHECK(S.m == 0);
        CHECK(S.n == 3);
    }
}

TEST_CASE("Z syzygies of the column (2;4) are row-equivalent to (2,-1)") {
    auto Z = make_ZZ();
    matrix A = mat_from_ints(Z, 2, 1, {2, 4});
    matrix S = row_syzygies(A);
    CHECK(mat_is_zero(mat_mul(S, A)));
    matrix target = mat_from_ints(Z, 1, 2, {2, -1});
    CHECK(solve_left(S, target).has_value());
    for (int i = 0; i < S.m; ++i)
        CHECK(solve_left(target, mat_row(S, i)).has_value());
}

TEST_CASE("degenerate matrices are handled everywhere") {
    auto Z = make_ZZ();
    matrix e0n = mat_zero(Z, 0, 3);
    matrix em0 = mat_zero(Z, 3, 0);
    CHECK(row_syzygies(e0n).m == 0);
    matrix S = row_syzygies(em0);
    CHECK(mat_eq(S, mat_identity(Z, 3)));
    auto X = solve_left(em0, mat_zero(Z, 2, 0));
    REQUIRE(X.has_value());
    CHECK(X->m == 2);
    CHECK(X->n == 3);
    CHECK_FALSE(solve_left(e0n, mat_from_ints(Z, 1, 3, {1, 0, 0})).has_value());
}

TEST_CASE("smith normal form basics") {
    auto Z = make_ZZ();
    SUBCASE("identity") {
        snf_result s = smith_normal_form(mat_identity(Z, 3));
        CHECK(mat_eq(s.S, mat_identity(Z, 3)));
    }
    SUBCASE("already diagonal 4") {
        snf_result s = smith_normal_form(mat_from_ints(Z, 1, 1, {4}));
        CHECK(mat_eq(s.S, mat_from_ints(Z, 1, 1, {4})));
    }
    SUBCASE("diag(2,3) becomes diag(1,6)") {
        matrix A = mat_from_ints(Z, 2, 2, {2, 0, 0, 3});
        snf_result s = smith_normal_form(A);
        CHECK(mat_eq(s.S, mat_from_ints(Z, 2, 2, {1, 0, 0, 6})));
        CHECK(mat_eq(mat_mul(mat_mul(s.U, A), s.V), s.S));
    }
}

static bool is_unimodular(const matrix& U) {
    hnf_result h = hermite_normal_form(U);
    return mat_eq(h.H, mat_identity(U.R, U.m));
}

TEST_CASE("smith normal form on random matrices: transformation identities") {
    auto Z = make_ZZ();
    test_rng rng(7);
    for (int t = 0; t < 100; ++t) {
        int m = 1 + rng.below(5), n = 1 + rng.below(5);
        matrix A(Z, m, n);
        for (int i = 0; i < m * n; ++i) A.e[i] = ring_from_int(*Z, rng.range(-10, 10));
        snf_result s = smith_normal_form(A);
        CHECK(mat_eq(mat_mul(mat_mul(s.U, A), s.V), s.S));
        CHECK(is_unimodular(s.U));
        CHECK(is_unimodular(s.V));
        int k = std::min(m, n);
        bigint prev;
        bool first = true;
        for (int i = 0; i < k; ++i) {
            bigint d = std::get<bigint>(s.S.at(i, i).v);
            CHECK(d >= 0);
            if (!first) {
                if (prev == 0) CHECK(d == 0);
                else CHECK(d % prev == 0);
            }
            for (int j = 0; j < s.S.n; ++j)
                if (j != i) CHECK(std::get<bigint>(s.S.at(i, j).v) == 0);
            prev = d;
            first = false;
        }
    }
}

TEST_CASE("solve_left and syzygies: random property suite over Q and Z") {
    test_rng rng(11);
    for (auto R : {make_QQ(), make_ZZ()}) {
        for (int t = 0; t < 60; ++t) {
            int m = 1 + rng.below(4), n = 1 + rng.below(4);
            matrix A(R, m, n);
            for (int i = 0; i < m * n; ++i) A.e[i] = ring_from_int(*R, rng.range(-5, 5));
            // rows built inside the row span must solve
            matrix C(R, 2, m);
            for (int i = 0; i < 2 * m; ++i) C.e[i] = ring_from_int(*R, rng.range(-3, 3));
            matrix B = mat_mul(C, A);
            auto X = solve_left(A, B);
            REQUIRE(X.has_value());
            CHECK(mat_eq(mat_mul(*X, A), B));
            // syzygies annihilate and generate
            matrix S = row_syzygies(A);
            CHECK(mat_is_zero(mat_mul(S, A)));
            if (S.m > 0) {
                matrix r(R, 1, S.m);
                for (int i = 0; i < S.m; ++i) r.e[i] = ring_from_int(*R, rng.range(-3, 3));
                matrix v = mat_mul(r, S);
                auto Y = solve_left(S, v);
                REQUIRE(Y.has_value());
                CHECK(mat_eq(mat_mul(*Y, S), v));
            }
        }
    }
}
