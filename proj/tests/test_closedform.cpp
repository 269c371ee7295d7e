#include "adnil/closedform.hpp"
#include "adnil/distribution.hpp"

#include <doctest.h>

using namespace adnil;

TEST_CASE("t-binomials") {
    IntPoly expected;
    for (int e : {0, 1, 2, 2, 3, 4}) expected += IntPoly::monomial(e);
    CHECK(t_binomial(4, 2) == expected);
    CHECK(t_binomial(4, 2).eval(1) == 6);
    CHECK(t_binomial(7, 0) == IntPoly(1));
    CHECK(t_binomial(2, 5).is_zero());
    for (int m = 0; m <= 10; ++m)
        for (int k = 0; k <= m; ++k) CHECK(t_binomial(m, k).eval(1) == binomial(m, k));
}

TEST_CASE("chain sums match brute force") {
    for (int n = 1; n <= 6; ++n) {
        const Distribution a = class_distribution_serial(RootSystem(LieType{Family::A, n}), Method::Oracle);
        for (const auto& [K, v] : a) CHECK(alpha_A(n, K) == v);
        CHECK(alpha_A(n, n + 1) == 0);
    }
    for (int n = 2; n <= 6; ++n) {
        const Distribution c = class_distribution_serial(RootSystem(LieType{Family::C, n}), Method::Oracle);
        for (const auto& [K, v] : c) CHECK(gamma_C(n, K) == v);
        CHECK(gamma_C(n, 2 * n + 1) == 0);
    }
}

TEST_CASE("(q,t) polynomials") {
    QTPoly c0 = catalan_qt(0);
    CHECK(c0.eval(5, 7) == 1);
    QTPoly c1 = catalan_qt(1);
    CHECK(c1.coeff(0, 0) == 1);
    CHECK(c1.coeff(1, 1) == 1);
    CHECK(c1.eval(1, 1) == 2);
    for (int n = 1; n <= 7; ++n) CHECK(catalan_qt(n).eval(1, 1) == binomial(2 * n + 2, n + 1) / (n + 2));
    for (int n = 1; n <= 6; ++n) {
        CHECK(gamma_qt(n).eval(1, 1) == binomial(2 * n, n));
        BigInt total = 0;
        for (const BigInt& v : gamma_qt(n).at_t_one()) total += v;
        CHECK(total == binomial(2 * n, n));
    }
}

TEST_CASE("inner sum identity") {
    for (int i2 = 1; i2 <= 8; ++i2)
        for (int i1 = -i2 + 1; i1 <= 0; ++i1) CHECK(inner_sum_qt(i1, i2) == inner_product_qt(i1, i2));
}

TEST_CASE("reflection double sum") {
    for (int n = 1; n <= 7; ++n) {
        CHECK(c4_count(n, 0) == 1);
        CHECK(c4_count(n, 1) == pow2(n));
        CHECK(c4_count(n, 2) == fib_shifted(2 * n));
        CHECK(c4_count(n, 3) == 2 * pow_ui(3, n - 1));
        CHECK(c4_count(n, 2 * n) == binomial(2 * n, n));
    }
}

TEST_CASE("path counts") {
    CHECK(path_count_height(2, 1, true) == 1);
    CHECK(path_count_height(0, 0, true) == 1);
    CHECK(path_count_height(4, 1, false) == 1);
    BigInt sum = 0;
    for (int h = 0; h <= 6; ++h) sum += path_count_height(6, h, false);
    CHECK(sum == binomial(6, 3));
    CHECK_THROWS_AS(path_count_height(3, 1, true), std::invalid_argument);
}

TEST_CASE("Fibonacci convention") {
    CHECK(fib_shifted(-1) == 0);
    CHECK(fib_shifted(0) == 1);
    CHECK(fib_shifted(1) == 1);
    CHECK(fib_shifted(2) == 2);
    CHECK(fib_shifted(3) == 3);
    CHECK(fib_shifted(10) == 89);
}

TEST_CASE("corollary values") {
    CHECK(corollary_values(Family::A, 2, 3) == 5);
    CHECK(corollary_values(Family::D, 2, 2) == 4);
    CHECK(corollary_values(Family::C, 1, 2) == 2);
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
        for (int n = 3; n <= 4; ++n) {
            const Distribution d = class_distribution_serial(RootSystem(LieType{f, n}), Method::Oracle);
            CHECK(corollary_values(f, n, 2) == distribution_at_most(d, 2));
            CHECK(corollary_values(f, n, 3) == distribution_at_most(d, 3));
        }
    CHECK_THROWS_AS(corollary_values(Family::A, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(corollary_values(Family::D, 1, 2), std::invalid_argument);
}
