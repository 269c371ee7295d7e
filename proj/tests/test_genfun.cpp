#include "adnil/closedform.hpp"
#include "adnil/distribution.hpp"
#include "adnil/genfun.hpp"

#include <doctest.h>

using namespace adnil;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) { return std::vector<BigInt>(v.begin(), v.end()); }

}  // namespace

TEST_CASE("Chebyshev polynomials") {
    CHECK(chebyshev_u(0) == IntPoly(1));
    CHECK(chebyshev_u(1) == IntPoly::monomial(1, 2));
    CHECK(chebyshev_u(-1).is_zero());
    CHECK(chebyshev_u(-2) == IntPoly(-1));
    CHECK(chebyshev_u(3) == IntPoly::monomial(3, 8) - IntPoly::monomial(1, 4));
    for (int k = 0; k <= 12; ++k) {
        CHECK(verify_product_identity(k));
        CHECK(verify_square_identity(k));
    }
}

TEST_CASE("series of a ratio") {
    const PowerSeries a = series_of_ratio(u_tilde(2), LaurentPoly::monomial(1) * u_tilde(3), 4);
    CHECK(a.integers() == ints({1, 1, 2, 4, 8}));
    const LaurentPoly p = u_tilde(5);
    CHECK(series_of_ratio(p, p, 6).integers() == ints({1, 0, 0, 0, 0, 0, 0}));
    CHECK_THROWS_AS(series_of_ratio(LaurentPoly(1), LaurentPoly::monomial(1), 4), SeriesError);
    CHECK_THROWS_AS(series_of_ratio(LaurentPoly(1), LaurentPoly(2), 4), SeriesError);
}

TEST_CASE("continued fraction identity") {
    for (int h = 1; h <= 10; ++h) CHECK(verify_cf_identity(h, 20));
}

TEST_CASE("cumulative series") {
    CHECK(gf_A_le(0, 4).integers() == ints({1, 1, 1, 1, 1}));
    CHECK(gf_C_le(3, 6).integers() == ints({1, 2, 6, 18, 54, 162, 486}));
    const PowerSeries c2 = gf_C_le(2, 8);
    for (int n = 1; n <= 8; ++n) CHECK(c2[n] == fib_shifted(2 * n));
    const PowerSeries d1 = gf_D_le(1, 8);
    CHECK(d1.integers() == ints({0, 1, 4, 8, 16, 32, 64, 128, 256}));
    for (int n = 1; n <= 6; ++n) CHECK(gf_C_le(2 * n, 6)[n] == binomial(2 * n, n));
    for (int n = 1; n <= 8; ++n) CHECK(gf_B_le(1, 8)[n] == pow2(n));
    for (int n = 2; n <= 8; ++n) CHECK(gf_B_le(2 * n, 8)[n] == binomial(2 * n, n));
}

TEST_CASE("exact-class series") {
    CHECK(gf_D_K(0, 5).integers() == ints({0, 1, 1, 1, 1, 1}));
    CHECK(gf_B_K(0, 5).integers() == ints({0, 1, 1, 1, 1, 1}));
    for (int K = 0; K <= 8; ++K) {
        const PowerSeries b = gf_B_K(K, 8), d = gf_D_K(K, 8);
        CHECK(b.integral());
        CHECK(b.nonnegative());
        CHECK(d.integral());
        CHECK(d.nonnegative());
    }
}

TEST_CASE("series coefficients match brute force") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
        for (int n = f == Family::A ? 1 : 2; n <= 5; ++n) {
            const Distribution d = class_distribution_serial(RootSystem(LieType{f, n}), Method::Oracle);
            const int index = f == Family::A ? n + 1 : n;
            for (int h = 0; h <= 2 * n + 1; ++h) {
                const PowerSeries s = f == Family::A ? gf_A_le(h, 7)
                                      : f == Family::B ? gf_B_le(h, 7)
                                      : f == Family::C ? gf_C_le(h, 7)
                                                       : gf_D_le(h, 7);
                CAPTURE(n);
                CAPTURE(h);
                CHECK(s[index] == distribution_at_most(d, h));
                if (f == Family::B) CHECK(gf_B_K(h, 7)[n] == (d.count(h) ? d.at(h) : BigInt(0)));
                if (f == Family::D) CHECK(gf_D_K(h, 7)[n] == (d.count(h) ? d.at(h) : BigInt(0)));
            }
        }
}
