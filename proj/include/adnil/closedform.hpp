#pragma once

#include "adnil/bigint.hpp"
#include "adnil/polynomial.hpp"
#include "adnil/rootsys.hpp"

namespace adnil {

// Gaussian binomial [m choose n]_t; 1 when n = 0, 0 unless m >= n >= 0.
IntPoly t_binomial(int m, int n);

// Type A_n ideals with class K, as a sum over chains 0 = i_0 < i_1 < ... < i_K < i_{K+1} = n + 1.
BigInt alpha_A(int n, int K);

// Sum over ideals of A_n of t^dim q^class.
QTPoly catalan_qt(int n);

// Type C_n ideals with class K (separate chain sums for even and odd K).
BigInt gamma_C(int n, int K);

// Sum over ideals of C_n of t^dim q^class.
QTPoly gamma_qt(int n);

// sum_{l=0}^{i2-i1-1} [i1+i2-1 choose l]_t t^{l(l+1)/2}, the inner sum used for i1 <= 0.
IntPoly inner_sum_qt(int i1, int i2);
// (1 + t)(1 + t^2) ... (1 + t^{i1+i2-1}).
IntPoly inner_product_qt(int i1, int i2);

// Type C_n ideals with class at most h, by the reflection-principle double sum
// for free paths of length 2n and height at most h + 1.
BigInt c4_count(int n, int h);

// Up/down lattice paths that stay at or above zero with maximum ordinate
// exactly `height`; Dyck paths when `return_to_axis`, otherwise any endpoint.
BigInt path_count_height(int length, int height, bool return_to_axis);

// Fibonacci numbers indexed so that F_{-1} = 0, F_0 = 1, F_1 = 1, F_2 = 2, F_3 = 3.
BigInt fib_shifted(int m);

// Closed forms for the number of ideals of class at most h (h = 2 or 3).
BigInt corollary_values(Family family, int n, int h);

}  // namespace adnil
