#pragma once

#include "adnil/bigint.hpp"
#include "adnil/polynomial.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace adnil {

// Thrown when a generating function does not expand to an integer series in x.
class SeriesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Laurent polynomial in s with big integer coefficients, where s^2 = x.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);
    static LaurentPoly monomial(int exponent, const BigInt& c = 1);

    bool is_zero() const { return terms_.empty(); }
    BigInt coeff(int e) const;
    int min_exponent() const;  // requires nonzero
    int max_exponent() const;
    const std::map<int, BigInt>& terms() const { return terms_; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    std::string str() const;

private:
    void add(int e, const BigInt& c);
    std::map<int, BigInt> terms_;
};

// Truncated power series in x with rational coefficients; index = power of x.
struct PowerSeries {
    std::vector<BigRational> coeffs;

    BigRational operator[](int i) const { return i >= 0 && i < static_cast<int>(coeffs.size()) ? coeffs[i] : BigRational(0); }
    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    bool integral() const;
    bool nonnegative() const;
    // Integer coefficients; throws SeriesError if any coefficient is fractional.
    std::vector<BigInt> integers() const;

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;
};

// Chebyshev polynomial of the second kind, U_n(x); U_{-1} = 0, U_{-2} = -1, and
// further negative indices by running the recurrence backwards.
IntPoly chebyshev_u(int n);

// U_k(1 / (2 sqrt x)) as a Laurent polynomial in s = sqrt x.
LaurentPoly u_tilde(int k);

// Expands num / den as a series in x = s^2 through x^order. Throws SeriesError
// if the quotient has odd powers of s, negative powers, or noninteger coefficients.
PowerSeries series_of_ratio(const LaurentPoly& num, const LaurentPoly& den, int order);

// Ideals of class at most h, indexed by rank.
PowerSeries gf_A_le(int h, int order);  // coefficient of x^{n+1} counts A_n; constant term 1
PowerSeries gf_C_le(int h, int order);
PowerSeries gf_B_le(int h, int order);
PowerSeries gf_D_le(int h, int order);
// Ideals of class exactly K, indexed by rank.
PowerSeries gf_B_K(int K, int order);
PowerSeries gf_D_K(int K, int order);

// Compares the depth-h continued fraction 1/(1 - x/(1 - x/...)) with
// U~_h / (sqrt x U~_{h+1}) through x^order.
bool verify_cf_identity(int h, int order);
// U_k U_{k+1} = U_{2k+1} + U_{2k-1} + ... + U_1.
bool verify_product_identity(int k);
// U_{k+1}^2 - U_k^2 = U_{2k+2}.
bool verify_square_identity(int k);

}  // namespace adnil
