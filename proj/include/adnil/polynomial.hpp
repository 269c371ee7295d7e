#pragma once

#include "adnil/bigint.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace adnil {

// Dense univariate polynomial with big integer coefficients; index = degree.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long c);  // constant
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly monomial(int degree, const BigInt& c = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    BigInt coeff(int d) const { return d >= 0 && d < static_cast<int>(c_.size()) ? c_[d] : BigInt(0); }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt eval(const BigInt& x) const;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly shifted(int by) const;  // multiply by t^by, by >= 0

    std::string str(char var = 't') const;
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void trim();
    std::vector<BigInt> c_;
};

// Polynomial in q and t; key = (q-degree, t-degree).
class QTPoly {
public:
    using Key = std::pair<int, int>;

    QTPoly() = default;

    void add(int qdeg, int tdeg, const BigInt& c);
    // Adds q^qdeg * p(t).
    void add(int qdeg, const IntPoly& p);
    BigInt coeff(int qdeg, int tdeg) const;
    BigInt eval(const BigInt& q, const BigInt& t) const;
    // The polynomial in q obtained at t = 1; index = q-degree.
    std::vector<BigInt> at_t_one() const;
    int t_degree() const;
    const std::map<Key, BigInt>& terms() const { return terms_; }

    friend bool operator==(const QTPoly&, const QTPoly&) = default;

private:
    std::map<Key, BigInt> terms_;
};

}  // namespace adnil
