#pragma once

#include <gmpxx.h>

#include <string>

namespace adnil {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Binomial coefficient C(n, k); zero when k < 0, k > n or n < 0.
inline BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline BigInt pow2(long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

inline BigInt pow_ui(unsigned long base, unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

}  // namespace adnil
