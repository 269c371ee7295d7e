#include "adnil/genfun.hpp"

#include <sstream>

namespace adnil {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_[0] = BigInt(c);
}

LaurentPoly LaurentPoly::monomial(int exponent, const BigInt& c) {
    LaurentPoly p;
    p.add(exponent, c);
    return p;
}

void LaurentPoly::add(int e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt LaurentPoly::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw std::logic_error("min_exponent of the zero Laurent polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw std::logic_error("max_exponent of the zero Laurent polynomial");
    return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add(ea + eb, ca * cb);
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        os << (first ? "" : " + ") << c.get_str();
        if (e != 0) os << "*s^" << e;
        first = false;
    }
    return os.str();
}

bool PowerSeries::integral() const {
    for (const auto& c : coeffs)
        if (c.get_den() != 1) return false;
    return true;
}

bool PowerSeries::nonnegative() const {
    for (const auto& c : coeffs)
        if (c < 0) return false;
    return true;
}

std::vector<BigInt> PowerSeries::integers() const {
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].get_den() != 1) throw SeriesError("coefficient of x^" + std::to_string(i) + " is not an integer");
        out.push_back(coeffs[i].get_num());
    }
    return out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r;
    const int n = static_cast<int>(std::min(a.coeffs.size(), b.coeffs.size()));
    for (int i = 0; i < n; ++i) r.coeffs.push_back(a[i] + b[i]);
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r;
    const int n = static_cast<int>(std::min(a.coeffs.size(), b.coeffs.size()));
    for (int i = 0; i < n; ++i) r.coeffs.push_back(a[i] - b[i]);
    return r;
}

IntPoly chebyshev_u(int n) {
    const IntPoly two_x = IntPoly::monomial(1, 2);
    if (n >= 0) {
        IntPoly prev(0), cur(1);  // U_{-1}, U_0
        for (int k = 0; k < n; ++k) {
            IntPoly next = two_x * cur - prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    // U_{k-1} = 2x U_k - U_{k+1}
    IntPoly above(1), cur(0);  // U_0, U_{-1}
    for (int k = -1; k > n; --k) {
        IntPoly next = two_x * cur - above;
        above = cur;
        cur = next;
    }
    return cur;
}

LaurentPoly u_tilde(int k) {
    // (2x)^m at x = 1/(2s) is s^{-m}
    const IntPoly u = chebyshev_u(k);
    LaurentPoly r;
    for (int m = 0; m <= u.degree(); ++m) {
        const BigInt c = u.coeff(m);
        if (c == 0) continue;
        BigInt q;
        const BigInt p = pow2(m);
        if (!mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t())) throw std::logic_error("U_k coefficient not divisible by 2^m");
        q = c / p;
        r += LaurentPoly::monomial(-m, q);
    }
    return r;
}

PowerSeries series_of_ratio(const LaurentPoly& num, const LaurentPoly& den, int order) {
    if (order < 0) throw std::invalid_argument("series_of_ratio: negative order");
    if (den.is_zero()) throw SeriesError("division by the zero Laurent polynomial");
    PowerSeries out;
    out.coeffs.assign(order + 1, 0);
    if (num.is_zero()) return out;

    const int dlow = den.min_exponent();
    const int nlow = num.min_exponent();
    const int shift = nlow - dlow;
    if (shift < 0) throw SeriesError("quotient has a pole at s = 0");
    const int top = 2 * order + 1;  // highest power of s examined
    const int terms = top - shift + 1;
    if (terms <= 0) return out;

    // N(s) / D(s) with D(0) != 0, as a series in s.
    std::vector<BigRational> N(terms, 0), D(terms, 0), Q(terms, 0);
    for (const auto& [e, c] : num.terms())
        if (e - nlow < terms) N[e - nlow] = c;
    for (const auto& [e, c] : den.terms())
        if (e - dlow < terms) D[e - dlow] = c;
    for (int i = 0; i < terms; ++i) {
        BigRational acc = N[i];
        for (int j = 1; j <= i; ++j)
            if (D[j] != 0) acc -= D[j] * Q[i - j];
        Q[i] = acc / D[0];
    }
    for (int i = 0; i < terms; ++i) {
        const int e = shift + i;
        if (e % 2 != 0) {
            if (Q[i] != 0) throw SeriesError("odd power s^" + std::to_string(e) + " survives in the quotient");
            continue;
        }
        if (e / 2 <= order) out.coeffs[e / 2] = Q[i];
    }
    if (!out.integral()) throw SeriesError("quotient has a noninteger coefficient");
    return out;
}

namespace {

const LaurentPoly& s_var() {
    static const LaurentPoly s = LaurentPoly::monomial(1);
    return s;
}

LaurentPoly U(int k) { return u_tilde(k); }

LaurentPoly times(long c, const LaurentPoly& p) { return LaurentPoly(c) * p; }

PowerSeries x_over_one_minus_x(int order) {
    PowerSeries r;
    r.coeffs.assign(order + 1, 1);
    r.coeffs[0] = 0;
    return r;
}

}  // namespace

PowerSeries gf_A_le(int h, int order) {
    if (h < 0) throw std::invalid_argument("gf_A_le: h must be nonnegative");
    return series_of_ratio(U(h + 1), s_var() * U(h + 2), order);
}

PowerSeries gf_C_le(int h, int order) {
    if (h < 0) throw std::invalid_argument("gf_C_le: h must be nonnegative");
    LaurentPoly num;
    for (int i = 0; i <= (h + 1) / 2; ++i) num += U(h + 1 - 2 * i);
    return series_of_ratio(num, s_var() * U(h + 2), order);
}

PowerSeries gf_B_le(int h, int order) {
    if (h < 0) throw std::invalid_argument("gf_B_le: h must be nonnegative");
    LaurentPoly num;
    if (h % 2 == 0) {
        for (int i = 1; i <= h / 2; ++i) num += times(2 * i + 1, U(2 * i - 1));
        num += times(h + 1, U(h + 1));
        for (int i = 1; i <= h / 2; ++i) num += times(2 * i, U(2 * h + 3 - 2 * i));
    } else {
        for (int i = 1; i <= (h - 1) / 2; ++i) num += times(2 * i + 1, U(2 * i - 1));
        num += times(h + 1, U(h));
        for (int i = 1; i <= (h + 1) / 2; ++i) num += times(2 * i, U(2 * h + 3 - 2 * i));
    }
    return series_of_ratio(num, U(h + 1) * U(h + 2), order);
}

PowerSeries gf_B_K(int K, int order) {
    if (K < 0) throw std::invalid_argument("gf_B_K: K must be nonnegative");
    if (K <= 1) return K == 0 ? gf_B_le(0, order) : gf_B_le(1, order) - gf_B_le(0, order);
    if (K % 2 == 0) {
        const int k = K / 2;
        const LaurentPoly num = U(2 * k) + U(k) * U(k + 1) * U(2 * k - 1);
        const LaurentPoly den = s_var() * U(2 * k) * U(2 * k + 1) * U(2 * k + 2);
        return series_of_ratio(num, den, order);
    }
    const int k = (K + 1) / 2;
    const LaurentPoly num = U(2 * k) + U(k + 1) * U(k + 1) * U(2 * k - 2) + U(k - 1) * U(k - 1) * U(2 * k - 2) + U(2);
    const LaurentPoly den = U(2 * k - 1) * U(2 * k) * U(2 * k + 1);
    return series_of_ratio(num, den, order);
}

PowerSeries gf_D_le(int h, int order) {
    if (h < 0) throw std::invalid_argument("gf_D_le: h must be nonnegative");
    if (h == 0) return x_over_one_minus_x(order);
    if (h == 1) {
        // x(1 + 2x) / (1 - 2x) = x + 4x^2 + 8x^3 + ...
        const LaurentPoly x = LaurentPoly::monomial(2);
        return series_of_ratio(x * (LaurentPoly(1) + times(2, x)), LaurentPoly(1) - times(2, x), order);
    }
    LaurentPoly inner = times(6, U(1));
    if (h % 2 == 0) {
        for (int i = 1; i <= (h - 2) / 2; ++i) inner += times(6 * i + 8, U(2 * i + 1));
        inner += times(3 * h + 4, U(h + 1));
        for (int i = 0; i <= (h - 2) / 2; ++i) inner += times(6 * i + 5, U(2 * h + 1 - 2 * i));
    } else {
        for (int i = 1; i <= (h - 3) / 2; ++i) inner += times(6 * i + 8, U(2 * i + 1));
        inner += times(3 * h + 4, U(h));
        for (int i = 0; i <= (h - 1) / 2; ++i) inner += times(6 * i + 5, U(2 * h + 1 - 2 * i));
    }
    inner += U(2 * h + 3);
    return series_of_ratio(LaurentPoly::monomial(2) * inner, U(h + 1) * U(h + 2), order);
}

PowerSeries gf_D_K(int K, int order) {
    if (K < 0) throw std::invalid_argument("gf_D_K: K must be nonnegative");
    if (K == 0) return x_over_one_minus_x(order);
    // The displayed quotients count D_{n+1} at x^n, so both branches are multiplied by x.
    const LaurentPoly x = LaurentPoly::monomial(2);
    if (K % 2 == 0) {
        const int k = K / 2;
        const LaurentPoly num =
            x * (LaurentPoly(2) - U(2 * k) + times(2, U(2 * k + 2)) + times(3, U(k) * U(k + 1) * U(2 * k - 1)));
        const LaurentPoly den = s_var() * U(2 * k) * U(2 * k + 1) * U(2 * k + 2);
        return series_of_ratio(num, den, order);
    }
    const int k = (K + 1) / 2;
    const LaurentPoly num = x * (times(2, U(2 * k + 2)) + U(2 * k) - times(3, U(2 * k - 2)) + U(k) * U(k + 1) * U(2 * k - 1) +
                                 times(4, U(k) * U(k) * U(2 * k - 2)) + U(k - 1) * U(k) * U(2 * k - 3) + LaurentPoly(2));
    const LaurentPoly den = U(2 * k - 1) * U(2 * k) * U(2 * k + 1);
    return series_of_ratio(num, den, order);
}

bool verify_cf_identity(int h, int order) {
    if (h < 0 || order < 0) throw std::invalid_argument("verify_cf_identity: negative argument");
    // f_0 = 1, f_m = 1 / (1 - x f_{m-1}), expanded as truncated series.
    std::vector<BigRational> f(order + 1, 0);
    f[0] = 1;
    for (int m = 1; m <= h; ++m) {
        // g = 1 - x f
        std::vector<BigRational> g(order + 1, 0);
        g[0] = 1;
        for (int i = 1; i <= order; ++i) g[i] = -f[i - 1];
        std::vector<BigRational> inv(order + 1, 0);
        for (int i = 0; i <= order; ++i) {
            BigRational acc = i == 0 ? BigRational(1) : BigRational(0);
            for (int j = 1; j <= i; ++j) acc -= g[j] * inv[i - j];
            inv[i] = acc / g[0];
        }
        f = std::move(inv);
    }
    const PowerSeries rhs = series_of_ratio(U(h), s_var() * U(h + 1), order);
    for (int i = 0; i <= order; ++i)
        if (f[i] != rhs[i]) return false;
    return true;
}

bool verify_product_identity(int k) {
    if (k < 0) throw std::invalid_argument("verify_product_identity: k must be nonnegative");
    IntPoly rhs;
    for (int j = 2 * k + 1; j >= 1; j -= 2) rhs += chebyshev_u(j);
    return chebyshev_u(k) * chebyshev_u(k + 1) == rhs;
}

bool verify_square_identity(int k) {
    if (k < 0) throw std::invalid_argument("verify_square_identity: k must be nonnegative");
    const IntPoly a = chebyshev_u(k + 1), b = chebyshev_u(k);
    return a * a - b * b == chebyshev_u(2 * k + 2);
}

}  // namespace adnil
