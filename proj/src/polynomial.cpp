#include "adnil/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace adnil {

IntPoly::IntPoly(long c) {
    if (c != 0) c_.push_back(BigInt(c));
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(int degree, const BigInt& c) {
    if (degree < 0) throw std::invalid_argument("IntPoly::monomial: negative degree");
    std::vector<BigInt> v(degree + 1, 0);
    v[degree] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::shifted(int by) const {
    if (by < 0) throw std::invalid_argument("IntPoly::shifted: negative shift");
    if (is_zero()) return *this;
    std::vector<BigInt> r(by, 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return IntPoly(std::move(r));
}

std::string IntPoly::str(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < c_.size(); ++d) {
        if (c_[d] == 0) continue;
        BigInt mag = abs(c_[d]);
        os << (c_[d] < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (mag != 1 || d == 0) os << mag.get_str();
        if (d >= 1) os << var;
        if (d >= 2) os << '^' << d;
        first = false;
    }
    return os.str();
}

void QTPoly::add(int qdeg, int tdeg, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({qdeg, tdeg}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void QTPoly::add(int qdeg, const IntPoly& p) {
    for (int d = 0; d <= p.degree(); ++d) add(qdeg, d, p.coeff(d));
}

BigInt QTPoly::coeff(int qdeg, int tdeg) const {
    auto it = terms_.find({qdeg, tdeg});
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt QTPoly::eval(const BigInt& q, const BigInt& t) const {
    BigInt r = 0;
    for (const auto& [k, c] : terms_) {
        BigInt qp, tp;
        mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k.first));
        mpz_pow_ui(tp.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k.second));
        r += c * qp * tp;
    }
    return r;
}

std::vector<BigInt> QTPoly::at_t_one() const {
    std::vector<BigInt> r;
    for (const auto& [k, c] : terms_) {
        if (k.first >= static_cast<int>(r.size())) r.resize(k.first + 1, 0);
        r[k.first] += c;
    }
    return r;
}

int QTPoly::t_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

}  // namespace adnil
