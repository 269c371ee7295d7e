#include "adnil/closedform.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace adnil {

IntPoly t_binomial(int m, int n) {
    if (n == 0) return IntPoly(1);
    if (n < 0 || m < n) return IntPoly();
    // row[k] = [r choose k]_t, built with [r, k] = [r-1, k-1] + t^k [r-1, k]
    std::vector<IntPoly> row(n + 1);
    row[0] = IntPoly(1);
    for (int r = 1; r <= m; ++r)
        for (int k = std::min(r, n); k >= 1; --k) row[k] = row[k - 1] + row[k].shifted(k);
    return row[n];
}

namespace {

// Visits every strictly increasing sequence of `count` integers in [lo, hi].
void for_each_chain(int count, int lo, int hi, std::vector<int>& cur, const std::function<void()>& f) {
    if (count == 0) {
        f();
        return;
    }
    for (int v = lo; v <= hi - count + 1; ++v) {
        cur.push_back(v);
        for_each_chain(count - 1, v + 1, hi, cur, f);
        cur.pop_back();
    }
}

IntPoly t_power(long e) {
    if (e < 0) throw std::logic_error("negative t-exponent " + std::to_string(e) + " in a (q,t) sum");
    return IntPoly::monomial(static_cast<int>(e));
}

long choose2(long m) { return m * (m - 1) / 2; }

}  // namespace

BigInt alpha_A(int n, int K) {
    if (n < 0 || K < 0) throw std::invalid_argument("alpha_A: n and K must be nonnegative");
    if (K > n) return 0;
    BigInt total = 0;
    std::vector<int> inner;
    for_each_chain(K, 1, n, inner, [&] {
        std::vector<int> i{0};
        i.insert(i.end(), inner.begin(), inner.end());
        i.push_back(n + 1);
        BigInt term = 1;
        for (int j = 0; j <= K - 1 && term != 0; ++j) term *= binomial(i[j + 2] - i[j] - 1, i[j + 1] - i[j]);
        total += term;
    });
    return total;
}

QTPoly catalan_qt(int n) {
    if (n < 0) throw std::invalid_argument("catalan_qt: n must be nonnegative");
    QTPoly out;
    for (int K = 0; K <= n; ++K) {
        IntPoly sum;
        std::vector<int> inner;
        for_each_chain(K, 1, n, inner, [&] {
            std::vector<int> i{0};
            i.insert(i.end(), inner.begin(), inner.end());
            i.push_back(n + 1);
            i.push_back(n + 2);
            IntPoly term(1);
            for (int j = 0; j <= K - 1 && !term.is_zero(); ++j)
                term = term * t_power(static_cast<long>(i[j + 1]) * (i[j + 3] - i[j + 2])) *
                       t_binomial(i[j + 2] - i[j] - 1, i[j + 1] - i[j]);
            sum += term;
        });
        out.add(K, sum);
    }
    return out;
}

namespace {

// Chains i_1 < ... < i_{k+1} = n with i_2 >= 1, indexed from 1, padded with
// i_m = n + 1 for m >= k + 2. `odd` selects -i_2 < i_1 <= 0, otherwise 0 < i_1
// (or -i_2 < i_1 < i_2 when `both`).
void for_each_c_chain(int n, int k, const std::function<void(const std::vector<int>&)>& f, int mode) {
    // mode: 0 -> i_1 > 0, 1 -> i_1 <= 0, 2 -> any i_1 with -i_2 < i_1 < i_2
    if (k == 0) {
        // the chain is i_1 = n alone
        if (mode == 1) return;
        std::vector<int> i{0, n, n + 1, n + 1, n + 1};
        f(i);
        return;
    }
    std::vector<int> middle;  // i_2 .. i_k, strictly inside (0, n)
    for_each_chain(k - 1, 1, n - 1, middle, [&] {
        std::vector<int> i(k + 5, n + 1);
        i[0] = 0;  // unused slot, keeps 1-based indexing
        for (int j = 0; j < k - 1; ++j) i[j + 2] = middle[j];
        i[k + 1] = n;
        const int i2 = i[2];
        int lo = -i2 + 1, hi = i2 - 1;
        if (mode == 0) lo = 1;
        if (mode == 1) hi = 0;
        for (int i1 = lo; i1 <= hi; ++i1) {
            i[1] = i1;
            f(i);
        }
    });
}

}  // namespace

BigInt gamma_C(int n, int K) {
    if (n < 0 || K < 0) throw std::invalid_argument("gamma_C: n and K must be nonnegative");
    if (n == 0) return K == 0 ? 1 : 0;
    BigInt total = 0;
    const bool even = K % 2 == 0;
    const int k = even ? K / 2 : (K + 1) / 2;
    if (k > n) return 0;
    for_each_c_chain(
        n, k,
        [&](const std::vector<int>& i) {
            BigInt term = 1;
            for (int j = 1; j <= k - 1 && term != 0; ++j) term *= binomial(i[j + 2] - i[j] - 1, i[j + 1] - i[j]);
            if (term == 0) return;
            if (even) {
                BigInt inner = 0;
                for (int l = 0; l <= i[2] - i[1] - 1; ++l) inner += binomial(i[1] + i[2] - 1, l);
                term *= inner;
            } else {
                term *= pow2(i[1] + i[2] - 1);
            }
            total += term;
        },
        even ? 0 : 1);
    return total;
}

IntPoly inner_sum_qt(int i1, int i2) {
    IntPoly sum;
    for (int l = 0; l <= i2 - i1 - 1; ++l) sum += t_binomial(i1 + i2 - 1, l) * t_power(choose2(l + 1));
    return sum;
}

IntPoly inner_product_qt(int i1, int i2) {
    IntPoly p(1);
    for (int j = 1; j <= i1 + i2 - 1; ++j) p = p * (IntPoly(1) + IntPoly::monomial(j));
    return p;
}

QTPoly gamma_qt(int n) {
    if (n < 1) throw std::invalid_argument("gamma_qt: n must be at least 1");
    QTPoly out;
    for (int k = 0; k <= n; ++k) {
        for_each_c_chain(
            n, k,
            [&](const std::vector<int>& i) {
                // Individual factors may carry negative powers of t; only the
                // total exponent of each summand has to be nonnegative.
                IntPoly term(1);
                long exponent = 0;
                for (int j = 1; j <= k - 1 && !term.is_zero(); ++j) {
                    exponent += static_cast<long>(i[j + 1] + n) * (i[j + 3] - i[j + 2]);
                    term = term * t_binomial(i[j + 2] - i[j] - 1, i[j + 1] - i[j]);
                }
                if (term.is_zero()) return;
                exponent += static_cast<long>(i[1] + n) * (i[3] - i[2]) - choose2(n - i[2] + 1);
                IntPoly inner;
                for (int l = 0; l <= i[2] - i[1] - 1; ++l)
                    inner += t_binomial(i[1] + i[2] - 1, l) * t_power(choose2(l + 1));
                const int qdeg = 2 * k - (i[1] <= 0 ? 1 : 0);
                out.add(qdeg, (term * inner).shifted(static_cast<int>(exponent < 0 ? 0 : exponent)));
                if (exponent < 0) throw std::logic_error("negative t-exponent in a (q,t) summand");
            },
            2);
    }
    return out;
}

BigInt c4_count(int n, int h) {
    if (n < 0 || h < 0) throw std::invalid_argument("c4_count: n and h must be nonnegative");
    // Paths of height at most H = h + 1 between the walls y = -1 and y = H + 1.
    const int H = h + 1;
    const int period = H + 2;
    BigRational total = 0;
    for (int s = 0; s <= H / 2; ++s) {
        // binomial(2n+1, n-s-k*period) vanishes unless 0 <= n-s-k*period <= 2n+1
        for (int k = -(2 * n + 2); k <= 2 * n + 2; ++k) {
            const long lower = static_cast<long>(n) - s - static_cast<long>(k) * period;
            if (lower < 0 || lower > 2 * n + 1) continue;
            BigRational term(BigInt(1 + 2 * s + 2 * k * period) * binomial(2 * n + 1, lower), BigInt(2 * n + 1));
            term.canonicalize();
            total += term;
        }
    }
    if (total.get_den() != 1) throw std::logic_error("c4_count: sum is not an integer");
    return total.get_num();
}

namespace {

BigInt paths_within(int length, int cap, bool return_to_axis) {
    if (cap < 0) return 0;
    std::vector<BigInt> cur(cap + 1, 0), next(cap + 1, 0);
    cur[0] = 1;
    for (int step = 0; step < length; ++step) {
        for (auto& v : next) v = 0;
        for (int y = 0; y <= cap; ++y) {
            if (cur[y] == 0) continue;
            if (y + 1 <= cap) next[y + 1] += cur[y];
            if (y - 1 >= 0) next[y - 1] += cur[y];
        }
        std::swap(cur, next);
    }
    if (return_to_axis) return cur[0];
    BigInt s = 0;
    for (const auto& v : cur) s += v;
    return s;
}

}  // namespace

BigInt path_count_height(int length, int height, bool return_to_axis) {
    if (length < 0) throw std::invalid_argument("path_count_height: negative length");
    if (return_to_axis && length % 2 != 0) throw std::invalid_argument("path_count_height: Dyck paths need even length");
    if (height < 0) return 0;
    return paths_within(length, height, return_to_axis) - paths_within(length, height - 1, return_to_axis);
}

BigInt fib_shifted(int m) {
    if (m < -1) throw std::invalid_argument("fib_shifted: index below -1");
    BigInt a = 0, b = 1;  // F_{-1}, F_0
    for (int i = 0; i < m; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return m == -1 ? a : b;
}

BigInt corollary_values(Family family, int n, int h) {
    if (h != 2 && h != 3) throw std::invalid_argument("corollary_values: h must be 2 or 3");
    const int min_rank = family == Family::D ? 2 : 1;
    if (n < min_rank) throw std::invalid_argument("corollary_values: rank below " + std::to_string(min_rank));
    switch (family) {
        case Family::A:
            return h == 2 ? fib_shifted(2 * n) : BigInt((pow_ui(3, n) + 1) / 2);
        case Family::C:
            return h == 2 ? fib_shifted(2 * n) : BigInt(2 * pow_ui(3, n - 1));
        case Family::B:
            if (h == 2) return fib_shifted(2 * n) + fib_shifted(2 * n - 2) - pow2(n - 1);
            return BigInt((5 * pow_ui(3, n - 1) + 1) / 2) - fib_shifted(2 * n - 2);
        case Family::D:
            if (h == 2) return 5 * fib_shifted(2 * n - 3) - pow2(n - 2);
            return BigInt((13 * pow_ui(3, n - 2) - 3) / 2) + 4 * fib_shifted(2 * n) - 7 * fib_shifted(2 * n - 1);
        default:
            throw std::invalid_argument("corollary_values: family must be A, B, C or D");
    }
}

}  // namespace adnil
