#include "adnil/nilpotence.hpp"

#include <algorithm>

namespace adnil {

int nilpotence_oracle(const RootSystem& rs, const IdealSet& ideal) {
    if (ideal.empty()) return 0;
    const auto theta = rs.highest_root();
    RootMask power = ideal;
    int k = 1;
    while (true) {
        if (theta && !power.test(*theta))
            throw InvariantError("nonempty power of an ideal misses the highest root in " + rs.lie_type().name());
        RootMask next;
        power.for_each([&](int a) {
            for (const auto& e : rs.sum_partners(a))
                if (ideal.test(e.partner)) next.set(e.sum);
        });
        if (next.empty()) return k;
        power = next;
        ++k;
    }
}

namespace {

void require_family(const RootSystem& rs, std::initializer_list<Family> allowed, const char* what) {
    for (Family f : allowed)
        if (rs.lie_type().family == f) return;
    throw std::invalid_argument(std::string(what) + ": not defined for type " + rs.lie_type().name());
}

}  // namespace

Partition ideal_to_partition_A(const RootSystem& rs, const IdealSet& ideal) {
    require_family(rs, {Family::A}, "ideal_to_partition_A");
    const int n = rs.rank();
    std::vector<int> parts(n, 0);
    for (int i = 1; i <= n; ++i) {
        int len = 0;
        while (len < n - i + 1 && ideal.test(*rs.root_at({i, len + 1}))) ++len;
        for (int j = len + 1; j <= n - i + 1; ++j)
            if (ideal.test(*rs.root_at({i, j}))) throw InvariantError("ideal cells do not form a Ferrers diagram");
        parts[i - 1] = len;
    }
    Partition p(parts);
    if (!p.valid()) throw InvariantError("ideal cells do not form a Ferrers diagram");
    return p;
}

IdealSet partition_to_ideal_A(const RootSystem& rs, const Partition& p) {
    require_family(rs, {Family::A}, "partition_to_ideal_A");
    if (!p.fits_staircase(rs.rank())) throw std::invalid_argument("partition " + p.str() + " exceeds the staircase");
    IdealSet ideal;
    for (int i = 1; i <= rs.rank(); ++i)
        for (int j = 1; j <= p[i]; ++j) ideal.set(*rs.root_at({i, j}));
    return ideal;
}

Filling::Filling(int n) : n_(n), rows_(std::max(n, 0)) {
    for (int i = 1; i <= n; ++i) rows_[i - 1].assign(n - i + 1, 0);
}

int Filling::at(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_ - i + 1) return 0;
    return rows_[i - 1][j - 1];
}

void Filling::set(int i, int j, int v) { rows_.at(i - 1).at(j - 1) = v; }

bool Filling::monotone() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_ - i + 1; ++j)
            if (at(i, j) < at(i + 1, j) || at(i, j) < at(i, j + 1)) return false;
    return true;
}

Filling filling_algorithm(const Partition& p, int n) {
    if (!p.fits_staircase(n)) throw std::invalid_argument("partition " + p.str() + " exceeds the staircase T_" + std::to_string(n));
    Filling t(n);
    auto inside = [&](int i, int j) { return j <= p[i]; };
    // Each entry depends on entries to its right and in lower rows.
    for (int i = n; i >= 1; --i) {
        for (int j = n - i + 1; j >= 1; --j) {
            if (!inside(i, j)) continue;
            if (!inside(i, j + 1) && !inside(i + 1, j)) {
                t.set(i, j, 1);
                continue;
            }
            int best = 0;
            for (int k = j + 1; k <= n - i + 1; ++k) best = std::max(best, t.at(i, k) + t.at(n - k + 2, j));
            t.set(i, j, best);
        }
    }
    return t;
}

int nilpotence_recursive(const Partition& p, int N) {
    if (!p.fits_staircase(N)) throw std::invalid_argument("partition " + p.str() + " exceeds the staircase T_" + std::to_string(N));
    std::vector<int> lambda(p.parts.begin(), p.parts.end());
    lambda.resize(std::max(N, 0), 0);
    int steps = 0;
    while (!lambda.empty() && lambda[0] > 0) {
        const int first = lambda[0];
        // rows N+2-first .. N, 1-based
        std::vector<int> next(lambda.begin() + (N + 1 - first), lambda.end());
        lambda = std::move(next);
        N = first - 1;
        ++steps;
    }
    return steps;
}

int zigzag_class(const Partition& p, int N) {
    if (!p.fits_staircase(N)) throw std::invalid_argument("partition " + p.str() + " exceeds the staircase T_" + std::to_string(N));
    // x counts columns from the left edge, y counts rows downward from the top edge.
    int x = p.first();
    int touches = 0;
    while (x > 0) {
        const int y = N + 1 - x;  // vertical segment meets x + y = N + 1
        ++touches;
        x = p[y + 1];             // horizontal segment stops at the border of row y + 1
    }
    return touches;
}

int completion_staircase(Family family, int n) {
    switch (family) {
        case Family::B:
        case Family::C: return 2 * n - 1;
        case Family::D: return 2 * n - 2;
        default: throw std::invalid_argument("completion_staircase: family must be B, C or D");
    }
}

namespace {

ShiftedPartition read_rows(const RootSystem& rs, const IdealSet& ideal, bool swap_columns, bool& ok) {
    const int n = rs.rank();
    const int rows = rs.diagram_rows();
    auto member = [&](int i, int j) {
        if (swap_columns && (j == n - 1 || j == n)) j = (j == n - 1) ? n : n - 1;
        return ideal.test(*rs.root_at({i, j}));
    };
    std::vector<int> parts(rows, 0);
    ok = true;
    for (int i = 1; i <= rows; ++i) {
        const int last = i + rs.diagram_row_length(i) - 1;
        int len = 0;
        while (i + len <= last && member(i, i + len)) ++len;
        for (int j = i + len; j <= last; ++j)
            if (member(i, j)) ok = false;
        parts[i - 1] = len;
    }
    ShiftedPartition sp(parts);
    ok = ok && sp.valid();
    return sp;
}

}  // namespace

ShiftedEncoding ideal_to_shifted(const RootSystem& rs, const IdealSet& ideal) {
    require_family(rs, {Family::B, Family::C, Family::D}, "ideal_to_shifted");
    bool ok = false;
    ShiftedPartition sp = read_rows(rs, ideal, false, ok);
    if (ok) return {sp.normalized(), false};
    if (rs.lie_type().family == Family::D) {
        sp = read_rows(rs, ideal, true, ok);
        if (ok) return {sp.normalized(), true};
    }
    throw InvariantError("ideal cells do not form a shifted diagram in " + rs.lie_type().name());
}

IdealSet shifted_to_ideal(const RootSystem& rs, const ShiftedPartition& sp, bool swapped) {
    require_family(rs, {Family::B, Family::C, Family::D}, "shifted_to_ideal");
    const int n = rs.rank();
    IdealSet ideal;
    for (int i = 1; i <= sp.length(); ++i) {
        if (i > rs.diagram_rows() || sp[i] > rs.diagram_row_length(i))
            throw std::invalid_argument("shifted diagram " + sp.str() + " exceeds the shifted staircase");
        for (int j = i; j < i + sp[i]; ++j) {
            int col = j;
            if (swapped && (j == n - 1 || j == n)) col = (j == n - 1) ? n : n - 1;
            ideal.set(*rs.root_at({i, col}));
        }
    }
    return ideal;
}

Partition symmetric_completion(const ShiftedPartition& sp, Family family, int n) {
    const int N = completion_staircase(family, n);
    std::vector<int> lambda(N, 0);
    if (family == Family::C) {
        for (int i = 1; i <= N; ++i) {
            if (sp[i] > 0) {
                lambda[i - 1] = i - 1 + sp[i];
                continue;
            }
            int mirrored = 0;
            for (int j = 1; j < i; ++j)
                if (j + sp[j] - 1 >= i) ++mirrored;
            lambda[i - 1] = mirrored;
        }
    } else {
        if (N >= 1) lambda[0] = sp[1];
        for (int i = 2; i <= N; ++i) {
            if (sp[i] > 0) {
                lambda[i - 1] = i - 1 + sp[i];
                continue;
            }
            int mirrored = 0;
            for (int r = 2; r <= i - 1; ++r)
                if (r + sp[r] - 1 >= i - 1) ++mirrored;
            lambda[i - 1] = mirrored;
        }
    }
    return Partition(lambda);
}

int nilpotence_via_p43(const RootSystem& rs, const IdealSet& ideal) {
    require_family(rs, {Family::B, Family::C, Family::D}, "nilpotence_via_p43");
    const Family f = rs.lie_type().family;
    const int n = rs.rank();
    const ShiftedEncoding enc = ideal_to_shifted(rs, ideal);
    const Partition lambda = symmetric_completion(enc.diagram, f, n);
    return nilpotence_recursive(lambda, completion_staircase(f, n));
}

}  // namespace adnil
