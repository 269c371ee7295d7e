#include "adnil/partitions.hpp"

#include <algorithm>
#include <sstream>

namespace adnil {

namespace {

std::vector<int> strip(std::vector<int> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

std::string join(const std::vector<int>& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ')';
    return os.str();
}

}  // namespace

int Partition::length() const {
    int n = 0;
    for (int v : parts)
        if (v > 0) ++n;
    return n;
}

int Partition::size() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
}

Partition Partition::normalized() const { return Partition(strip(parts)); }

Partition Partition::conjugate() const {
    std::vector<int> c(first(), 0);
    for (int v : parts)
        for (int j = 0; j < v; ++j) ++c[j];
    return Partition(c);
}

bool Partition::valid() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) return false;
        if (i + 1 < parts.size() && parts[i + 1] > parts[i]) return false;
    }
    return true;
}

bool Partition::fits_staircase(int N) const {
    if (!valid()) return false;
    for (int i = 1; i <= static_cast<int>(parts.size()); ++i)
        if ((*this)[i] > std::max(0, N - i + 1)) return false;
    return true;
}

std::string Partition::str() const { return join(strip(parts)); }

bool operator==(const Partition& a, const Partition& b) { return strip(a.parts) == strip(b.parts); }

int ShiftedPartition::length() const {
    int n = 0;
    for (int v : parts)
        if (v > 0) ++n;
    return n;
}

int ShiftedPartition::size() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
}

ShiftedPartition ShiftedPartition::normalized() const { return ShiftedPartition(strip(parts)); }

bool ShiftedPartition::valid() const {
    bool ended = false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) return false;
        if (parts[i] == 0) {
            ended = true;
            continue;
        }
        if (ended) return false;
        if (i + 1 < parts.size() && parts[i + 1] > 0 && parts[i + 1] >= parts[i]) return false;
    }
    return true;
}

bool ShiftedPartition::fits_shifted_staircase(int N) const {
    if (!valid()) return false;
    for (int i = 1; i <= static_cast<int>(parts.size()); ++i)
        if ((*this)[i] > std::max(0, N + 2 - 2 * i)) return false;
    return true;
}

std::string ShiftedPartition::str() const { return join(strip(parts)); }

bool operator==(const ShiftedPartition& a, const ShiftedPartition& b) { return strip(a.parts) == strip(b.parts); }

namespace {

void shifted_rec(int N, int row, int bound, std::vector<int>& cur, std::vector<ShiftedPartition>& out) {
    out.emplace_back(cur);
    const int cap = std::min(bound - 1, N + 2 - 2 * row);
    for (int v = 1; v <= cap; ++v) {
        cur.push_back(v);
        shifted_rec(N, row + 1, v, cur, out);
        cur.pop_back();
    }
}

void staircase_rec(int N, int row, int bound, std::vector<int>& cur, std::vector<Partition>& out) {
    out.emplace_back(cur);
    const int cap = std::min(bound, N - row + 1);
    for (int v = 1; v <= cap; ++v) {
        cur.push_back(v);
        staircase_rec(N, row + 1, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<ShiftedPartition> shifted_diagrams_in(int N) {
    std::vector<ShiftedPartition> out;
    std::vector<int> cur;
    shifted_rec(N, 1, N + 1, cur, out);
    return out;
}

std::vector<Partition> partitions_in_staircase(int N) {
    std::vector<Partition> out;
    std::vector<int> cur;
    staircase_rec(N, 1, N, cur, out);
    return out;
}

}  // namespace adnil
