#pragma once

#include <string>
#include <vector>

namespace adnil {

// Weakly decreasing sequence of nonnegative parts. Trailing zeros are allowed
// and ignored by comparison.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p) : parts(p) {}
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {}

    // Part i (1-based); zero beyond the stored length.
    int operator[](int i) const { return i >= 1 && i <= static_cast<int>(parts.size()) ? parts[i - 1] : 0; }
    int first() const { return (*this)[1]; }
    int length() const;  // number of nonzero parts
    int size() const;    // sum of parts
    bool empty() const { return length() == 0; }

    Partition normalized() const;
    Partition conjugate() const;
    bool valid() const;
    // Fits inside the staircase (N, N-1, ..., 1).
    bool fits_staircase(int N) const;

    std::string str() const;
    friend bool operator==(const Partition& a, const Partition& b);
};

// Shifted diagram: row i occupies columns i .. i + parts[i] - 1. Nonzero parts
// are strictly decreasing.
struct ShiftedPartition {
    std::vector<int> parts;

    ShiftedPartition() = default;
    ShiftedPartition(std::initializer_list<int> p) : parts(p) {}
    explicit ShiftedPartition(std::vector<int> p) : parts(std::move(p)) {}

    int operator[](int i) const { return i >= 1 && i <= static_cast<int>(parts.size()) ? parts[i - 1] : 0; }
    int length() const;
    int size() const;
    bool empty() const { return length() == 0; }
    bool contains(int row, int col) const { return col >= row && col < row + (*this)[row]; }

    ShiftedPartition normalized() const;
    bool valid() const;
    // Fits inside the shifted staircase (N, N-2, N-4, ...).
    bool fits_shifted_staircase(int N) const;

    std::string str() const;
    friend bool operator==(const ShiftedPartition& a, const ShiftedPartition& b);
};

// Every shifted diagram inside the shifted staircase (N, N-2, ...), the empty one included.
std::vector<ShiftedPartition> shifted_diagrams_in(int N);

// Every partition inside the staircase (N, N-1, ..., 1).
std::vector<Partition> partitions_in_staircase(int N);

}  // namespace adnil
