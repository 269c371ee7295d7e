#pragma once

#include "adnil/ideals.hpp"
#include "adnil/partitions.hpp"
#include "adnil/rootsys.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace adnil {

// Raised when an internal consistency check fails (as opposed to bad input).
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Largest k with the highest root in Phi^k, where Phi^1 = Phi and
// Phi^k = (Phi^{k-1} + Phi) intersected with the roots. Zero for the empty ideal.
int nilpotence_oracle(const RootSystem& rs, const IdealSet& ideal);

// Type A: row i of the staircase holds the roots a_i + ... + a_{n-j+1}, j = 1..n-i+1.
Partition ideal_to_partition_A(const RootSystem& rs, const IdealSet& ideal);
IdealSet partition_to_ideal_A(const RootSystem& rs, const Partition& p);

// Triangular array t(i, j), 1 <= i <= n, 1 <= j <= n - i + 1.
class Filling {
public:
    explicit Filling(int n);
    int n() const { return n_; }
    int at(int i, int j) const;
    void set(int i, int j, int v);
    int top() const { return n_ > 0 ? at(1, 1) : 0; }
    // Entries weakly decrease along rows and down columns.
    bool monotone() const;

private:
    int n_;
    std::vector<std::vector<int>> rows_;
};

Filling filling_algorithm(const Partition& p, int n);

// Repeatedly replaces lambda in T_N by (lambda_{N+2-lambda_1}, ..., lambda_N) in
// T_{lambda_1 - 1}, counting the steps until lambda is empty. N defaults to the
// stored length of p.
int nilpotence_recursive(const Partition& p, int N);
inline int nilpotence_recursive(const Partition& p) {
    return nilpotence_recursive(p, static_cast<int>(p.parts.size()));
}

// Broken ray between the diagram border and the line x + y = N + 1; returns
// the number of touching points on that line.
int zigzag_class(const Partition& p, int N);

struct ShiftedEncoding {
    ShiftedPartition diagram;
    bool swapped = false;  // type D: columns n-1 and n were exchanged
};

// Types B, C, D: the shifted diagram formed by the cells of the ideal.
ShiftedEncoding ideal_to_shifted(const RootSystem& rs, const IdealSet& ideal);
IdealSet shifted_to_ideal(const RootSystem& rs, const ShiftedPartition& sp, bool swapped = false);

// Ordinary partition obtained by reflecting the shifted diagram: self-conjugate
// in T_{2n-1} for C; for B (in T_{2n-1}) and D (in T_{2n-2}) the tail
// (lambda_2, ...) is self-conjugate, with filler cells on the line (i, i-1).
Partition symmetric_completion(const ShiftedPartition& sp, Family family, int n);

// Staircase size the completion lives in: 2n-1 for B and C, 2n-2 for D.
int completion_staircase(Family family, int n);

int nilpotence_via_p43(const RootSystem& rs, const IdealSet& ideal);

}  // namespace adnil
