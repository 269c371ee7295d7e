#pragma once

#include "adnil/bigint.hpp"
#include "adnil/root_mask.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace adnil {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
    Family family = Family::A;
    int rank = 1;

    // Throws std::invalid_argument when the rank is not allowed for the family.
    void validate() const;
    bool classical() const {
        return family == Family::A || family == Family::B || family == Family::C || family == Family::D;
    }
    std::string name() const;  // "E8", "B3", ...

    friend bool operator==(const LieType&, const LieType&) = default;
};

// Parses "E8", "b3", or a bare family letter combined with `rank`.
LieType parse_lie_type(std::string_view text, std::optional<int> rank = std::nullopt);

// Coefficients over the simple roots.
using Root = std::vector<int>;

std::string format_root(const Root& r);

// Cell (row, column) of a staircase or shifted staircase, 1-based.
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
};

// Immutable after construction; safe for concurrent readers.
class RootSystem {
public:
    static constexpr std::int8_t kNoSum = -1;

    explicit RootSystem(LieType lt);

    const LieType& lie_type() const { return type_; }
    int rank() const { return type_.rank; }
    int size() const { return static_cast<int>(positive_.size()); }

    const std::vector<Root>& positive_roots() const { return positive_; }
    const Root& root(int i) const { return positive_[i]; }
    int height(int i) const { return heights_[i]; }

    // Index of a positive root, or nullopt if `r` is not in the positive system.
    std::optional<int> index_of(const Root& r) const;

    // Index of the highest root; absent only for D2, which is not simple.
    std::optional<int> highest_root() const { return highest_; }

    const std::vector<int>& exponents() const { return exponents_; }
    int coxeter_number() const { return coxeter_; }

    // Index of positive_roots[i] + positive_roots[j] when that sum is a positive root.
    std::optional<int> sum_index(int i, int j) const {
        const auto v = sums_[static_cast<std::size_t>(i) * positive_.size() + j];
        if (v == kNoSum) return std::nullopt;
        return v;
    }
    std::int8_t raw_sum(int i, int j) const { return sums_[static_cast<std::size_t>(i) * positive_.size() + j]; }

    // Partners j with root(i) + root(j) a root, paired with the index of the sum.
    struct SumEntry {
        std::int8_t partner;
        std::int8_t sum;
    };
    const std::vector<SumEntry>& sum_partners(int i) const { return partners_[i]; }

    // Principal filter {j : root(j) >= root(i)} and principal order ideal {j : root(j) <= root(i)}.
    const RootMask& up_set(int i) const { return up_[i]; }
    const RootMask& down_set(int i) const { return down_[i]; }
    RootMask all_roots() const { return RootMask::first_n(size()); }

    // Diagram labelling for classical types: the cell holding root i in the
    // staircase (type A) or shifted staircase (types B, C, D).
    bool has_cells() const { return type_.classical(); }
    Cell cell_of(int i) const { return cells_.at(i); }
    // Root index at a cell, or nullopt if the cell is outside the (shifted) staircase.
    std::optional<int> root_at(Cell c) const;
    // Number of rows of the (shifted) staircase and the row length bound.
    int diagram_rows() const;
    int diagram_row_length(int row) const;

private:
    void build_by_reflection();
    void order_and_label();
    void build_tables();

    LieType type_;
    std::vector<std::vector<int>> cartan_;
    std::vector<Root> positive_;
    std::vector<int> heights_;
    std::optional<int> highest_;
    std::vector<int> exponents_;
    int coxeter_ = 0;
    std::vector<std::int8_t> sums_;
    std::vector<std::vector<SumEntry>> partners_;
    std::vector<RootMask> up_;
    std::vector<RootMask> down_;
    std::vector<Cell> cells_;
};

RootSystem build_root_system(LieType lt);

// True iff b - a has only nonnegative coordinates.
bool root_leq(const Root& a, const Root& b);
inline bool root_leq(const RootSystem& rs, const Root& a, const Root& b) {
    (void)rs;
    return root_leq(a, b);
}

// Product over the exponents of (h + e + 1) / (e + 1). Throws std::domain_error
// if the product is not an integer.
BigInt total_count_formula(const RootSystem& rs);

// Cartan matrix a(i, j) = <alpha_i^vee, alpha_j> in Bourbaki numbering.
std::vector<std::vector<int>> cartan_matrix(LieType lt);

}  // namespace adnil
