#pragma once

#include "adnil/root_mask.hpp"
#include "adnil/rootsys.hpp"

#include <functional>
#include <vector>

namespace adnil {

// An ad-nilpotent ideal is identified with its set of roots, an upward-closed
// subset of the positive roots. Antichains use the same representation.
using IdealSet = RootMask;
using Antichain = RootMask;

bool is_dual_order_ideal(const RootSystem& rs, const IdealSet& ideal);
bool is_antichain(const RootSystem& rs, const Antichain& a);

// Union of the principal filters generated by the members of `a`.
IdealSet antichain_to_ideal(const RootSystem& rs, const Antichain& a);
Antichain ideal_minimal_elements(const RootSystem& rs, const IdealSet& ideal);

inline int ideal_dimension(const IdealSet& ideal) { return ideal.count(); }

// Visits every ideal exactly once in depth-first antichain order (not sorted).
void for_each_ideal(const RootSystem& rs, const std::function<void(const IdealSet&)>& visit);

// A piece of the antichain search tree. Every ideal belongs to exactly one
// task produced by split_enumeration, so tasks can be traversed independently.
struct EnumerationTask {
    Antichain chosen;
    RootMask available;  // candidates still allowed by the choices so far
    int next = 0;        // smallest candidate index
    bool subtree = true; // false: the task covers only `chosen` itself
};

std::vector<EnumerationTask> split_enumeration(const RootSystem& rs, int depth);

template <class F>
void run_task(const RootSystem& rs, const EnumerationTask& task, F&& visit);

// All ideals, sorted by the lexicographic order of their membership bitsets.
std::vector<IdealSet> enumerate_ideals(const RootSystem& rs);
// Same result, traversal spread over `workers` OpenMP threads.
std::vector<IdealSet> enumerate_ideals_parallel(const RootSystem& rs, int workers);

// Roots comparable to root i (including i itself).
inline RootMask comparable_set(const RootSystem& rs, int i) { return rs.up_set(i) | rs.down_set(i); }

namespace detail {

template <class F>
void antichain_dfs(const RootSystem& rs, Antichain chosen, IdealSet ideal, RootMask available, int next, F& visit) {
    visit(ideal);
    available.for_each([&](int i) {
        if (i < next) return;
        Antichain c = chosen;
        c.set(i);
        antichain_dfs(rs, c, ideal | rs.up_set(i), available.without(comparable_set(rs, i)), i + 1, visit);
    });
}

}  // namespace detail

template <class F>
void run_task(const RootSystem& rs, const EnumerationTask& task, F&& visit) {
    const IdealSet ideal = antichain_to_ideal(rs, task.chosen);
    if (!task.subtree) {
        visit(ideal);
        return;
    }
    detail::antichain_dfs(rs, task.chosen, ideal, task.available, task.next, visit);
}

}  // namespace adnil
