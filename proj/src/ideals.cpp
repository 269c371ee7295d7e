#include "adnil/ideals.hpp"

#include <omp.h>

#include <algorithm>

namespace adnil {

bool is_dual_order_ideal(const RootSystem& rs, const IdealSet& ideal) {
    bool ok = true;
    ideal.for_each([&](int i) {
        if (!rs.up_set(i).subset_of(ideal)) ok = false;
    });
    return ok && ideal.subset_of(rs.all_roots());
}

bool is_antichain(const RootSystem& rs, const Antichain& a) {
    bool ok = true;
    a.for_each([&](int i) {
        RootMask others = a;
        others.reset(i);
        if (others.intersects(comparable_set(rs, i))) ok = false;
    });
    return ok;
}

IdealSet antichain_to_ideal(const RootSystem& rs, const Antichain& a) {
    IdealSet ideal;
    a.for_each([&](int i) { ideal |= rs.up_set(i); });
    return ideal;
}

Antichain ideal_minimal_elements(const RootSystem& rs, const IdealSet& ideal) {
    Antichain minimal;
    ideal.for_each([&](int i) {
        RootMask below = rs.down_set(i);
        below.reset(i);
        if (!below.intersects(ideal)) minimal.set(i);
    });
    return minimal;
}

void for_each_ideal(const RootSystem& rs, const std::function<void(const IdealSet&)>& visit) {
    auto f = [&](const IdealSet& s) { visit(s); };
    detail::antichain_dfs(rs, Antichain{}, IdealSet{}, rs.all_roots(), 0, f);
}

namespace {

void split(const RootSystem& rs, const EnumerationTask& node, int depth, std::vector<EnumerationTask>& out) {
    if (depth == 0) {
        out.push_back(node);
        return;
    }
    EnumerationTask self = node;
    self.subtree = false;
    out.push_back(self);
    node.available.for_each([&](int i) {
        if (i < node.next) return;
        EnumerationTask child;
        child.chosen = node.chosen;
        child.chosen.set(i);
        child.available = node.available.without(comparable_set(rs, i));
        child.next = i + 1;
        split(rs, child, depth - 1, out);
    });
}

}  // namespace

std::vector<EnumerationTask> split_enumeration(const RootSystem& rs, int depth) {
    EnumerationTask root;
    root.available = rs.all_roots();
    std::vector<EnumerationTask> tasks;
    split(rs, root, depth, tasks);
    return tasks;
}

std::vector<IdealSet> enumerate_ideals(const RootSystem& rs) {
    std::vector<IdealSet> out;
    for_each_ideal(rs, [&](const IdealSet& s) { out.push_back(s); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IdealSet> enumerate_ideals_parallel(const RootSystem& rs, int workers) {
    const std::vector<EnumerationTask> tasks = split_enumeration(rs, 2);
    std::vector<std::vector<IdealSet>> parts(tasks.size());
    const int n_tasks = static_cast<int>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, workers))
    for (int t = 0; t < n_tasks; ++t)
        run_task(rs, tasks[t], [&](const IdealSet& s) { parts[t].push_back(s); });

    std::vector<IdealSet> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace adnil
