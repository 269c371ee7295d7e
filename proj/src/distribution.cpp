#include "adnil/distribution.hpp"

#include "adnil/nilpotence.hpp"
#include "adnil/rays.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace adnil {

Method parse_method(std::string_view name) {
    if (name == "oracle") return Method::Oracle;
    if (name == "filling") return Method::Filling;
    if (name == "recursion") return Method::Recursion;
    if (name == "zigzag") return Method::Zigzag;
    if (name == "p43") return Method::P43;
    if (name == "ray") return Method::Ray;
    if (name == "tworay") return Method::TwoRay;
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::string method_name(Method m) {
    switch (m) {
        case Method::Oracle: return "oracle";
        case Method::Filling: return "filling";
        case Method::Recursion: return "recursion";
        case Method::Zigzag: return "zigzag";
        case Method::P43: return "p43";
        case Method::Ray: return "ray";
        case Method::TwoRay: return "tworay";
    }
    return "?";
}

bool method_supports(Method m, Family f) {
    switch (m) {
        case Method::Oracle: return true;
        case Method::Filling:
        case Method::Recursion:
        case Method::Zigzag: return f == Family::A;
        case Method::P43: return f == Family::B || f == Family::C || f == Family::D;
        case Method::Ray: return f == Family::C;
        case Method::TwoRay: return f == Family::B || f == Family::D;
    }
    return false;
}

int ideal_class(const RootSystem& rs, const IdealSet& ideal, Method m) {
    const int n = rs.rank();
    switch (m) {
        case Method::Oracle: return nilpotence_oracle(rs, ideal);
        case Method::Filling: return filling_algorithm(ideal_to_partition_A(rs, ideal), n).top();
        case Method::Recursion: return nilpotence_recursive(ideal_to_partition_A(rs, ideal), n);
        case Method::Zigzag: return zigzag_class(ideal_to_partition_A(rs, ideal), n);
        case Method::P43: return nilpotence_via_p43(rs, ideal);
        case Method::Ray:
            if (rs.lie_type().family != Family::C) break;
            return c_single_ray_class(ideal_to_shifted(rs, ideal).diagram, n);
        case Method::TwoRay: {
            const Family f = rs.lie_type().family;
            if (f != Family::B && f != Family::D) break;
            return bd_two_ray_classify(ideal_to_shifted(rs, ideal).diagram, n, f).nilpotence;
        }
    }
    throw std::invalid_argument("method " + method_name(m) + " does not apply to type " + rs.lie_type().name());
}

BigInt distribution_total(const Distribution& d) {
    BigInt s = 0;
    for (const auto& [k, v] : d) s += v;
    return s;
}

BigInt distribution_at_most(const Distribution& d, int h) {
    BigInt s = 0;
    for (const auto& [k, v] : d)
        if (k <= h) s += v;
    return s;
}

namespace {

void check_method(const RootSystem& rs, Method m) {
    if (!method_supports(m, rs.lie_type().family))
        throw std::invalid_argument("method " + method_name(m) + " does not apply to type " + rs.lie_type().name());
}

Distribution to_distribution(const std::vector<std::uint64_t>& hist) {
    Distribution d;
    int top = static_cast<int>(hist.size()) - 1;
    while (top > 0 && hist[top] == 0) --top;
    for (int k = 0; k <= top; ++k) d[k] = BigInt(static_cast<unsigned long>(hist[k]));
    return d;
}

void bump(std::vector<std::uint64_t>& hist, int k) {
    if (k >= static_cast<int>(hist.size())) hist.resize(k + 1, 0);
    ++hist[k];
}

}  // namespace

Distribution class_distribution_serial(const RootSystem& rs, Method m) {
    check_method(rs, m);
    std::vector<std::uint64_t> hist(1, 0);
    for_each_ideal(rs, [&](const IdealSet& s) { bump(hist, ideal_class(rs, s, m)); });
    return to_distribution(hist);
}

Distribution class_distribution(const RootSystem& rs, Method m, const DistributionOptions& opts) {
    check_method(rs, m);
    const std::vector<EnumerationTask> tasks = split_enumeration(rs, 2);
    const int n_tasks = static_cast<int>(tasks.size());
    std::vector<std::uint64_t> total(1, 0);
    std::size_t finished = 0;
    const auto start = std::chrono::steady_clock::now();
    std::atomic<bool> over_budget{false};

#pragma omp parallel num_threads(std::max(1, opts.workers))
    {
        std::vector<std::uint64_t> local(1, 0);
#pragma omp for schedule(dynamic, 1)
        for (int t = 0; t < n_tasks; ++t) {
            if (over_budget.load(std::memory_order_relaxed)) continue;
            if (opts.budget_seconds > 0 &&
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > opts.budget_seconds) {
                over_budget = true;
                continue;
            }
            run_task(rs, tasks[t], [&](const IdealSet& s) { bump(local, ideal_class(rs, s, m)); });
            if (opts.progress) {
#pragma omp critical(adnil_progress)
                opts.progress(++finished, tasks.size());
            }
        }
#pragma omp critical(adnil_merge)
        {
            if (local.size() > total.size()) total.resize(local.size(), 0);
            for (std::size_t k = 0; k < local.size(); ++k) total[k] += local[k];
        }
    }
    if (over_budget) throw BudgetExceeded("time budget of " + std::to_string(opts.budget_seconds) + " s exceeded");
    return to_distribution(total);
}

JointDistribution joint_distribution(const RootSystem& rs, const DistributionOptions& opts) {
    const std::vector<EnumerationTask> tasks = split_enumeration(rs, 2);
    const int n_tasks = static_cast<int>(tasks.size());
    std::map<std::pair<int, int>, std::uint64_t> total;
#pragma omp parallel num_threads(std::max(1, opts.workers))
    {
        std::map<std::pair<int, int>, std::uint64_t> local;
#pragma omp for schedule(dynamic, 1)
        for (int t = 0; t < n_tasks; ++t)
            run_task(rs, tasks[t], [&](const IdealSet& s) { ++local[{ideal_dimension(s), nilpotence_oracle(rs, s)}]; });
#pragma omp critical(adnil_merge_joint)
        for (const auto& [key, v] : local) total[key] += v;
    }
    JointDistribution out;
    for (const auto& [key, v] : total) out[key] = BigInt(static_cast<unsigned long>(v));
    return out;
}

DCompletionCounts d_completion_counts(int n) {
    if (n < 2) throw std::invalid_argument("d_completion_counts: n must be at least 2");
    const int N = 2 * n - 2;
    std::vector<std::uint64_t> all(1, 0), balanced(1, 0);
    for (const ShiftedPartition& sp : shifted_diagrams_in(N)) {
        const Partition lambda = symmetric_completion(sp, Family::D, n);
        const int k = nilpotence_recursive(lambda, N);
        bump(all, k);
        const Partition cols = lambda.conjugate();
        if (cols[n - 1] == cols[n]) bump(balanced, k);
    }
    DCompletionCounts out{to_distribution(all), to_distribution(balanced)};
    for (auto& [k, v] : out.all) out.balanced.try_emplace(k, 0);
    return out;
}

}  // namespace adnil
