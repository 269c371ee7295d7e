#pragma once

#include "adnil/bigint.hpp"
#include "adnil/ideals.hpp"
#include "adnil/rootsys.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace adnil {

enum class Method { Oracle, Filling, Recursion, Zigzag, P43, Ray, TwoRay };

Method parse_method(std::string_view name);
std::string method_name(Method m);
bool method_supports(Method m, Family f);

// Class of nilpotence of one ideal by the chosen algorithm.
int ideal_class(const RootSystem& rs, const IdealSet& ideal, Method m);

// K -> number of ideals with class K, with an entry for every K from 0 to the maximum.
using Distribution = std::map<int, BigInt>;
// (dimension, class) -> number of ideals.
using JointDistribution = std::map<std::pair<int, int>, BigInt>;

BigInt distribution_total(const Distribution& d);
// Number of ideals of class at most h.
BigInt distribution_at_most(const Distribution& d, int h);

struct DistributionOptions {
    int workers = 1;
    // Called as work units complete: (finished, total).
    std::function<void(std::size_t, std::size_t)> progress;
    // Wall-clock limit in seconds; 0 means none. Exceeding it throws BudgetExceeded.
    double budget_seconds = 0;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Serial reference: one depth-first pass, no threads.
Distribution class_distribution_serial(const RootSystem& rs, Method m);
// OpenMP version: the antichain tree is split into independent tasks whose
// per-thread histograms are merged at the end.
Distribution class_distribution(const RootSystem& rs, Method m, const DistributionOptions& opts = {});

JointDistribution joint_distribution(const RootSystem& rs, const DistributionOptions& opts = {});

// Type D bookkeeping over partitions lambda in T_{2n-2} with (lambda_2, ...)
// self-conjugate and lambda_i != i - 1: `all` counts them by class, `balanced`
// counts those whose columns n - 1 and n have equal length.
struct DCompletionCounts {
    Distribution all;
    Distribution balanced;
};
DCompletionCounts d_completion_counts(int n);

}  // namespace adnil
