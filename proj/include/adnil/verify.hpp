#pragma once

#include "adnil/distribution.hpp"
#include "adnil/rootsys.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace adnil {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::string detail;
};

struct VerifyOptions {
    std::string suite = "all";  // agreement, totals, table1, formulas, gf, corollaries, paths, abelian, series, all
    std::optional<Family> family;
    int max_rank = 6;
    bool keep_going = false;
    double budget_seconds = 0;  // 0 means unlimited
    int workers = 1;
};

const std::vector<std::string>& verification_suites();

// Runs the selected checks, calling `report` after each one. Stops after the
// first failure unless keep_going is set.
std::vector<CheckResult> run_verification(const VerifyOptions& opts,
                                          const std::function<void(const CheckResult&)>& report = {});

// Published distributions for the exceptional types, indexed by class.
const std::vector<long>& published_distribution(LieType lt);

}  // namespace adnil
