#pragma once

#include "adnil/distribution.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace adnil {

enum ExitStatus { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Worker count from ADNIL_WORKERS, else every OpenMP thread.
int default_workers();

// Header `K,count`, one row per class, then `total,<sum>`.
std::string distribution_to_csv(const Distribution& d);
// {"type": ..., "method": ..., "distribution": {"0": "1", ...}, "total": "..."}; counts are decimal strings.
std::string distribution_to_json(const Distribution& d, const std::string& type_name, const std::string& method);
Distribution parse_distribution_json(const std::string& text);

}  // namespace adnil
