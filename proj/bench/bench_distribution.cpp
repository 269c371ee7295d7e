// Times the serial reference against the OpenMP distribution kernel.
#include "adnil/distribution.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

namespace {

template <class F>
double seconds(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> types{"A12", "B10", "C10", "D10", "E6", "E7", "E8", "F4"};
    if (argc > 1) types.assign(argv + 1, argv + argc);
    const int workers = std::max(1, omp_get_max_threads());
    std::cout << "workers: " << workers << '\n';
    std::cout << std::left << std::setw(6) << "type" << std::right << std::setw(10) << "ideals" << std::setw(12)
              << "serial s" << std::setw(12) << "parallel s" << std::setw(10) << "speedup" << '\n';
    bool all_equal = true;
    for (const std::string& name : types) {
        const adnil::RootSystem rs(adnil::parse_lie_type(name));
        adnil::Distribution serial, parallel;
        const double ts = seconds([&] { serial = adnil::class_distribution_serial(rs, adnil::Method::Oracle); });
        adnil::DistributionOptions opts;
        opts.workers = workers;
        const double tp = seconds([&] { parallel = adnil::class_distribution(rs, adnil::Method::Oracle, opts); });
        const bool equal = serial == parallel;
        all_equal = all_equal && equal;
        std::cout << std::left << std::setw(6) << name << std::right << std::setw(10)
                  << adnil::distribution_total(serial).get_str() << std::fixed << std::setprecision(3) << std::setw(12)
                  << ts << std::setw(12) << tp << std::setw(10) << std::setprecision(2) << (tp > 0 ? ts / tp : 0.0)
                  << (equal ? "" : "  MISMATCH") << '\n';
    }
    return all_equal ? EXIT_SUCCESS : EXIT_FAILURE;
}
