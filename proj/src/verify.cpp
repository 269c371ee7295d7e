#include "adnil/verify.hpp"

#include "adnil/closedform.hpp"
#include "adnil/genfun.hpp"
#include "adnil/nilpotence.hpp"
#include "adnil/rays.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

namespace adnil {

const std::vector<std::string>& verification_suites() {
    static const std::vector<std::string> suites{"agreement", "totals", "table1",  "formulas", "gf",
                                                 "corollaries", "paths", "abelian", "series"};
    return suites;
}

const std::vector<long>& published_distribution(LieType lt) {
    static const std::map<std::string, std::vector<long>> table{
        {"E6", {1, 63, 210, 217, 150, 92, 51, 28, 12, 6, 2, 1}},
        {"E7", {1, 127, 662, 894, 766, 576, 403, 279, 175, 115, 68, 44, 23, 14, 7, 4, 1, 1}},
        {"E8", {1,   255, 2200, 3804, 3872, 3372, 2752, 2182, 1656, 1277, 955, 737, 536, 412, 300,
                227, 157, 123,  81,   61,   40,   30,   18,   14,   7,    5,   3,   2,   0,   1}},
        {"F4", {1, 15, 28, 21, 14, 12, 5, 4, 2, 2, 0, 1}},
        {"G2", {1, 3, 2, 1, 0, 1}},
    };
    auto it = table.find(lt.name());
    if (it == table.end()) throw std::invalid_argument("no published distribution for " + lt.name());
    return it->second;
}

namespace {

using Clock = std::chrono::steady_clock;

class Runner {
public:
    Runner(const VerifyOptions& opts, const std::function<void(const CheckResult&)>& report)
        : opts_(opts), report_(report), start_(Clock::now()) {}

    bool wants(const std::string& suite) const { return opts_.suite == "all" || opts_.suite == suite; }
    bool family_selected(Family f) const { return !opts_.family || *opts_.family == f; }
    bool stopped() const { return stop_; }
    const std::vector<CheckResult>& results() const { return results_; }
    int max_rank() const { return opts_.max_rank; }

    // Runs one check unless a previous failure or the time budget says otherwise.
    void check(const std::string& suite, const std::string& name, const std::function<bool(std::string&)>& body) {
        if (stop_) return;
        CheckResult r{suite, name, false, false, ""};
        const double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
        if (opts_.budget_seconds > 0 && elapsed > opts_.budget_seconds) {
            r.skipped = true;
            r.detail = "time budget exhausted";
        } else {
            try {
                r.passed = body(r.detail);
            } catch (const std::exception& e) {
                r.passed = false;
                r.detail = std::string("exception: ") + e.what();
            }
        }
        results_.push_back(r);
        if (report_) report_(r);
        if (!r.passed && !r.skipped && !opts_.keep_going) stop_ = true;
    }

    const RootSystem& system(LieType lt) {
        auto it = systems_.find(lt.name());
        if (it == systems_.end()) it = systems_.emplace(lt.name(), RootSystem(lt)).first;
        return it->second;
    }

    const Distribution& histogram(LieType lt) {
        auto it = hist_.find(lt.name());
        if (it == hist_.end()) {
            DistributionOptions o;
            o.workers = opts_.workers;
            it = hist_.emplace(lt.name(), class_distribution(system(lt), Method::Oracle, o)).first;
        }
        return it->second;
    }

    BigInt count(LieType lt, int K) {
        const Distribution& d = histogram(lt);
        auto it = d.find(K);
        return it == d.end() ? BigInt(0) : it->second;
    }

private:
    const VerifyOptions& opts_;
    const std::function<void(const CheckResult&)>& report_;
    Clock::time_point start_;
    bool stop_ = false;
    std::vector<CheckResult> results_;
    std::map<std::string, RootSystem> systems_;
    std::map<std::string, Distribution> hist_;
};

std::string mismatch(const std::string& what, const BigInt& got, const BigInt& want) {
    return what + ": got " + got.get_str() + ", expected " + want.get_str();
}

int min_classical_rank(Family f) { return f == Family::A ? 1 : 2; }

void suite_agreement(Runner& run) {
    const int R = run.max_rank();
    if (run.family_selected(Family::A)) {
        for (int n = 1; n <= std::min(R + 2, 15); ++n) {
            run.check("agreement", "A" + std::to_string(n) + " oracle=filling=recursion=zigzag", [&](std::string& d) {
                const RootSystem& rs = run.system({Family::A, n});
                long ideals = 0;
                bool ok = true;
                for_each_ideal(rs, [&](const IdealSet& s) {
                    ++ideals;
                    const int o = nilpotence_oracle(rs, s);
                    const Partition p = ideal_to_partition_A(rs, s);
                    const Filling f = filling_algorithm(p, n);
                    if (f.top() != o || !f.monotone() || nilpotence_recursive(p, n) != o || zigzag_class(p, n) != o) {
                        if (ok) d = "disagreement at partition " + p.str();
                        ok = false;
                    }
                });
                if (ok) d = std::to_string(ideals) + " ideals";
                return ok;
            });
        }
    }
    for (Family f : {Family::B, Family::C, Family::D}) {
        if (!run.family_selected(f)) continue;
        for (int n = 2; n <= R; ++n) {
            const LieType lt{f, n};
            run.check("agreement", lt.name() + " oracle=p43", [&](std::string& d) {
                const RootSystem& rs = run.system(lt);
                long ideals = 0, bad = 0;
                for_each_ideal(rs, [&](const IdealSet& s) {
                    ++ideals;
                    if (nilpotence_via_p43(rs, s) != nilpotence_oracle(rs, s)) ++bad;
                });
                d = std::to_string(ideals) + " ideals, " + std::to_string(bad) + " disagreements";
                return bad == 0;
            });
        }
    }
    if (run.family_selected(Family::C)) {
        for (int n = 2; n <= std::max(R, 7); ++n) {
            run.check("agreement", "C" + std::to_string(n) + " single ray and at-most ray", [&](std::string& d) {
                const RootSystem& rs = run.system({Family::C, n});
                long ideals = 0, bad = 0;
                for_each_ideal(rs, [&](const IdealSet& s) {
                    ++ideals;
                    const int o = nilpotence_oracle(rs, s);
                    const ShiftedPartition sp = ideal_to_shifted(rs, s).diagram;
                    if (c_single_ray_class(sp, n) != o || c_atmost_ray_count(sp, n) != o + (o % 2)) ++bad;
                });
                d = std::to_string(ideals) + " ideals, " + std::to_string(bad) + " disagreements";
                return bad == 0;
            });
        }
    }
    for (Family f : {Family::B, Family::D}) {
        if (!run.family_selected(f)) continue;
        for (int n = 2; n <= R; ++n) {
            const LieType lt{f, n};
            run.check("agreement", lt.name() + " two-ray classifier", [&](std::string& d) {
                const RootSystem& rs = run.system(lt);
                long ideals = 0, bad = 0;
                std::map<int, long> cases;
                for_each_ideal(rs, [&](const IdealSet& s) {
                    ++ideals;
                    const BDSubclass c = bd_two_ray_classify(ideal_to_shifted(rs, s).diagram, n, f);
                    ++cases[c.case_id];
                    if (c.nilpotence != nilpotence_oracle(rs, s)) ++bad;
                });
                std::ostringstream os;
                os << ideals << " ideals, " << bad << " disagreements, cases";
                for (const auto& [id, cnt] : cases) os << ' ' << id << ':' << cnt;
                d = os.str();
                return bad == 0;
            });
        }
    }
}

BigInt binom_total(LieType lt) {
    const int n = lt.rank;
    switch (lt.family) {
        case Family::A: return binomial(2 * n + 2, n + 1) / (n + 2);
        case Family::B:
        case Family::C: return binomial(2 * n, n);
        case Family::D: return binomial(2 * n, n) - binomial(2 * n - 2, n - 1);
        default: return 0;
    }
}

std::vector<LieType> exceptional_types() {
    return {{Family::E, 6}, {Family::E, 7}, {Family::E, 8}, {Family::F, 4}, {Family::G, 2}};
}

void suite_totals(Runner& run) {
    const int R = run.max_rank();
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
        if (!run.family_selected(f)) continue;
        const int top = f == Family::A ? std::min(R + 2, 15) : R;
        for (int n = min_classical_rank(f); n <= top; ++n) {
            const LieType lt{f, n};
            run.check("totals", lt.name() + " product formula = enumeration = binomial form", [&](std::string& d) {
                const RootSystem& rs = run.system(lt);
                BigInt enumerated = 0;
                for_each_ideal(rs, [&](const IdealSet&) { ++enumerated; });
                const BigInt formula = total_count_formula(rs);
                d = "total " + enumerated.get_str();
                return enumerated == formula && formula == binom_total(lt);
            });
        }
    }
    for (LieType lt : exceptional_types()) {
        if (!run.family_selected(lt.family)) continue;
        run.check("totals", lt.name() + " product formula = enumeration", [&](std::string& d) {
            const RootSystem& rs = run.system(lt);
            const BigInt enumerated = distribution_total(run.histogram(lt));
            const BigInt formula = total_count_formula(rs);
            d = "total " + enumerated.get_str();
            return enumerated == formula;
        });
    }
}

void suite_table1(Runner& run) {
    for (LieType lt : exceptional_types()) {
        if (!run.family_selected(lt.family)) continue;
        run.check("table1", lt.name() + " distribution", [&](std::string& d) {
            const std::vector<long>& want = published_distribution(lt);
            const Distribution& got = run.histogram(lt);
            if (got.size() != want.size()) {
                d = "got " + std::to_string(got.size()) + " classes, expected " + std::to_string(want.size());
                return false;
            }
            for (int K = 0; K < static_cast<int>(want.size()); ++K)
                if (got.at(K) != want[K]) {
                    d = mismatch("K=" + std::to_string(K), got.at(K), want[K]);
                    return false;
                }
            d = "total " + distribution_total(got).get_str();
            return true;
        });
    }
}

void suite_formulas(Runner& run) {
    const int R = run.max_rank();
    if (run.family_selected(Family::A)) {
        for (int n = 1; n <= R; ++n) {
            run.check("formulas", "A" + std::to_string(n) + " chain sum alpha_n(K)", [&](std::string& d) {
                for (int K = 0; K <= n + 1; ++K)
                    if (alpha_A(n, K) != run.count({Family::A, n}, K)) {
                        d = mismatch("K=" + std::to_string(K), alpha_A(n, K), run.count({Family::A, n}, K));
                        return false;
                    }
                return true;
            });
        }
        for (int n = 1; n <= std::min(R, 5); ++n) {
            run.check("formulas", "A" + std::to_string(n) + " (q,t) joint distribution", [&](std::string& d) {
                const JointDistribution joint = joint_distribution(run.system({Family::A, n}));
                const QTPoly qt = catalan_qt(n);
                BigInt seen = 0;
                for (const auto& [key, v] : joint) {
                    seen += v;
                    if (qt.coeff(key.second, key.first) != v) {
                        d = "dimension " + std::to_string(key.first) + ", class " + std::to_string(key.second);
                        return false;
                    }
                }
                return seen == qt.eval(1, 1);
            });
        }
    }
    if (run.family_selected(Family::C)) {
        for (int n = 2; n <= R; ++n) {
            const LieType lt{Family::C, n};
            run.check("formulas", lt.name() + " chain sum gamma_n(K)", [&](std::string& d) {
                for (int K = 0; K <= 2 * n + 1; ++K)
                    if (gamma_C(n, K) != run.count(lt, K)) {
                        d = mismatch("K=" + std::to_string(K), gamma_C(n, K), run.count(lt, K));
                        return false;
                    }
                return true;
            });
            run.check("formulas", lt.name() + " reflection double sum", [&](std::string& d) {
                for (int h = 0; h <= 2 * n; ++h) {
                    const BigInt want = distribution_at_most(run.histogram(lt), h);
                    if (c4_count(n, h) != want) {
                        d = mismatch("h=" + std::to_string(h), c4_count(n, h), want);
                        return false;
                    }
                }
                return true;
            });
        }
        for (int n = 2; n <= std::min(R, 5); ++n) {
            run.check("formulas", "C" + std::to_string(n) + " (q,t) joint distribution", [&](std::string& d) {
                const JointDistribution joint = joint_distribution(run.system({Family::C, n}));
                const QTPoly qt = gamma_qt(n);
                BigInt seen = 0;
                for (const auto& [key, v] : joint) {
                    seen += v;
                    if (qt.coeff(key.second, key.first) != v) {
                        d = "dimension " + std::to_string(key.first) + ", class " + std::to_string(key.second);
                        return false;
                    }
                }
                return seen == qt.eval(1, 1) && qt.t_degree() == n * n;
            });
        }
        run.check("formulas", "inner t-sum equals product form", [&](std::string& d) {
            for (int i2 = 1; i2 <= 8; ++i2)
                for (int i1 = -i2 + 1; i1 <= 0; ++i1)
                    if (inner_sum_qt(i1, i2) != inner_product_qt(i1, i2)) {
                        d = "i1=" + std::to_string(i1) + ", i2=" + std::to_string(i2);
                        return false;
                    }
            return true;
        });
    }
}

// Coefficient of x^n of a series that counts ideals of the given family by rank.
BigInt gf_coefficient(const PowerSeries& s, Family f, int n) {
    const int index = f == Family::A ? n + 1 : n;
    return s[index].get_num();
}

void suite_gf(Runner& run) {
    const int R = run.max_rank();
    const int order = R + 2;
    struct Item {
        Family family;
        bool cumulative;
    };
    for (Item item : {Item{Family::A, true}, Item{Family::C, true}, Item{Family::B, true}, Item{Family::B, false},
                      Item{Family::D, true}, Item{Family::D, false}}) {
        const Family f = item.family;
        if (!run.family_selected(f)) continue;
        const std::string label = std::string(1, static_cast<char>(f)) + (item.cumulative ? " class<=h series" : " class=K series");
        run.check("gf", label + " vs enumeration", [&](std::string& d) {
            const int lo = min_classical_rank(f);
            for (int h = 0; h <= 2 * R + 1; ++h) {
                PowerSeries s;
                if (item.cumulative) {
                    s = f == Family::A ? gf_A_le(h, order)
                        : f == Family::C ? gf_C_le(h, order)
                        : f == Family::B ? gf_B_le(h, order)
                                         : gf_D_le(h, order);
                } else {
                    s = f == Family::B ? gf_B_K(h, order) : gf_D_K(h, order);
                }
                for (int n = lo; n <= R; ++n) {
                    const LieType lt{f, n};
                    const BigInt want = item.cumulative ? distribution_at_most(run.histogram(lt), h) : run.count(lt, h);
                    const BigInt got = gf_coefficient(s, f, n);
                    if (got != want) {
                        d = mismatch(lt.name() + " h/K=" + std::to_string(h), got, want);
                        return false;
                    }
                }
            }
            return true;
        });
    }
}

void suite_corollaries(Runner& run) {
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
        if (!run.family_selected(f)) continue;
        const std::string name(1, static_cast<char>(f));
        run.check("corollaries", name + " class<=2 and class<=3 closed forms vs series, ranks <= 8", [&](std::string& d) {
            for (int h : {2, 3}) {
                const PowerSeries s = f == Family::A ? gf_A_le(h, 10)
                                      : f == Family::B ? gf_B_le(h, 10)
                                      : f == Family::C ? gf_C_le(h, 10)
                                                       : gf_D_le(h, 10);
                for (int n = f == Family::D ? 2 : 1; n <= 8; ++n) {
                    const BigInt got = corollary_values(f, n, h);
                    const BigInt want = gf_coefficient(s, f, n);
                    if (got != want) {
                        d = mismatch("n=" + std::to_string(n) + " h=" + std::to_string(h), got, want);
                        return false;
                    }
                }
            }
            return true;
        });
        run.check("corollaries", name + " closed forms vs enumeration", [&](std::string& d) {
            for (int n = min_classical_rank(f); n <= std::max(run.max_rank(), 8); ++n)
                for (int h : {2, 3}) {
                    const BigInt want = distribution_at_most(run.histogram({f, n}), h);
                    if (corollary_values(f, n, h) != want) {
                        d = mismatch(LieType{f, n}.name() + " h=" + std::to_string(h), corollary_values(f, n, h), want);
                        return false;
                    }
                }
            return true;
        });
    }
}

void suite_paths(Runner& run) {
    const int R = run.max_rank();
    if (run.family_selected(Family::A)) {
        run.check("paths", "A: Dyck paths of length 2n+2 and height K+1", [&](std::string& d) {
            for (int n = 1; n <= std::max(R, 7); ++n)
                for (int K = 0; K <= n; ++K) {
                    const BigInt want = run.count({Family::A, n}, K);
                    const BigInt got = path_count_height(2 * n + 2, K + 1, true);
                    if (got != want) {
                        d = mismatch("A" + std::to_string(n) + " K=" + std::to_string(K), got, want);
                        return false;
                    }
                }
            return true;
        });
    }
    if (run.family_selected(Family::C)) {
        run.check("paths", "C: free paths of length 2n and height K+1", [&](std::string& d) {
            for (int n = 2; n <= R; ++n)
                for (int K = 0; K <= 2 * n; ++K) {
                    const BigInt want = run.count({Family::C, n}, K);
                    const BigInt got = path_count_height(2 * n, K + 1, false);
                    if (got != want) {
                        d = mismatch("C" + std::to_string(n) + " K=" + std::to_string(K), got, want);
                        return false;
                    }
                }
            return true;
        });
    }
}

void suite_abelian(Runner& run) {
    std::vector<LieType> types;
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
        for (int n = min_classical_rank(f); n <= std::max(run.max_rank(), 7); ++n) types.push_back({f, n});
    for (LieType lt : exceptional_types()) types.push_back(lt);
    for (LieType lt : types) {
        if (!run.family_selected(lt.family)) continue;
        run.check("abelian", lt.name() + " class<=1 count is 2^rank", [&](std::string& d) {
            const BigInt got = distribution_at_most(run.histogram(lt), 1);
            d = got.get_str();
            return got == pow2(lt.rank);
        });
    }
}

void suite_series(Runner& run) {
    run.check("series", "all counting series integral and nonnegative through x^12", [&](std::string& d) {
        for (int h = 0; h <= 12; ++h) {
            for (const PowerSeries& s : {gf_A_le(h, 12), gf_C_le(h, 12), gf_B_le(h, 12), gf_D_le(h, 12), gf_B_K(h, 12), gf_D_K(h, 12)})
                if (!s.integral() || !s.nonnegative()) {
                    d = "h/K=" + std::to_string(h);
                    return false;
                }
            const PowerSeries diff = gf_C_le(h + 1, 12) - gf_C_le(h, 12);
            if (!diff.nonnegative()) {
                d = "C telescoping at h=" + std::to_string(h);
                return false;
            }
        }
        return true;
    });
    run.check("series", "continued fraction identity, depth 1..10", [&](std::string& d) {
        for (int h = 1; h <= 10; ++h)
            if (!verify_cf_identity(h, 20)) {
                d = "h=" + std::to_string(h);
                return false;
            }
        return true;
    });
    run.check("series", "Chebyshev product and square identities, k <= 12", [&](std::string& d) {
        for (int k = 0; k <= 12; ++k)
            if (!verify_product_identity(k) || !verify_square_identity(k)) {
                d = "k=" + std::to_string(k);
                return false;
            }
        return true;
    });
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts, const std::function<void(const CheckResult&)>& report) {
    const auto& suites = verification_suites();
    if (opts.suite != "all" && std::find(suites.begin(), suites.end(), opts.suite) == suites.end())
        throw std::invalid_argument("unknown suite '" + opts.suite + "'");
    if (opts.max_rank < 2) throw std::invalid_argument("max rank must be at least 2");
    Runner run(opts, report);
    if (run.wants("agreement")) suite_agreement(run);
    if (run.wants("totals")) suite_totals(run);
    if (run.wants("table1")) suite_table1(run);
    if (run.wants("formulas")) suite_formulas(run);
    if (run.wants("gf")) suite_gf(run);
    if (run.wants("corollaries")) suite_corollaries(run);
    if (run.wants("paths")) suite_paths(run);
    if (run.wants("abelian")) suite_abelian(run);
    if (run.wants("series")) suite_series(run);
    return run.results();
}

}  // namespace adnil
