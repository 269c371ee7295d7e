#include "adnil/cli.hpp"

#include "adnil/closedform.hpp"
#include "adnil/genfun.hpp"
#include "adnil/nilpotence.hpp"
#include "adnil/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace adnil {

using json = nlohmann::ordered_json;

int default_workers() {
    if (const char* env = std::getenv("ADNIL_WORKERS")) {
        try {
            const int w = std::stoi(env);
            if (w > 0) return w;
        } catch (const std::exception&) {
        }
    }
    return std::max(1, omp_get_max_threads());
}

std::string distribution_to_csv(const Distribution& d) {
    std::ostringstream os;
    os << "K,count\n";
    for (const auto& [K, c] : d) os << K << ',' << to_decimal(c) << '\n';
    os << "total," << to_decimal(distribution_total(d)) << '\n';
    return os.str();
}

std::string distribution_to_json(const Distribution& d, const std::string& type_name, const std::string& method) {
    json j;
    j["type"] = type_name;
    j["method"] = method;
    json dist = json::object();
    for (const auto& [K, c] : d) dist[std::to_string(K)] = to_decimal(c);
    j["distribution"] = dist;
    j["total"] = to_decimal(distribution_total(d));
    return j.dump(2) + "\n";
}

Distribution parse_distribution_json(const std::string& text) {
    const json j = json::parse(text);
    Distribution d;
    for (const auto& [key, value] : j.at("distribution").items()) d[std::stoi(key)] = BigInt(value.get<std::string>());
    if (j.contains("total") && BigInt(j["total"].get<std::string>()) != distribution_total(d))
        throw std::invalid_argument("distribution JSON: total does not match the rows");
    return d;
}

namespace {

struct Config {
    std::string type;
    std::optional<int> rank;
    std::string method = "oracle";
    std::string format = "csv";
    std::string output;
    int workers = 0;
    double budget = 0;
    bool progress = false;

    std::string suite = "all";
    std::string family;
    int max_rank = 6;
    bool keep_going = false;

    std::optional<int> le;
    std::optional<int> exact;
    int order = 12;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

LieType lie_type_of(const Config& c) {
    if (c.type.empty()) throw UsageError("--type is required");
    try {
        return parse_lie_type(c.type, c.rank);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Family family_of(const std::string& text, const std::string& allowed) {
    if (text.size() != 1) throw UsageError("--family expects one letter");
    const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (allowed.find(f) == std::string::npos) throw UsageError("--family must be one of " + allowed);
    return static_cast<Family>(f);
}

class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
            out_ = &file_;
        }
    }
    std::ostream& stream() { return *out_; }

private:
    std::ofstream file_;
    std::ostream* out_;
};

int cmd_roots(const Config& c, std::ostream& out) {
    const RootSystem rs(lie_type_of(c));
    Sink sink(c.output, out);
    if (c.format == "json") {
        json j;
        j["type"] = rs.lie_type().name();
        j["positive_roots"] = rs.size();
        j["coxeter_number"] = rs.coxeter_number();
        j["exponents"] = rs.exponents();
        if (rs.highest_root()) j["highest_root"] = rs.root(*rs.highest_root());
        json roots = json::array();
        for (int i = 0; i < rs.size(); ++i) {
            json r{{"index", i}, {"coefficients", rs.root(i)}, {"height", rs.height(i)}};
            if (rs.has_cells()) r["cell"] = {rs.cell_of(i).row, rs.cell_of(i).col};
            roots.push_back(r);
        }
        j["roots"] = roots;
        sink.stream() << j.dump(2) << '\n';
        return kExitOk;
    }
    sink.stream() << "index,root,height" << (rs.has_cells() ? ",row,col" : "") << '\n';
    for (int i = 0; i < rs.size(); ++i) {
        sink.stream() << i << ',' << format_root(rs.root(i)) << ',' << rs.height(i);
        if (rs.has_cells()) sink.stream() << ',' << rs.cell_of(i).row << ',' << rs.cell_of(i).col;
        sink.stream() << '\n';
    }
    return kExitOk;
}

std::string generators_str(const RootSystem& rs, const IdealSet& ideal) {
    std::string s;
    ideal_minimal_elements(rs, ideal).for_each([&](int i) {
        if (!s.empty()) s += ' ';
        s += format_root(rs.root(i));
    });
    return s;
}

int cmd_enumerate(const Config& c, std::ostream& out) {
    const RootSystem rs(lie_type_of(c));
    const Method m = parse_method(c.method);
    if (!method_supports(m, rs.lie_type().family))
        throw UsageError("method " + c.method + " does not apply to type " + rs.lie_type().name());
    const std::vector<IdealSet> ideals = enumerate_ideals(rs);
    Sink sink(c.output, out);
    if (c.format == "json") {
        json arr = json::array();
        for (const IdealSet& s : ideals)
            arr.push_back({{"dimension", ideal_dimension(s)}, {"class", ideal_class(rs, s, m)}, {"generators", generators_str(rs, s)}});
        sink.stream() << json{{"type", rs.lie_type().name()}, {"method", c.method}, {"ideals", arr}}.dump(2) << '\n';
        return kExitOk;
    }
    sink.stream() << "index,dimension,class,generators\n";
    for (std::size_t k = 0; k < ideals.size(); ++k)
        sink.stream() << k << ',' << ideal_dimension(ideals[k]) << ',' << ideal_class(rs, ideals[k], m) << ','
                      << generators_str(rs, ideals[k]) << '\n';
    return kExitOk;
}

int cmd_table(const Config& c, std::ostream& out, std::ostream& err) {
    const RootSystem rs(lie_type_of(c));
    const Method m = parse_method(c.method);
    if (!method_supports(m, rs.lie_type().family))
        throw UsageError("method " + c.method + " does not apply to type " + rs.lie_type().name());
    DistributionOptions opts;
    opts.workers = c.workers > 0 ? c.workers : default_workers();
    opts.budget_seconds = c.budget;
    const bool show_progress = c.progress || rs.lie_type() == LieType{Family::E, 8};
    if (show_progress) {
        const auto start = std::chrono::steady_clock::now();
        int last = -1;
        opts.progress = [&err, start, last](std::size_t done, std::size_t total) mutable {
            const int pct = static_cast<int>(100 * done / total);
            if (pct / 10 == last / 10 && done != total) return;
            last = pct;
            const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            err << "progress " << done << '/' << total << " tasks (" << pct << "%), " << s << " s\n";
        };
    }
    const Distribution d = class_distribution(rs, m, opts);
    Sink sink(c.output, out);
    sink.stream() << (c.format == "json" ? distribution_to_json(d, rs.lie_type().name(), c.method) : distribution_to_csv(d));
    return kExitOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
    VerifyOptions v;
    v.suite = c.suite;
    if (!c.family.empty()) v.family = family_of(c.family, "ABCDEFG");
    v.max_rank = c.max_rank;
    v.keep_going = c.keep_going;
    v.budget_seconds = c.budget;
    v.workers = c.workers > 0 ? c.workers : default_workers();
    const auto& suites = verification_suites();
    if (v.suite != "all" && std::find(suites.begin(), suites.end(), v.suite) == suites.end())
        throw UsageError("unknown suite '" + v.suite + "'");
    if (v.max_rank < 2) throw UsageError("--max-rank must be at least 2");
    int passed = 0, failed = 0, skipped = 0;
    run_verification(v, [&](const CheckResult& r) {
        const char* tag = r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL";
        out << tag << "  [" << r.suite << "] " << r.name;
        if (!r.detail.empty()) out << "  (" << r.detail << ')';
        out << std::endl;
        (r.skipped ? skipped : r.passed ? passed : failed)++;
    });
    out << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    return failed == 0 ? kExitOk : kExitVerificationFailed;
}

PowerSeries le_series(Family f, int h, int order) {
    switch (f) {
        case Family::A: return gf_A_le(h, order);
        case Family::B: return gf_B_le(h, order);
        case Family::C: return gf_C_le(h, order);
        default: return gf_D_le(h, order);
    }
}

int cmd_gf(const Config& c, std::ostream& out) {
    const Family f = family_of(c.family, "ABCD");
    if (c.le.has_value() == c.exact.has_value()) throw UsageError("give exactly one of --le and --exact");
    if (c.order < 1) throw UsageError("--order must be at least 1");
    const int h = c.le ? *c.le : *c.exact;
    if (h < 0) throw UsageError("class bound must be nonnegative");
    PowerSeries s;
    if (c.le) {
        s = le_series(f, h, c.order);
    } else if (f == Family::B) {
        s = gf_B_K(h, c.order);
    } else if (f == Family::D) {
        s = gf_D_K(h, c.order);
    } else {
        s = h == 0 ? le_series(f, 0, c.order) : le_series(f, h, c.order) - le_series(f, h - 1, c.order);
    }
    const std::vector<BigInt> coeffs = s.integers();
    Sink sink(c.output, out);
    if (c.format == "json") {
        json arr = json::array();
        for (const BigInt& v : coeffs) arr.push_back(to_decimal(v));
        sink.stream() << json{{"family", std::string(1, static_cast<char>(f))},
                              {c.le ? "le" : "exact", h},
                              {"order", c.order},
                              {"coefficients", arr}}
                             .dump(2)
                      << '\n';
        return kExitOk;
    }
    sink.stream() << "power,coefficient\n";
    for (std::size_t k = 0; k < coeffs.size(); ++k) sink.stream() << k << ',' << to_decimal(coeffs[k]) << '\n';
    return kExitOk;
}

int cmd_qt(const Config& c, std::ostream& out) {
    const Family f = family_of(c.family, "AC");
    if (!c.rank) throw UsageError("--rank is required");
    const int n = *c.rank;
    if (n < 0 || (f == Family::C && n < 1)) throw UsageError("rank out of range");
    const QTPoly p = f == Family::A ? catalan_qt(n) : gamma_qt(n);
    Sink sink(c.output, out);
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& [key, v] : p.terms())
            arr.push_back({{"class", key.first}, {"dimension", key.second}, {"count", to_decimal(v)}});
        sink.stream() << json{{"family", std::string(1, static_cast<char>(f))}, {"rank", n}, {"terms", arr}}.dump(2) << '\n';
        return kExitOk;
    }
    sink.stream() << "class,dimension,count\n";
    for (const auto& [key, v] : p.terms()) sink.stream() << key.first << ',' << key.second << ',' << to_decimal(v) << '\n';
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ad-nilpotent ideals of Borel subalgebras and their classes of nilpotence", "adnil"};
    app.require_subcommand(1);
    Config c;

    const std::vector<std::string> methods{"oracle", "filling", "recursion", "zigzag", "p43", "ray", "tworay"};
    const auto add_type = [&](CLI::App* sub) {
        sub->add_option("--type,-t", c.type, "Lie type, e.g. E8, B3, or a family letter with --rank")->required();
        sub->add_option("--rank,-r", c.rank, "Rank when --type is a bare family letter");
    };
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format,-f", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--output,-o", c.output, "Write to this file instead of standard output");
    };

    CLI::App* roots = app.add_subcommand("roots", "List positive roots");
    add_type(roots);
    add_format(roots);

    CLI::App* enumerate = app.add_subcommand("enumerate", "List every ideal with its dimension and class");
    add_type(enumerate);
    enumerate->add_option("--method,-m", c.method, "Class algorithm")->check(CLI::IsMember(methods));
    add_format(enumerate);

    CLI::App* table = app.add_subcommand("table", "Distribution of ideals by class of nilpotence");
    add_type(table);
    table->add_option("--method,-m", c.method, "Class algorithm")->check(CLI::IsMember(methods));
    table->add_option("--workers,-w", c.workers, "Worker threads (default: ADNIL_WORKERS or all)")->check(CLI::PositiveNumber);
    table->add_option("--budget", c.budget, "Wall-clock limit in seconds")->check(CLI::NonNegativeNumber);
    table->add_flag("--progress", c.progress, "Report progress on standard error");
    add_format(table);

    CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite,-s", c.suite, "Suite name or 'all'");
    verify->add_option("--family", c.family, "Restrict to one family letter");
    verify->add_option("--max-rank", c.max_rank, "Largest classical rank checked");
    verify->add_flag("--keep-going", c.keep_going, "Continue after a failed check");
    verify->add_option("--budget", c.budget, "Wall-clock limit in seconds")->check(CLI::NonNegativeNumber);
    verify->add_option("--workers,-w", c.workers, "Worker threads")->check(CLI::PositiveNumber);

    CLI::App* gf = app.add_subcommand("gf", "Expand a generating function");
    gf->add_option("--family", c.family, "A, B, C or D")->required();
    gf->add_option("--le", c.le, "Ideals of class at most h");
    gf->add_option("--exact", c.exact, "Ideals of class exactly K");
    gf->add_option("--order", c.order, "Highest power of x");
    add_format(gf);

    CLI::App* qt = app.add_subcommand("qt", "Joint distribution of class and dimension");
    qt->add_option("--family", c.family, "A or C")->required();
    qt->add_option("--rank,-r", c.rank, "Rank")->required();
    add_format(qt);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*roots) return cmd_roots(c, out);
        if (*enumerate) return cmd_enumerate(c, out);
        if (*table) return cmd_table(c, out, err);
        if (*verify) return cmd_verify(c, out);
        if (*gf) return cmd_gf(c, out);
        if (*qt) return cmd_qt(c, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerificationFailed;
    }
    return kExitUsage;
}

}  // namespace adnil
