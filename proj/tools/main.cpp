#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rectcount/binomial.hpp"
#include "rectcount/counting.hpp"
#include "rectcount/identities.hpp"
#include "rectcount/matrix_io.hpp"
#include "rectcount/verifier.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_counterexample = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "lo..hi" or a single value
std::pair<long long, long long> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const long long v = std::stoll(text);
            return {v, v};
        }
        const long long lo = std::stoll(text.substr(0, dots));
        const long long hi = std::stoll(text.substr(dots + 2));
        return {lo, hi};
    } catch (const std::exception&) {
        throw UsageError("bad range '" + text + "', expected INT or LO..HI");
    }
}

std::uint64_t seed_from_env() {
    const char* env = std::getenv("RECTCOUNT_SEED");
    if (env == nullptr) return rectcount::default_seed;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw UsageError("RECTCOUNT_SEED must be a single nonnegative integer");
    }
}

void write_atomically(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw UsageError("cannot open '" + tmp + "' for writing");
        out << content;
        if (!out.flush()) throw UsageError("write to '" + tmp + "' failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw UsageError("cannot rename '" + tmp + "' to '" + path + "'");
}

std::ifstream open_or_fail(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return in;
}

std::string default_grid_help() {
    std::ostringstream out;
    out << "Default grids (used when no range flags are given):\n";
    for (const auto& sig : rectcount::identity_signatures()) {
        out << "  " << sig.name;
        for (std::size_t i = sig.name.size(); i < 10; ++i) out << ' ';
        out << rectcount::default_grid(sig.id).describe() << '\n';
    }
    rectcount::CountingCheckOptions c;
    out << "  counting  exhaustive binary m=1.." << c.exhaustive_m_max << " n=0.." << c.exhaustive_n_max
        << " + " << c.random_samples << " random samples (m<=" << c.random_m_max << " n<="
        << c.random_n_max << " alphabet=" << c.alphabet_min << ".." << c.alphabet_max << ")\n";
    out << "  pipeline  n=0..10 [0 <= l <= k <= n, 0 <= m1 <= m2 <= n]\n";
    out << "Set RECTCOUNT_SEED to override the random seed (recorded in reports).\n";
    out << "Exit codes: 0 all checks pass, 1 counterexample found, 2 usage or parse error.";
    return out.str();
}

struct GridFlags {
    std::map<std::string, std::string> ranges;  // param name -> range text
    bool any() const { return !ranges.empty(); }
};

void add_grid_flags(CLI::App* cmd, GridFlags& flags) {
    for (const char* name : {"n", "k", "l", "m", "m1", "m2"}) {
        cmd->add_option_function<std::string>(
               std::string("--") + name,
               [&flags, name](const std::string& v) { flags.ranges[name] = v; },
               std::string("range for parameter ") + name + " (INT or LO..HI)")
            ->type_name("RANGE");
    }
}

rectcount::ParamGrid build_identity_grid(rectcount::IdentityId id, const GridFlags& flags) {
    auto boxes = rectcount::default_boxes(id);
    for (const auto& [name, text] : flags.ranges) {
        bool known = false;
        for (auto& box : boxes) {
            if (box.name == name) {
                std::tie(box.lo, box.hi) = parse_range(text);
                known = true;
                break;
            }
        }
        if (!known)
            throw UsageError("--" + name + " is not a parameter of " +
                             std::string(rectcount::signature(id).name));
    }
    return rectcount::grid_for(id, std::move(boxes));
}

int run_count(const std::string& matrix_path, const std::string& pattern_path,
              const std::string& method) {
    rectcount::TokenTable symbols;
    auto matrix_in = open_or_fail(matrix_path);
    const rectcount::RectMatrix a = rectcount::parse_matrix(matrix_in, symbols);
    auto pattern_in = open_or_fail(pattern_path);
    const rectcount::ColumnPattern c = rectcount::parse_pattern(pattern_in, symbols, a.rows());

    if (method == "direct") {
        std::cout << rectcount::count_direct(a, c) << '\n';
        return exit_ok;
    }
    if (method == "inclusion-exclusion" || method == "incl-excl") {
        std::cout << rectcount::count_inclusion_exclusion(a, c) << '\n';
        return exit_ok;
    }
    if (method == "both") {
        const std::int64_t direct = rectcount::count_direct(a, c);
        const std::int64_t ie = rectcount::count_inclusion_exclusion(a, c);
        const bool match = direct == ie;
        std::cout << "direct=" << direct << " incl-excl=" << ie << (match ? " MATCH" : " MISMATCH")
                  << '\n';
        return match ? exit_ok : exit_counterexample;
    }
    throw UsageError("unknown method '" + method + "' (direct | inclusion-exclusion | both)");
}

int finish_verify(const std::vector<rectcount::VerificationReport>& reports, bool all_document,
                  const std::string& json_path) {
    bool all_passed = true;
    for (const auto& r : reports) {
        all_passed = all_passed && r.passed();
        std::cout << rectcount::to_text(r);
    }
    if (!json_path.empty()) {
        const std::string doc = all_document ? rectcount::to_json_string(std::span(reports))
                                             : rectcount::to_json_string(reports.front());
        write_atomically(json_path, doc);
    }
    if (all_document)
        std::cout << "all: " << (all_passed ? "PASS" : "FAIL") << "  (" << reports.size()
                  << " checks)\n";
    return all_passed ? exit_ok : exit_counterexample;
}

int run_verify(const std::string& check, const GridFlags& flags, std::optional<int> samples,
               const std::string& json_path, std::optional<long long> fault_term, int fault_delta) {
    const rectcount::TermFault fault{fault_term.value_or(0), fault_delta};
    const rectcount::TermFault* fault_ptr = fault_term ? &fault : nullptr;

    if (check == "all") {
        if (flags.any() || samples)
            throw UsageError("'verify all' uses the compiled-in default grids; drop the grid flags");
        std::vector<rectcount::VerificationReport> reports;
        for (const auto& sig : rectcount::identity_signatures())
            reports.push_back(
                rectcount::verify_identity(sig.id, rectcount::default_grid(sig.id), fault_ptr));
        rectcount::CountingCheckOptions opts;
        opts.seed = seed_from_env();
        reports.push_back(rectcount::verify_counting(opts));
        reports.push_back(rectcount::verify_pipeline(10));
        return finish_verify(reports, true, json_path);
    }

    if (check == "counting") {
        if (flags.any()) throw UsageError("counting takes --samples only, not grid flags");
        rectcount::CountingCheckOptions opts;
        if (samples) {
            if (*samples < 0) throw UsageError("--samples must be nonnegative");
            opts.random_samples = *samples;
        }
        opts.seed = seed_from_env();
        return finish_verify({rectcount::verify_counting(opts)}, false, json_path);
    }

    if (check == "pipeline") {
        int n_max = 10;
        for (const auto& [name, text] : flags.ranges) {
            if (name != "n") throw UsageError("pipeline takes --n only");
            n_max = static_cast<int>(parse_range(text).second);
        }
        if (samples) throw UsageError("--samples applies to the counting check only");
        return finish_verify({rectcount::verify_pipeline(n_max)}, false, json_path);
    }

    const auto id = rectcount::identity_by_name(check);
    if (!id)
        throw UsageError("unknown check '" + check +
                         "' (prop2_1 eq7 eq8 eq9 eq10 klee eq11 eq12 counting pipeline all)");
    if (samples) throw UsageError("--samples applies to the counting check only");
    const auto grid = build_identity_grid(*id, flags);
    if (grid.admissible_count() == 0)
        throw UsageError("grid selects no admissible tuple (constraint: " + grid.constraint_desc + ")");
    return finish_verify({rectcount::verify_identity(*id, grid, fault_ptr)}, false, json_path);
}

int run_sweep(const std::string& name, const GridFlags& flags) {
    const auto id = rectcount::identity_by_name(name);
    if (!id) throw UsageError("unknown identity '" + name + "'");
    const auto& sig = rectcount::signature(*id);
    const auto grid = build_identity_grid(*id, flags);
    if (grid.admissible_count() == 0)
        throw UsageError("grid selects no admissible tuple (constraint: " + grid.constraint_desc + ")");

    rectcount::BinomCache cache;
    std::uint64_t differing = 0;
    const std::uint64_t tuples = grid.for_each([&](std::span<const long long> tuple) {
        const auto r = rectcount::eval_identity(*id, tuple, cache);
        for (std::size_t i = 0; i < tuple.size(); ++i)
            std::cout << sig.params[i] << '=' << tuple[i] << ' ';
        const bool equal = r.lhs == r.rhs;
        differing += !equal;
        std::cout << "lhs=" << r.lhs.str() << " rhs=" << r.rhs.str() << (equal ? " ok" : " DIFFER")
                  << '\n';
    });
    std::cout << "# " << tuples << " tuples, " << differing << " differing\n";
    return differing == 0 ? exit_ok : exit_counterexample;
}

int run_bernoulli(long long n, std::optional<long long> upto, const std::string& via, long long k) {
    const long long m_max = upto.value_or(n);
    if (n < 0 || m_max < 0 || m_max > n) throw UsageError("need 0 <= upto <= n");
    if (k < 0) throw UsageError("--k must be nonnegative");

    std::vector<rectcount::ExactInt> row;
    if (via == "direct") {
        row = rectcount::bernoulli_row(n, m_max);
    } else if (via == "eq11" || via == "eq12") {
        const auto id = via == "eq11" ? rectcount::IdentityId::eq11 : rectcount::IdentityId::eq12;
        rectcount::BinomCache cache;
        row.reserve(static_cast<std::size_t>(m_max) + 1);
        for (long long m = 0; m <= m_max; ++m) {
            const long long params[] = {n, k, m};
            row.push_back(rectcount::eval_identity(id, params, cache).rhs);
        }
    } else {
        throw UsageError("unknown route '" + via + "' (direct | eq11 | eq12)");
    }

    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << row[i].str();
    }
    std::cout << '\n';
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rectcount: exact i-column counting and binomial identity verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "rectcount 0.1.0");

    // count
    auto* count_cmd = app.add_subcommand("count", "count the columns of a matrix equal to a pattern");
    std::string matrix_path, pattern_path, method = "both";
    count_cmd->add_option("--matrix,-A", matrix_path, "matrix file (\"m n\" header, then m rows)")
        ->required();
    count_cmd->add_option("--pattern,-c", pattern_path, "pattern file (one line of m tokens)")
        ->required();
    count_cmd->add_option("--method,-M", method,
                          "direct | inclusion-exclusion | both (default both)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->footer(default_grid_help());
    std::string check;
    verify_cmd
        ->add_option("check", check,
                     "prop2_1 | eq7 | eq8 | eq9 | eq10 | klee | eq11 | eq12 | counting | pipeline | all")
        ->required();
    GridFlags verify_flags;
    add_grid_flags(verify_cmd, verify_flags);
    std::optional<int> samples;
    verify_cmd->add_option("--samples", samples, "random sample count for the counting check");
    std::string json_path;
    verify_cmd->add_option("--json", json_path, "write the machine-readable report here (atomic)");
    std::optional<long long> fault_term;
    int fault_delta = 1;
    verify_cmd->add_option("--inject-fault-term", fault_term, "testing: corrupt this rhs term index")
        ->group("");
    verify_cmd->add_option("--inject-fault-delta", fault_delta, "testing: perturbation, default +1")
        ->group("");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "print lhs/rhs for every tuple of an identity grid");
    sweep_cmd->footer(default_grid_help());
    std::string sweep_name;
    sweep_cmd->add_option("identity", sweep_name, "prop2_1 | eq7 | eq8 | eq9 | eq10 | klee | eq11 | eq12")
        ->required();
    GridFlags sweep_flags;
    add_grid_flags(sweep_cmd, sweep_flags);

    // bernoulli
    auto* bern_cmd = app.add_subcommand("bernoulli", "print partial sums of a binomial row");
    long long bern_n = 0;
    std::optional<long long> bern_upto;
    std::string bern_via = "direct";
    long long bern_k = 1;
    bern_cmd->add_option("n", bern_n, "row index")->required();
    bern_cmd->add_option("--upto", bern_upto, "last partial sum index m (default n)");
    bern_cmd->add_option("--via", bern_via, "direct | eq11 | eq12 (default direct)");
    bern_cmd->add_option("--k", bern_k, "free parameter for the eq11/eq12 routes (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (count_cmd->parsed()) return run_count(matrix_path, pattern_path, method);
        if (verify_cmd->parsed())
            return run_verify(check, verify_flags, samples, json_path, fault_term, fault_delta);
        if (sweep_cmd->parsed()) return run_sweep(sweep_name, sweep_flags);
        if (bern_cmd->parsed()) return run_bernoulli(bern_n, bern_upto, bern_via, bern_k);
    } catch (const rectcount::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
