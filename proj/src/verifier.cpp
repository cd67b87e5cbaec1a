#include "rectcount/verifier.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rectcount/counting.hpp"
#include "rectcount/matrix_io.hpp"
#include "rectcount/subset_lattice.hpp"

namespace rectcount {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void record(VerificationReport& rep, Failure f) {
    if (rep.failures.size() < max_recorded_failures) rep.failures.push_back(std::move(f));
}

}  // namespace

std::uint64_t ParamGrid::for_each(const std::function<void(std::span<const long long>)>& visit) const {
    std::vector<long long> tuple(ranges.size());
    std::uint64_t visited = 0;
    const std::function<void(std::size_t)> descend = [&](std::size_t depth) {
        if (depth == ranges.size()) {
            if (!admissible || admissible(tuple)) {
                visit(tuple);
                ++visited;
            }
            return;
        }
        for (long long v = ranges[depth].lo; v <= ranges[depth].hi; ++v) {
            tuple[depth] = v;
            descend(depth + 1);
        }
    };
    descend(0);
    return visited;
}

std::uint64_t ParamGrid::admissible_count() const {
    return for_each([](std::span<const long long>) {});
}

std::string ParamGrid::describe() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < ranges.size(); ++i) {
        if (i) out << ' ';
        out << ranges[i].name << '=' << ranges[i].lo << ".." << ranges[i].hi;
    }
    if (!constraint_desc.empty()) out << " [" << constraint_desc << ']';
    return out.str();
}

std::vector<ParamRange> default_boxes(IdentityId id) {
    switch (id) {
        case IdentityId::prop2_1:
            return {{"k", 0, 64}};
        case IdentityId::eq7:
            return {{"n", 0, 16}, {"k", 0, 16}, {"l", 0, 16}, {"m1", 0, 16}, {"m2", 0, 16}};
        case IdentityId::eq8:
        case IdentityId::eq10:
            return {{"n", 0, 60}, {"k", 0, 60}, {"m", 0, 60}};
        case IdentityId::eq9:
            return {{"n", 0, 30}, {"k", 0, 30}, {"l", 0, 30}, {"m", 0, 30}};
        case IdentityId::klee:
            return {{"k", 0, 40}, {"m", 0, 80}};
        case IdentityId::eq11:
        case IdentityId::eq12:
            return {{"n", 0, 40}, {"k", 0, 12}, {"m", 0, 40}};
    }
    throw std::invalid_argument("default_boxes: unknown identity");
}

ParamGrid grid_for(IdentityId id, std::vector<ParamRange> boxes) {
    const IdentitySignature& sig = signature(id);
    if (boxes.size() != sig.params.size())
        throw std::invalid_argument(std::string(sig.name) + ": grid/signature mismatch");
    for (std::size_t i = 0; i < boxes.size(); ++i)
        if (boxes[i].name != sig.params[i])
            throw std::invalid_argument(std::string(sig.name) + ": grid/signature mismatch at parameter " +
                                        boxes[i].name);
    ParamGrid grid;
    grid.ranges = std::move(boxes);
    switch (id) {
        // The sweep constraints mirror the checked parameter sets: eq8/eq9/
        // eq10 additionally pin m <= n, which the signatures leave free.
        case IdentityId::eq8:
        case IdentityId::eq10:
            grid.admissible = [](std::span<const long long> p) { return p[1] <= p[0] && p[2] <= p[0]; };
            grid.constraint_desc = "0 <= k,m <= n";
            break;
        case IdentityId::eq9:
            grid.admissible = [](std::span<const long long> p) {
                return p[2] <= p[1] && p[1] <= p[0] && p[3] <= p[0];
            };
            grid.constraint_desc = "0 <= l <= k <= n, 0 <= m <= n";
            break;
        default:
            grid.admissible = sig.admissible;
            grid.constraint_desc = std::string(sig.constraint);
            break;
    }
    return grid;
}

ParamGrid default_grid(IdentityId id) { return grid_for(id, default_boxes(id)); }

VerificationReport verify_identity(IdentityId id, const ParamGrid& grid, const TermFault* fault) {
    const IdentitySignature& sig = signature(id);
    if (grid.ranges.size() != sig.params.size())
        throw std::invalid_argument(std::string(sig.name) + ": grid/signature mismatch");
    for (std::size_t i = 0; i < grid.ranges.size(); ++i)
        if (grid.ranges[i].name != sig.params[i])
            throw std::invalid_argument(std::string(sig.name) + ": grid/signature mismatch at parameter " +
                                        grid.ranges[i].name);

    VerificationReport rep;
    rep.check = std::string(sig.name);
    rep.grid = grid.describe();

    BinomCache cache;
    const auto start = Clock::now();
    rep.tuples_checked = grid.for_each([&](std::span<const long long> tuple) {
        const EvalResult r = eval_identity(id, tuple, cache, fault);
        if (r.lhs != r.rhs) {
            Failure f;
            for (std::size_t i = 0; i < tuple.size(); ++i)
                f.params.emplace_back(std::string(sig.params[i]), tuple[i]);
            f.lhs = r.lhs.str();
            f.rhs = r.rhs.str();
            record(rep, std::move(f));
        }
    });
    rep.wall_time_ms = elapsed_ms(start);
    return rep;
}

namespace {

// All randomness below comes from raw engine draws so that reports are
// reproducible from the recorded seed alone.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

struct Instance {
    RectMatrix matrix;
    ColumnPattern pattern;
};

Instance random_instance(std::mt19937_64& rng, const CountingCheckOptions& o) {
    const auto m = static_cast<std::size_t>(1 + draw(rng, static_cast<std::uint64_t>(o.random_m_max)));
    const auto n = static_cast<std::size_t>(draw(rng, static_cast<std::uint64_t>(o.random_n_max) + 1));
    const auto q = static_cast<std::uint64_t>(o.alphabet_min) +
                   draw(rng, static_cast<std::uint64_t>(o.alphabet_max - o.alphabet_min) + 1);
    Instance inst{RectMatrix(m, n), ColumnPattern{}};
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inst.matrix.set(r, c, Symbol{static_cast<std::int32_t>(draw(rng, q))});
    inst.pattern.entries.reserve(m);
    for (std::size_t r = 0; r < m; ++r)
        inst.pattern.entries.push_back(Symbol{static_cast<std::int32_t>(draw(rng, q))});
    return inst;
}

std::string instance_detail(const Instance& inst) {
    return format_matrix(inst.matrix) + "pattern: " + format_pattern(inst.pattern);
}

}  // namespace

VerificationReport verify_counting(const CountingCheckOptions& o) {
    if (o.random_m_max < 1 || o.random_m_max > 12 || o.exhaustive_m_max > 4 || o.exhaustive_n_max > 4)
        throw std::invalid_argument("verify_counting: mode guards violated");
    if (o.alphabet_min < 1 || o.alphabet_max < o.alphabet_min)
        throw std::invalid_argument("verify_counting: bad alphabet range");

    VerificationReport rep;
    rep.check = "counting";
    {
        std::ostringstream g;
        g << "exhaustive: binary, m=1.." << o.exhaustive_m_max << " n=0.." << o.exhaustive_n_max
          << ", all matrices x all patterns; random: " << o.random_samples << " samples, m<="
          << o.random_m_max << " n<=" << o.random_n_max << " alphabet=" << o.alphabet_min << ".."
          << o.alphabet_max;
        rep.grid = g.str();
    }
    rep.seed = o.seed;

    const auto start = Clock::now();

    // Exhaustive phase: every binary matrix crossed with every binary pattern.
    for (int m = 1; m <= o.exhaustive_m_max; ++m) {
        for (int n = 0; n <= o.exhaustive_n_max; ++n) {
            const std::uint64_t matrices = std::uint64_t{1} << (m * n);
            for (std::uint64_t code = 0; code < matrices; ++code) {
                RectMatrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
                for (int r = 0; r < m; ++r)
                    for (int col = 0; col < n; ++col)
                        if ((code >> (r * n + col)) & 1u)
                            a.set(static_cast<std::size_t>(r), static_cast<std::size_t>(col), sym1);
                for (std::uint32_t pat = 0; pat < (1u << m); ++pat) {
                    ColumnPattern c;
                    c.entries.reserve(static_cast<std::size_t>(m));
                    for (int r = 0; r < m; ++r) c.entries.push_back((pat >> r) & 1u ? sym1 : sym0);
                    const std::int64_t direct = count_direct(a, c);
                    const std::int64_t incl_excl = count_inclusion_exclusion(a, c);
                    ++rep.tuples_checked;
                    if (direct != incl_excl) {
                        Failure f;
                        f.params = {{"m", m}, {"n", n}, {"matrix_code", static_cast<long long>(code)},
                                    {"pattern_code", pat}};
                        f.lhs = std::to_string(direct);
                        f.rhs = std::to_string(incl_excl);
                        f.detail = instance_detail({a, c});
                        record(rep, std::move(f));
                    }
                }
            }
        }
    }

    // Random phase.
    std::mt19937_64 rng(o.seed);
    for (int s = 0; s < o.random_samples; ++s) {
        const Instance inst = random_instance(rng, o);
        const std::int64_t direct = count_direct(inst.matrix, inst.pattern);
        const std::int64_t incl_excl = count_inclusion_exclusion(inst.matrix, inst.pattern);
        ++rep.tuples_checked;
        if (direct != incl_excl) {
            Failure f;
            f.params = {{"sample", s},
                        {"m", static_cast<long long>(inst.matrix.rows())},
                        {"n", static_cast<long long>(inst.matrix.cols())}};
            f.lhs = std::to_string(direct);
            f.rhs = std::to_string(incl_excl);
            f.detail = instance_detail(inst);
            record(rep, std::move(f));
        }
    }

    rep.wall_time_ms = elapsed_ms(start);
    return rep;
}

VerificationReport verify_pipeline(int n_max) {
    if (n_max < 0 || n_max > 10)
        throw std::invalid_argument("verify_pipeline: n_max must be in 0..10");

    VerificationReport rep;
    rep.check = "pipeline";
    rep.grid = "n=0.." + std::to_string(n_max) + " [0 <= l <= k <= n, 0 <= m1 <= m2 <= n]";

    const auto start = Clock::now();
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (int l = 0; l <= k; ++l) {
                // canonical split: contain the first l elements, avoid the next k-l
                const std::uint32_t contain = (1u << l) - 1u;
                const std::uint32_t avoid = ((1u << (k - l)) - 1u) << l;
                for (int m1 = 0; m1 <= n; ++m1) {
                    for (int m2 = m1; m2 <= n; ++m2) {
                        const auto table = theorem_input_table(n, k, l, m1, m2);
                        const ExactInt bivariate = count_binary_bivariate(table, l, k);
                        const SubsetConstraint constraint{n, contain, avoid, m1, m2};
                        const std::uint64_t formula = count_subsets_formula(constraint);
                        const std::uint64_t brute = count_subsets_brute(constraint);
                        ++rep.tuples_checked;
                        if (bivariate != formula || formula != brute) {
                            Failure f;
                            f.params = {{"n", n}, {"k", k}, {"l", l}, {"m1", m1}, {"m2", m2}};
                            f.lhs = std::to_string(brute);
                            f.rhs = bivariate.str();
                            f.detail = "formula=" + std::to_string(formula);
                            record(rep, std::move(f));
                        }
                    }
                }
            }
        }
    }
    rep.wall_time_ms = elapsed_ms(start);
    return rep;
}

namespace {

nlohmann::json failure_json(const Failure& f) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [name, value] : f.params) params[name] = value;
    return {{"params", params}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"detail", f.detail}};
}

nlohmann::json report_json(const VerificationReport& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const Failure& f : r.failures) failures.push_back(failure_json(f));
    nlohmann::json j;
    j["check"] = r.check;
    j["grid"] = r.grid;
    j["tuples_checked"] = r.tuples_checked;
    j["failures"] = std::move(failures);
    if (r.seed)
        j["seed"] = *r.seed;
    else
        j["seed"] = nullptr;
    j["status"] = r.status();
    j["wall_time_ms"] = r.wall_time_ms;
    return j;
}

}  // namespace

std::string to_json_string(const VerificationReport& r) { return report_json(r).dump(2) + "\n"; }

std::string to_json_string(std::span<const VerificationReport> reports) {
    bool all_passed = true;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        all_passed = all_passed && r.passed();
        arr.push_back(report_json(r));
    }
    nlohmann::json j;
    j["check"] = "all";
    j["status"] = all_passed ? "PASS" : "FAIL";
    j["reports"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string to_text(const VerificationReport& r) {
    std::ostringstream out;
    out << r.check << ": " << r.status() << "  tuples=" << r.tuples_checked;
    if (r.seed) out << "  seed=" << *r.seed;
    out << "  wall_ms=" << r.wall_time_ms << "  grid: " << r.grid << '\n';
    for (const Failure& f : r.failures) {
        out << "  counterexample:";
        for (const auto& [name, value] : f.params) out << ' ' << name << '=' << value;
        out << "  lhs=" << f.lhs << " rhs=" << f.rhs << '\n';
        if (!f.detail.empty()) {
            std::istringstream lines(f.detail);
            std::string line;
            while (std::getline(lines, line)) out << "    " << line << '\n';
        }
    }
    return out.str();
}

}  // namespace rectcount
