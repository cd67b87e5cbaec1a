#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rectcount/identities.hpp"

namespace rectcount {

inline constexpr std::uint64_t default_seed = 123456789;
inline constexpr std::size_t max_recorded_failures = 100;

struct ParamRange {
    std::string name;
    long long lo = 0;
    long long hi = 0;  // inclusive
};

// Box of inclusive ranges plus an admissibility predicate. Iteration is
// lexicographic, first range outermost; each admissible tuple is visited
// exactly once.
struct ParamGrid {
    std::vector<ParamRange> ranges;
    std::function<bool(std::span<const long long>)> admissible;  // null = all tuples
    std::string constraint_desc;

    std::uint64_t for_each(const std::function<void(std::span<const long long>)>& visit) const;
    std::uint64_t admissible_count() const;
    std::string describe() const;
};

// Default boxes reproduce the compiled-in verification grids; grid_for
// attaches the per-identity constraint to user-supplied boxes.
std::vector<ParamRange> default_boxes(IdentityId id);
ParamGrid grid_for(IdentityId id, std::vector<ParamRange> boxes);
ParamGrid default_grid(IdentityId id);

struct Failure {
    std::vector<std::pair<std::string, long long>> params;
    std::string lhs;
    std::string rhs;
    std::string detail;  // e.g. the offending matrix in text form
};

struct VerificationReport {
    std::string check;
    std::string grid;
    std::uint64_t tuples_checked = 0;
    std::vector<Failure> failures;  // first max_recorded_failures only
    std::optional<std::uint64_t> seed;
    double wall_time_ms = 0.0;

    bool passed() const { return failures.empty(); }
    const char* status() const { return passed() ? "PASS" : "FAIL"; }
};

// Sweeps lhs/rhs over every admissible tuple, collecting all failures (up to
// the recording bound) rather than stopping at the first.
VerificationReport verify_identity(IdentityId id, const ParamGrid& grid,
                                   const TermFault* fault = nullptr);

// Theorem-equivalence check: count_inclusion_exclusion == count_direct on an
// exhaustive binary phase and a seeded random phase.
struct CountingCheckOptions {
    int exhaustive_m_max = 3;
    int exhaustive_n_max = 3;
    int random_samples = 1000;
    int random_m_max = 12;
    int random_n_max = 64;
    int alphabet_min = 2;
    int alphabet_max = 4;
    std::uint64_t seed = default_seed;
};

VerificationReport verify_counting(const CountingCheckOptions& opts = {});

// Triple agreement bivariate-theorem = closed formula = brute force over all
// 0 <= l <= k <= n <= n_max and all size windows 0 <= m1 <= m2 <= n.
VerificationReport verify_pipeline(int n_max);

std::string to_json_string(const VerificationReport& r);
std::string to_json_string(std::span<const VerificationReport> reports);  // "all" document
std::string to_text(const VerificationReport& r);

}  // namespace rectcount
