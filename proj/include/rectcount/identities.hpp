#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "rectcount/binomial.hpp"
#include "rectcount/exact_int.hpp"

namespace rectcount {

// The identity catalog. Parameter signatures:
//   prop2_1(k)             1 = sum_i (-1)^i C(k,i) 2^(k-i)
//   eq7(n,k,l,m1,m2)       sum C(n-k,i) = triple alternating sum
//   eq8(n,k,m)             C(n-k,m-k) = sum_i (-1)^i C(k,i) C(n-i,m)
//   eq9(n,k,l,m)           C(n-k,m-l) = double alternating sum
//   eq10(n,k,m)            C(n-k,m)   = sum_i (-1)^i C(k,i) C(n-i,m-i)
//   klee(k,m)              (-1)^k C(k,m-k) = sum_i (-1)^i C(k,i) C(k+i,m)
//   eq11(n,k,m)            sum_{i<=m} C(n,i), inner index 0..m-i1
//   eq12(n,k,m)            sum_{i<=m} C(n,i), inner index k..m+k
enum class IdentityId { prop2_1, eq7, eq8, eq9, eq10, klee, eq11, eq12 };

inline constexpr std::size_t identity_count = 8;

struct IdentitySignature {
    IdentityId id;
    std::string_view name;
    std::span<const std::string_view> params;  // canonical order
    bool (*admissible)(std::span<const long long>);
    std::string_view constraint;  // human-readable admissibility
};

std::span<const IdentitySignature> identity_signatures();
const IdentitySignature& signature(IdentityId id);
std::optional<IdentityId> identity_by_name(std::string_view name);

struct EvalResult {
    ExactInt lhs;
    ExactInt rhs;
};

// Mutation hook for fault-sensitivity tests: adds delta to the rhs term with
// the given flat index (rhs evaluation order, counted per call). Normal
// evaluation passes nullptr.
struct TermFault {
    long long term_index = 0;
    int delta = 1;
};

// Evaluates both sides exactly over the stated index ranges. Throws
// std::invalid_argument if params do not satisfy the identity's signature.
EvalResult eval_identity(IdentityId id, std::span<const long long> params, BinomCache& cache,
                         const TermFault* fault = nullptr);
EvalResult eval_identity(IdentityId id, std::span<const long long> params);

// Number of rhs terms the evaluator visits for these params.
long long rhs_term_count(IdentityId id, std::span<const long long> params, BinomCache& cache);

}  // namespace rectcount
