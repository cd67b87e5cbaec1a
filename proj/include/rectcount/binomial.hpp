#pragma once

#include <vector>

#include "rectcount/exact_int.hpp"

namespace rectcount {

// C(n, r) by the multiplicative formula, dividing exactly at every step.
// n must be nonnegative; r outside [0, n] yields 0 (this convention makes
// every summation range in the identity evaluators total).
ExactInt binom(long long n, long long r);

// Memo table over binom(); whole rows are filled on first touch. Not thread
// safe - each sweep holds its own cache.
class BinomCache {
  public:
    const ExactInt& operator()(long long n, long long r);

  private:
    std::vector<std::vector<ExactInt>> rows_;
    ExactInt zero_ = 0;
};

// Partial sums of row n of Pascal's triangle: [sum_{i<=m} C(n,i)] for
// m = 0..upto. Requires 0 <= upto <= n.
std::vector<ExactInt> bernoulli_row(long long n, long long upto);

}  // namespace rectcount
