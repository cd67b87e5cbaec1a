#include "rectcount/binomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace rectcount {

ExactInt binom(long long n, long long r) {
    if (n < 0) throw std::invalid_argument("binom: upper argument must be nonnegative");
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    ExactInt result = 1;
    for (long long i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i;  // exact: result is C(n-r+i, i) after each step
    }
    return result;
}

const ExactInt& BinomCache::operator()(long long n, long long r) {
    if (n < 0) throw std::invalid_argument("binom: upper argument must be nonnegative");
    if (r < 0 || r > n) return zero_;
    while (rows_.size() <= static_cast<std::size_t>(n)) {
        const auto i = static_cast<long long>(rows_.size());
        std::vector<ExactInt> row;
        row.reserve(static_cast<std::size_t>(i) + 1);
        ExactInt v = 1;
        row.push_back(v);
        for (long long j = 1; j <= i; ++j) {
            v *= i - j + 1;
            v /= j;
            row.push_back(v);
        }
        rows_.push_back(std::move(row));
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
}

std::vector<ExactInt> bernoulli_row(long long n, long long upto) {
    if (n < 0 || upto < 0 || upto > n)
        throw std::invalid_argument("bernoulli_row: need 0 <= upto <= n");
    std::vector<ExactInt> sums;
    sums.reserve(static_cast<std::size_t>(upto) + 1);
    ExactInt running = 0;
    ExactInt cnm = 1;  // C(n, m), advanced multiplicatively
    for (long long m = 0; m <= upto; ++m) {
        running += cnm;
        sums.push_back(running);
        cnm *= n - m;
        cnm /= m + 1;
    }
    return sums;
}

}  // namespace rectcount
