#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rectcount/exact_int.hpp"
#include "rectcount/matrix.hpp"

namespace rectcount {

// Guard for the 2^m subset loop in count_inclusion_exclusion.
inline constexpr int max_enumeration_rows = 24;

// A(I): number of columns that differ from c on every row of I. A(empty) = n.
// Uses the packed AND/popcount path when the matrix is binary.
std::int64_t mismatch_count(const RectMatrix& a, const ColumnPattern& c, RowSubset rows);

// Reference column-scan path that never touches the packed rows. Kept public
// so the fast path can be checked against it.
std::int64_t mismatch_count_scan(const RectMatrix& a, const ColumnPattern& c, RowSubset rows);

// nu(c) by direct column scan. Deliberately the dumbest possible loop: this
// is the oracle everything else is checked against.
std::int64_t count_direct(const RectMatrix& a, const ColumnPattern& c);

// nu(c) = sum over all I subseteq [m] of (-1)^|I| A(I). Requires
// m <= max_enumeration_rows; partial sums are checked 64-bit.
std::int64_t count_inclusion_exclusion(const RectMatrix& a, const ColumnPattern& c);

// Specialization when A(I) depends only on |I|: sum_i (-1)^i C(m,i) a[i].
// a must hold exactly m+1 values, a[i] = A(i).
ExactInt count_uniform(std::span<const ExactInt> a, int m);

// Bivariate specialization for binary matrices: a[i1][i2] = A(i1,i2) for
// 0 <= i1 <= k, 0 <= i2 <= m-k, where i1 = |I n I0| and i2 = |I \ I0|.
// Returns sum (-1)^(i1+i2) C(k,i1) C(m-k,i2) a[i1][i2].
ExactInt count_binary_bivariate(const std::vector<std::vector<ExactInt>>& a, int k, int m);

}  // namespace rectcount
