#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "rectcount/binomial.hpp"
#include "rectcount/counting.hpp"
#include "rectcount/subset_lattice.hpp"

using namespace rectcount;

namespace {

// pattern over the rows of a row-submatrix of the incidence matrix: row order
// is ascending ground index, c_i = 1 iff that ground element is in ones
ColumnPattern pattern_on(std::uint32_t i0, std::uint32_t ones) {
    ColumnPattern c;
    for (std::uint32_t b = i0; b != 0; b &= b - 1) {
        const int elem = std::countr_zero(b);
        c.entries.push_back((ones >> elem) & 1u ? sym1 : sym0);
    }
    return c;
}

}  // namespace

TEST_CASE("build_incidence labels columns by bit expansion") {
    const auto one = build_incidence(1);
    CHECK(one.matrix.rows() == 1);
    CHECK(one.matrix.cols() == 2);
    CHECK(one.matrix.at(0, 0) == sym0);
    CHECK(one.matrix.at(0, 1) == sym1);

    const auto two = build_incidence(2);
    CHECK(two.matrix.cols() == 4);
    const std::vector<std::pair<int, int>> expected = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    for (std::size_t s = 0; s < 4; ++s) {
        CHECK(two.matrix.at(0, s).token == expected[s].first);
        CHECK(two.matrix.at(1, s).token == expected[s].second);
    }

    const auto zero = build_incidence(0);
    CHECK(zero.matrix.rows() == 0);
    CHECK(zero.matrix.cols() == 1);

    CHECK_THROWS_AS(build_incidence(-1), std::invalid_argument);
    CHECK_THROWS_AS(build_incidence(21), std::invalid_argument);
}

TEST_CASE("every binary column appears exactly once") {
    const auto inc = build_incidence(4);
    std::set<std::uint32_t> seen;
    for (std::size_t s = 0; s < inc.matrix.cols(); ++s) {
        std::uint32_t col = 0;
        for (std::size_t r = 0; r < inc.matrix.rows(); ++r)
            if (inc.matrix.at(r, s) == sym1) col |= 1u << r;
        seen.insert(col);
    }
    CHECK(seen.size() == 16);
}

TEST_CASE("count_subsets_brute on the stated instances") {
    CHECK(count_subsets_brute({4, 0b0001u, 0b0010u, 0, 4}) == 4);
    CHECK(count_subsets_brute({3, 0, 0, 0, 1}) == 4);
    CHECK(count_subsets_brute({2, 0b11u, 0, 0, 1}) == 0);
    CHECK(count_subsets_brute({0, 0, 0, 0, 0}) == 1);
}

TEST_CASE("count_subsets_formula on the stated instances") {
    CHECK(count_subsets_formula({4, 0b0001u, 0b0010u, 0, 4}) == 4);
    CHECK(count_subsets_formula({5, 0, 0, 0, 2}) == 16);
    CHECK(count_subsets_formula({3, 0b111u, 0, 0, 2}) == 0);
}

TEST_CASE("constraint validation") {
    CHECK_THROWS_AS(count_subsets_brute({4, 0b0011u, 0b0010u, 0, 4}), std::invalid_argument);
    CHECK_THROWS_AS(count_subsets_brute({2, 0b0100u, 0, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(count_subsets_brute({4, 0, 0, 3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(count_subsets_brute({4, 0, 0, 0, 5}), std::invalid_argument);
    CHECK_THROWS_AS(count_subsets_brute({25, 0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(count_subsets_formula({-1, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("formula equals brute force for every split up to 4 pinned elements, n <= 12") {
    for (int n = 0; n <= 12; ++n) {
        // enumerate disjoint (contain, avoid) pairs with |contain|+|avoid| <= 4
        std::vector<std::pair<std::uint32_t, std::uint32_t>> splits;
        const std::uint32_t universe_end = 1u << n;
        for (std::uint32_t contain = 0; contain < universe_end; ++contain) {
            if (std::popcount(contain) > 4) continue;
            const std::uint32_t rest = (universe_end - 1u) & ~contain;
            // submasks of the complement
            for (std::uint32_t avoid = rest;; avoid = (avoid - 1) & rest) {
                if (std::popcount(contain) + std::popcount(avoid) <= 4)
                    splits.emplace_back(contain, avoid);
                if (avoid == 0) break;
            }
        }
        for (const auto& [contain, avoid] : splits) {
            for (int lo = 0; lo <= n; ++lo) {
                for (int hi = lo; hi <= n; ++hi) {
                    const SubsetConstraint c{n, contain, avoid, lo, hi};
                    CHECK(count_subsets_formula(c) == count_subsets_brute(c));
                }
            }
        }
    }
}

TEST_CASE("theorem_input_table shapes and special cases") {
    // l = k, m1 = m2 = m: single column, a(i1,0) = C(n-i1, m)
    const auto square = theorem_input_table(8, 3, 3, 2, 2);
    REQUIRE(square.size() == 4);
    for (int i1 = 0; i1 <= 3; ++i1) {
        REQUIRE(square[i1].size() == 1);
        CHECK(square[i1][0] == binom(8 - i1, 2));
    }

    // l = k = 0: single entry, the unconstrained count over the size window
    const auto point = theorem_input_table(6, 0, 0, 1, 3);
    REQUIRE(point.size() == 1);
    REQUIRE(point[0].size() == 1);
    CHECK(point[0][0] == binom(6, 1) + binom(6, 2) + binom(6, 3));

    // worked incidence instance: n=3, k=l=1, full size window
    const auto inc = theorem_input_table(3, 1, 1, 0, 3);
    REQUIRE(inc.size() == 2);
    CHECK(inc[0][0] == 8);
    CHECK(inc[1][0] == 4);
    CHECK(count_binary_bivariate(inc, 1, 1) == 4);

    CHECK_THROWS_AS(theorem_input_table(3, 1, 2, 0, 3), std::invalid_argument);  // l > k
    CHECK_THROWS_AS(theorem_input_table(3, 4, 1, 0, 3), std::invalid_argument);  // k > n
    CHECK_THROWS_AS(theorem_input_table(3, 1, 1, 2, 1), std::invalid_argument);  // m1 > m2
}

TEST_CASE("labels_with_size") {
    const auto labels = labels_with_size(4, 1, 2);
    CHECK(labels.size() == 10);  // C(4,1) + C(4,2)
    for (const std::size_t s : labels) {
        const int size = std::popcount(s);
        CHECK(size >= 1);
        CHECK(size <= 2);
    }
    CHECK(std::is_sorted(labels.begin(), labels.end()));
}

TEST_CASE("power counting on the incidence matrix: 2^(n-k) columns match, B(I) = 2^(n-|I|)") {
    for (int n = 0; n <= 7; ++n) {
        const auto inc = build_incidence(n);
        const std::uint32_t i0_end = 1u << n;
        for (std::uint32_t i0 = 0; i0 < i0_end; ++i0) {
            const int k = std::popcount(i0);
            const auto sub = select_rows(inc.matrix, RowSubset{i0});
            // every pattern supported on I_0
            for (std::uint32_t ones = i0;; ones = (ones - 1) & i0) {
                const auto c = pattern_on(i0, ones);
                CHECK(count_direct(sub, c) == (std::int64_t{1} << (n - k)));
                // B(I) for every I subseteq I_0, re-indexed within the submatrix
                for (std::uint32_t sub_i = (1u << k) - 1u;; sub_i = (sub_i - 1) & ((1u << k) - 1u)) {
                    const int size = std::popcount(sub_i);
                    CHECK(mismatch_count(sub, c, RowSubset{sub_i}) == (std::int64_t{1} << (n - size)));
                    if (sub_i == 0) break;
                }
                if (ones == 0) break;
            }
        }
    }
}

TEST_CASE("counts are invariant under column relabeling") {
    const int n = 6;
    const auto inc = build_incidence(n);
    std::vector<std::size_t> order(inc.matrix.cols());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(2024);
    std::shuffle(order.begin(), order.end(), rng);
    const auto shuffled = select_columns(inc.matrix, order);

    std::mt19937_64 pick(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto i0 = static_cast<std::uint32_t>(pick() % (1u << n));
        const std::uint32_t ones = static_cast<std::uint32_t>(pick()) & i0;
        const auto c = pattern_on(i0, ones);
        const auto sub = select_rows(inc.matrix, RowSubset{i0});
        const auto sub_shuffled = select_rows(shuffled, RowSubset{i0});
        CHECK(count_direct(sub, c) == count_direct(sub_shuffled, c));
        const auto i = static_cast<std::uint32_t>(pick()) & ((1u << std::popcount(i0)) - 1u);
        CHECK(mismatch_count(sub, c, RowSubset{i}) == mismatch_count(sub_shuffled, c, RowSubset{i}));
    }
}
