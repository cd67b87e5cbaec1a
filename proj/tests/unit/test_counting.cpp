#include <doctest.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "rectcount/counting.hpp"
#include "rectcount/matrix.hpp"

using namespace rectcount;

namespace {

RectMatrix binary_matrix_from_code(int m, int n, std::uint64_t code) {
    RectMatrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
            if ((code >> (r * n + c)) & 1u) a.set(r, c, sym1);
    return a;
}

ColumnPattern binary_pattern_from_code(int m, std::uint32_t code) {
    ColumnPattern p;
    for (int r = 0; r < m; ++r) p.entries.push_back((code >> r) & 1u ? sym1 : sym0);
    return p;
}

RectMatrix random_matrix(std::mt19937_64& rng, int m, int n, int alphabet) {
    RectMatrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
            a.set(r, c, Symbol{static_cast<std::int32_t>(rng() % alphabet)});
    return a;
}

ColumnPattern random_pattern(std::mt19937_64& rng, int m, int alphabet) {
    ColumnPattern p;
    for (int r = 0; r < m; ++r) p.entries.push_back(Symbol{static_cast<std::int32_t>(rng() % alphabet)});
    return p;
}

}  // namespace

TEST_CASE("mismatch_count on the worked 2x3 example") {
    const auto a = RectMatrix::binary_from_strings({"010", "110"});
    const auto c = ColumnPattern::binary("01");
    CHECK(mismatch_count(a, c, RowSubset::empty()) == 3);
    CHECK(mismatch_count(a, c, RowSubset::of({0})) == 1);
    CHECK(mismatch_count(a, c, RowSubset::of({1})) == 1);
    CHECK(mismatch_count(a, c, RowSubset::of({0, 1})) == 0);
}

TEST_CASE("count_direct and count_inclusion_exclusion on small instances") {
    const auto a = RectMatrix::binary_from_strings({"010", "110"});
    const auto c = ColumnPattern::binary("01");
    CHECK(count_direct(a, c) == 1);
    CHECK(count_inclusion_exclusion(a, c) == 1);

    const auto single = RectMatrix::binary_from_strings({"1"});
    const auto zero = ColumnPattern::binary("0");
    CHECK(count_direct(single, zero) == 0);
    CHECK(mismatch_count(single, zero, RowSubset::of({0})) == 1);
    CHECK(count_inclusion_exclusion(single, zero) == 0);

    // all-match: every column equal to c
    const auto all = RectMatrix::binary_from_strings({"11111", "00000", "11111"});
    const auto c3 = ColumnPattern::binary("101");
    CHECK(count_direct(all, c3) == 5);
    CHECK(count_inclusion_exclusion(all, c3) == 5);
}

TEST_CASE("edge shapes: n = 0 and m = 0") {
    const RectMatrix empty_cols(2, 0);
    const auto c = ColumnPattern::binary("00");
    CHECK(count_direct(empty_cols, c) == 0);
    CHECK(count_inclusion_exclusion(empty_cols, c) == 0);
    CHECK(mismatch_count(empty_cols, c, RowSubset::empty()) == 0);
    CHECK(mismatch_count(empty_cols, c, RowSubset::of({0})) == 0);

    // rowless matrix: every column vacuously matches the empty pattern
    const RectMatrix no_rows(0, 4);
    const ColumnPattern empty_pattern;
    CHECK(count_direct(no_rows, empty_pattern) == 4);
    CHECK(count_inclusion_exclusion(no_rows, empty_pattern) == 4);
}

TEST_CASE("dimension and guard errors") {
    const auto a = RectMatrix::binary_from_strings({"010", "110"});
    const auto long_pattern = ColumnPattern::binary("011");
    CHECK_THROWS_AS(count_direct(a, long_pattern), std::invalid_argument);
    CHECK_THROWS_AS(count_inclusion_exclusion(a, long_pattern), std::invalid_argument);
    CHECK_THROWS_AS(mismatch_count(a, long_pattern, RowSubset::empty()), std::invalid_argument);

    const auto c = ColumnPattern::binary("01");
    CHECK_THROWS_AS(mismatch_count(a, c, RowSubset::of({5})), std::invalid_argument);

    RectMatrix tall(25, 1);
    ColumnPattern c25;
    for (int i = 0; i < 25; ++i) c25.entries.push_back(sym0);
    CHECK_THROWS_AS(count_inclusion_exclusion(tall, c25), std::invalid_argument);
}

TEST_CASE("inclusion-exclusion equals the direct scan, exhaustively for m,n <= 3") {
    for (int m = 1; m <= 3; ++m) {
        for (int n = 0; n <= 3; ++n) {
            const std::uint64_t matrices = std::uint64_t{1} << (m * n);
            for (std::uint64_t code = 0; code < matrices; ++code) {
                const auto a = binary_matrix_from_code(m, n, code);
                for (std::uint32_t pat = 0; pat < (1u << m); ++pat) {
                    const auto c = binary_pattern_from_code(m, pat);
                    CHECK(count_inclusion_exclusion(a, c) == count_direct(a, c));
                }
            }
        }
    }
}

TEST_CASE("inclusion-exclusion equals the direct scan on random m,n <= 4 binaries") {
    // the m,n <= 3 block is exhausted above; sample the m = 4 or n = 4 fringe
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        int m = 4, n = 4;
        if (trial % 2)
            n = static_cast<int>(rng() % 5);
        else
            m = 1 + static_cast<int>(rng() % 4);
        const auto a = random_matrix(rng, m, n, 2);
        const auto c = random_pattern(rng, m, 2);
        CHECK(count_inclusion_exclusion(a, c) == count_direct(a, c));
    }
}

TEST_CASE("inclusion-exclusion equals the direct scan on random alphabets 2..4") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 12);
        const int n = static_cast<int>(rng() % 65);
        const int alphabet = 2 + static_cast<int>(rng() % 3);
        const auto a = random_matrix(rng, m, n, alphabet);
        const auto c = random_pattern(rng, m, alphabet);
        CHECK(count_inclusion_exclusion(a, c) == count_direct(a, c));
    }
}

TEST_CASE("packed and scan paths agree; mismatch counts are antitone") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 8);
        const int n = static_cast<int>(rng() % 40);
        const int alphabet = trial % 2 ? 2 : 4;  // both binary and non-binary matrices
        const auto a = random_matrix(rng, m, n, alphabet);
        const auto c = random_pattern(rng, m, alphabet);
        for (std::uint32_t j = 0; j < (1u << m); ++j) {
            const RowSubset big{j};
            CHECK(mismatch_count(a, c, big) == mismatch_count_scan(a, c, big));
            // all subsets of j via the submask walk
            for (std::uint32_t i = j;; i = (i - 1) & j) {
                CHECK(mismatch_count(a, c, big) <= mismatch_count(a, c, RowSubset{i}));
                if (i == 0) break;
            }
        }
        CHECK(mismatch_count(a, c, RowSubset::empty()) == n);
    }
}

TEST_CASE("binary pattern tokens outside the matrix alphabet still count correctly") {
    // binary matrix, ternary pattern symbol: every entry of that row mismatches
    const auto a = RectMatrix::binary_from_strings({"0101", "0011"});
    ColumnPattern c;
    c.entries = {Symbol{2}, Symbol{1}};
    CHECK(count_direct(a, c) == 0);
    CHECK(mismatch_count(a, c, RowSubset::of({0})) == 4);
    CHECK(mismatch_count(a, c, RowSubset::of({0})) == mismatch_count_scan(a, c, RowSubset::of({0})));
    CHECK(mismatch_count(a, c, RowSubset::of({0, 1})) == 2);
    CHECK(count_inclusion_exclusion(a, c) == 0);
}

TEST_CASE("packed rows track writes, including binary/non-binary transitions") {
    RectMatrix a(2, 70);  // wider than one word
    CHECK(a.is_binary());
    a.set(0, 3, sym1);
    a.set(1, 69, sym1);
    CHECK((a.packed_row(0)[0] >> 3 & 1u) == 1u);
    CHECK((a.packed_row(1)[1] >> 5 & 1u) == 1u);

    a.set(0, 3, Symbol{7});
    CHECK_FALSE(a.is_binary());
    a.set(0, 3, sym0);
    CHECK(a.is_binary());
    CHECK((a.packed_row(0)[0] >> 3 & 1u) == 0u);

    // a matrix filled with ones is packed as ones up to the column count
    const RectMatrix ones(1, 65, sym1);
    CHECK(ones.packed_row(0)[0] == ~0ull);
    CHECK(ones.packed_row(0)[1] == 1ull);
}

TEST_CASE("total mass: pattern counts over all 2^m patterns sum to n") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 6);
        const int n = static_cast<int>(rng() % 11);
        const auto a = random_matrix(rng, m, n, 2);
        std::int64_t direct_total = 0;
        std::int64_t ie_total = 0;
        for (std::uint32_t pat = 0; pat < (1u << m); ++pat) {
            const auto c = binary_pattern_from_code(m, pat);
            direct_total += count_direct(a, c);
            ie_total += count_inclusion_exclusion(a, c);
        }
        CHECK(direct_total == n);
        CHECK(ie_total == n);
    }
}

TEST_CASE("count_uniform") {
    using V = std::vector<ExactInt>;
    CHECK(count_uniform(V{2, 1}, 1) == 1);
    CHECK(count_uniform(V{7, 0, 0}, 2) == 7);
    CHECK(count_uniform(V{8, 4, 2, 1}, 3) == 1);
    CHECK_THROWS_AS(count_uniform(V{1, 2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(count_uniform(V{1}, -1), std::invalid_argument);
}

TEST_CASE("count_binary_bivariate") {
    using Table = std::vector<std::vector<ExactInt>>;

    // k = m: inner sum has a single term, reduces to count_uniform
    const Table square = {{8}, {4}, {2}, {1}};
    std::vector<ExactInt> flat;
    for (const auto& row : square) flat.push_back(row[0]);
    CHECK(count_binary_bivariate(square, 3, 3) == count_uniform(flat, 3));

    // k = 0: single row, reduces to count_uniform over i2
    const Table row_only = {{8, 4, 2, 1}};
    CHECK(count_binary_bivariate(row_only, 0, 3) == count_uniform(row_only[0], 3));

    // incidence-matrix instance: a(i1,i2) = 2^(3-i1-i2), one row subset of size 1
    const Table inc = {{8}, {4}};
    CHECK(count_binary_bivariate(inc, 1, 1) == 4);

    CHECK_THROWS_AS(count_binary_bivariate(Table{{1}, {1, 2}}, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(count_binary_bivariate(Table{{1}}, 1, 0), std::invalid_argument);
}
