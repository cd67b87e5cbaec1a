#include "rectcount/counting.hpp"

#include <bit>
#include <stdexcept>

#include "rectcount/binomial.hpp"

namespace rectcount {

namespace {

void check_dims(const RectMatrix& a, const ColumnPattern& c) {
    if (c.size() != a.rows())
        throw std::invalid_argument("pattern length " + std::to_string(c.size()) +
                                    " does not match matrix row count " + std::to_string(a.rows()));
}

void check_subset(const RectMatrix& a, RowSubset rows) {
    if (!rows.within(a.rows()))
        throw std::invalid_argument("row subset has an index >= matrix row count");
}

std::int64_t scan_mismatches(const RectMatrix& a, const ColumnPattern& c, RowSubset rows) {
    std::int64_t count = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        bool all_differ = true;
        for (std::uint32_t b = rows.bits; b != 0; b &= b - 1) {
            const auto i = static_cast<std::size_t>(std::countr_zero(b));
            if (a.at(i, j) == c[i]) {
                all_differ = false;
                break;
            }
        }
        count += all_differ;
    }
    return count;
}

// AND of per-row mismatch masks, then popcount. For row i the mismatch mask
// is the packed row if c_i = 0, its complement if c_i = 1, and all-ones if
// c_i is not a binary token (every 0/1 entry differs from it).
std::int64_t packed_mismatches(const RectMatrix& a, const ColumnPattern& c, RowSubset rows) {
    const std::size_t words = a.words_per_row();
    if (words == 0) return 0;  // n == 0
    const std::uint64_t tail = (a.cols() % 64) ? ((1ull << (a.cols() % 64)) - 1) : ~0ull;
    std::vector<std::uint64_t> acc(words, ~0ull);
    acc[words - 1] = tail;
    for (std::uint32_t b = rows.bits; b != 0; b &= b - 1) {
        const auto i = static_cast<std::size_t>(std::countr_zero(b));
        const auto row = a.packed_row(i);
        const std::int32_t t = c[i].token;
        if (t == 1) {
            for (std::size_t w = 0; w < words; ++w) acc[w] &= ~row[w];
        } else if (t == 0) {
            for (std::size_t w = 0; w < words; ++w) acc[w] &= row[w];
        }
        // non-binary pattern token: mask is all-ones, nothing to do
    }
    std::int64_t count = 0;
    for (std::size_t w = 0; w < words; ++w) count += std::popcount(acc[w]);
    return count;
}

}  // namespace

std::int64_t mismatch_count(const RectMatrix& a, const ColumnPattern& c, RowSubset rows) {
    check_dims(a, c);
    check_subset(a, rows);
    if (rows.bits == 0) return static_cast<std::int64_t>(a.cols());
    if (a.is_binary()) return packed_mismatches(a, c, rows);
    return scan_mismatches(a, c, rows);
}

std::int64_t mismatch_count_scan(const RectMatrix& a, const ColumnPattern& c, RowSubset rows) {
    check_dims(a, c);
    check_subset(a, rows);
    if (rows.bits == 0) return static_cast<std::int64_t>(a.cols());
    return scan_mismatches(a, c, rows);
}

std::int64_t count_direct(const RectMatrix& a, const ColumnPattern& c) {
    check_dims(a, c);
    std::int64_t count = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        bool equal = true;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (!(a.at(i, j) == c[i])) {
                equal = false;
                break;
            }
        }
        count += equal;
    }
    return count;
}

std::int64_t count_inclusion_exclusion(const RectMatrix& a, const ColumnPattern& c) {
    check_dims(a, c);
    const std::size_t m = a.rows();
    if (m > max_enumeration_rows)
        throw std::invalid_argument("row count " + std::to_string(m) + " exceeds the 2^m enumeration guard (" +
                                    std::to_string(max_enumeration_rows) + ")");
    const std::uint32_t last = (m == 0) ? 0 : (1u << m) - 1u;
    std::int64_t acc = 0;
    std::uint32_t s = 0;
    while (true) {
        std::int64_t term = mismatch_count(a, c, RowSubset{s});
        if (std::popcount(s) & 1) term = -term;
        if (__builtin_add_overflow(acc, term, &acc))
            throw std::overflow_error("count_inclusion_exclusion: 64-bit partial sum overflow");
        if (s == last) break;
        ++s;
    }
    return acc;
}

ExactInt count_uniform(std::span<const ExactInt> a, int m) {
    if (m < 0) throw std::invalid_argument("count_uniform: negative row count");
    if (a.size() != static_cast<std::size_t>(m) + 1)
        throw std::invalid_argument("count_uniform: need a value for every cardinality 0..m");
    ExactInt acc = 0;
    for (int i = 0; i <= m; ++i) {
        ExactInt term = binom(m, i) * a[static_cast<std::size_t>(i)];
        if (i & 1)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

ExactInt count_binary_bivariate(const std::vector<std::vector<ExactInt>>& a, int k, int m) {
    if (k < 0 || m < k) throw std::invalid_argument("count_binary_bivariate: need 0 <= k <= m");
    if (a.size() != static_cast<std::size_t>(k) + 1)
        throw std::invalid_argument("count_binary_bivariate: need a row for every i1 in 0..k");
    ExactInt acc = 0;
    for (int i1 = 0; i1 <= k; ++i1) {
        const auto& row = a[static_cast<std::size_t>(i1)];
        if (row.size() != static_cast<std::size_t>(m - k) + 1)
            throw std::invalid_argument("count_binary_bivariate: need an entry for every i2 in 0..m-k");
        const ExactInt outer = binom(k, i1);
        for (int i2 = 0; i2 <= m - k; ++i2) {
            ExactInt term = outer * binom(m - k, i2) * row[static_cast<std::size_t>(i2)];
            if ((i1 + i2) & 1)
                acc -= term;
            else
                acc += term;
        }
    }
    return acc;
}

}  // namespace rectcount
