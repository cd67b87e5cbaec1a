#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace rectcount {

// Opaque discrete token with decidable equality. Binary matrices use tokens
// 0 and 1; the text parser interns any other spelling starting at 2.
struct Symbol {
    std::int32_t token = 0;
    friend bool operator==(Symbol, Symbol) = default;
};

inline constexpr Symbol sym0{0};
inline constexpr Symbol sym1{1};

// Target column c = [c_0, ..., c_{m-1}]. Length must match the row count of
// the matrix it is counted against; checked at the operation boundary.
struct ColumnPattern {
    std::vector<Symbol> entries;

    std::size_t size() const { return entries.size(); }
    Symbol operator[](std::size_t i) const { return entries[i]; }

    // "01" -> [0, 1]
    static ColumnPattern binary(std::string_view bits);
};

// Subset of row indices {0,..,m-1} as a bit word.
struct RowSubset {
    std::uint32_t bits = 0;

    static constexpr int max_rows = 32;

    static RowSubset empty() { return {}; }
    static RowSubset full(int m);
    static RowSubset of(std::initializer_list<int> rows);

    bool contains(int i) const { return (bits >> i) & 1u; }
    int cardinality() const { return std::popcount(bits); }
    bool subset_of(RowSubset other) const { return (bits & ~other.bits) == 0; }
    // true iff no member is >= m
    bool within(std::size_t m) const {
        return m >= max_rows || (bits >> m) == 0;
    }
    friend bool operator==(RowSubset, RowSubset) = default;
};

// m x n matrix of symbols, row-major. When every entry is 0/1 the matrix also
// carries packed bit rows: bit j of packed row i is 1 iff entry (i,j) is 1.
// The packed rows are maintained on every write and are meaningful whenever
// is_binary() holds.
class RectMatrix {
  public:
    RectMatrix() = default;
    RectMatrix(std::size_t rows, std::size_t cols, Symbol fill = sym0);

    // rows spelled as 0/1 strings, e.g. {"010", "110"}
    static RectMatrix binary_from_strings(std::initializer_list<std::string_view> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Symbol at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Symbol s);

    bool is_binary() const { return nonbinary_ == 0; }
    std::size_t words_per_row() const { return words_; }
    std::span<const std::uint64_t> packed_row(std::size_t r) const {
        return {packed_.data() + r * words_, words_};
    }

  private:
    std::size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<Symbol> entries_;
    std::vector<std::uint64_t> packed_;
    std::int64_t nonbinary_ = 0;  // entries with token outside {0,1}
};

// Submatrix of the rows in `rows` (ascending index order).
RectMatrix select_rows(const RectMatrix& a, RowSubset rows);

// Submatrix of the listed columns, in the order given.
RectMatrix select_columns(const RectMatrix& a, std::span<const std::size_t> cols);

}  // namespace rectcount
