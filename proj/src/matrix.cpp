#include "rectcount/matrix.hpp"

#include <stdexcept>

namespace rectcount {

namespace {

bool is_binary_token(Symbol s) { return s.token == 0 || s.token == 1; }

}  // namespace

ColumnPattern ColumnPattern::binary(std::string_view bits) {
    ColumnPattern p;
    p.entries.reserve(bits.size());
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("ColumnPattern::binary: expected only 0/1");
        p.entries.push_back(ch == '1' ? sym1 : sym0);
    }
    return p;
}

RowSubset RowSubset::full(int m) {
    if (m < 0 || m > max_rows) throw std::invalid_argument("RowSubset::full: row count out of range");
    if (m == max_rows) return {~0u};
    return {(1u << m) - 1u};
}

RowSubset RowSubset::of(std::initializer_list<int> rows) {
    RowSubset s;
    for (int i : rows) {
        if (i < 0 || i >= max_rows) throw std::invalid_argument("RowSubset::of: index out of range");
        s.bits |= 1u << i;
    }
    return s;
}

RectMatrix::RectMatrix(std::size_t rows, std::size_t cols, Symbol fill)
    : rows_(rows),
      cols_(cols),
      words_((cols + 63) / 64),
      entries_(rows * cols, fill),
      packed_(rows * words_, 0) {
    if (!is_binary_token(fill)) {
        nonbinary_ = static_cast<std::int64_t>(rows_ * cols_);
    } else if (fill == sym1 && cols_ > 0) {
        const std::uint64_t tail = (cols_ % 64) ? ((1ull << (cols_ % 64)) - 1) : ~0ull;
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t w = 0; w < words_; ++w)
                packed_[r * words_ + w] = (w + 1 == words_) ? tail : ~0ull;
        }
    }
}

RectMatrix RectMatrix::binary_from_strings(std::initializer_list<std::string_view> rows) {
    const std::size_t m = rows.size();
    const std::size_t n = m ? rows.begin()->size() : 0;
    RectMatrix a(m, n);
    std::size_t r = 0;
    for (std::string_view row : rows) {
        if (row.size() != n) throw std::invalid_argument("binary_from_strings: ragged rows");
        for (std::size_t c = 0; c < n; ++c) {
            if (row[c] != '0' && row[c] != '1')
                throw std::invalid_argument("binary_from_strings: expected only 0/1");
            if (row[c] == '1') a.set(r, c, sym1);
        }
        ++r;
    }
    return a;
}

void RectMatrix::set(std::size_t r, std::size_t c, Symbol s) {
    Symbol& e = entries_[r * cols_ + c];
    nonbinary_ += static_cast<int>(!is_binary_token(s)) - static_cast<int>(!is_binary_token(e));
    e = s;
    std::uint64_t& w = packed_[r * words_ + c / 64];
    const std::uint64_t bit = 1ull << (c % 64);
    if (s == sym1)
        w |= bit;
    else
        w &= ~bit;
}

RectMatrix select_rows(const RectMatrix& a, RowSubset rows) {
    if (!rows.within(a.rows())) throw std::invalid_argument("select_rows: subset has a row index >= row count");
    RectMatrix out(static_cast<std::size_t>(rows.cardinality()), a.cols());
    std::size_t out_r = 0;
    for (std::uint32_t b = rows.bits; b != 0; b &= b - 1) {
        const auto r = static_cast<std::size_t>(std::countr_zero(b));
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(out_r, c, a.at(r, c));
        ++out_r;
    }
    return out;
}

RectMatrix select_columns(const RectMatrix& a, std::span<const std::size_t> cols) {
    for (std::size_t c : cols)
        if (c >= a.cols()) throw std::invalid_argument("select_columns: column index out of range");
    RectMatrix out(a.rows(), cols.size());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) out.set(r, j, a.at(r, cols[j]));
    return out;
}

}  // namespace rectcount
