#include "rectcount/matrix_io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace rectcount {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

bool is_bit_string(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

// Row of width n: either n tokens, or one contiguous 0/1 string of length n.
std::vector<Symbol> parse_row(const std::string& line, std::size_t n, TokenTable& symbols, int lineno,
                              const char* what) {
    const auto tokens = split_tokens(line);
    std::vector<Symbol> row;
    row.reserve(n);
    if (tokens.size() == n) {
        for (const auto& t : tokens) row.push_back(symbols.intern(t));
        return row;
    }
    if (tokens.size() == 1 && tokens[0].size() == n && is_bit_string(tokens[0])) {
        for (char c : tokens[0]) row.push_back(c == '1' ? sym1 : sym0);
        return row;
    }
    throw ParseError(lineno, std::string(what) + " has " + std::to_string(tokens.size()) +
                                 " token(s), expected " + std::to_string(n));
}

}  // namespace

Symbol TokenTable::intern(std::string_view token) {
    if (token == "0") return sym0;
    if (token == "1") return sym1;
    auto [it, inserted] = ids_.try_emplace(std::string(token), next_);
    if (inserted) ++next_;
    return Symbol{it->second};
}

RectMatrix parse_matrix(std::istream& in, TokenTable& symbols) {
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line)) throw ParseError(1, "missing \"m n\" header");
    ++lineno;
    std::size_t m = 0, n = 0;
    {
        std::istringstream ss(line);
        std::string extra;
        if (!(ss >> m >> n) || (ss >> extra))
            throw ParseError(lineno, "header must be two nonnegative integers \"m n\"");
        if (m == 0) throw ParseError(lineno, "matrix must have at least one row");
    }

    RectMatrix a(m, n);
    for (std::size_t r = 0; r < m; ++r) {
        if (!std::getline(in, line)) {
            if (n == 0) continue;  // rows of width 0 need no text
            throw ParseError(lineno + 1, "unexpected end of input, expected " + std::to_string(m) +
                                             " row(s)");
        }
        ++lineno;
        const auto row = parse_row(line, n, symbols, lineno, "matrix row");
        for (std::size_t c = 0; c < n; ++c) a.set(r, c, row[c]);
    }
    return a;
}

ColumnPattern parse_pattern(std::istream& in, TokenTable& symbols, std::size_t expected_m) {
    std::string line;
    if (!std::getline(in, line) && expected_m != 0) throw ParseError(1, "missing pattern line");
    ColumnPattern p;
    p.entries = parse_row(line, expected_m, symbols, 1, "pattern");
    return p;
}

std::string format_matrix(const RectMatrix& a) {
    std::ostringstream out;
    out << a.rows() << ' ' << a.cols() << '\n';
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (c) out << ' ';
            out << a.at(r, c).token;
        }
        out << '\n';
    }
    return out.str();
}

std::string format_pattern(const ColumnPattern& c) {
    std::ostringstream out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out << ' ';
        out << c[i].token;
    }
    out << '\n';
    return out.str();
}

}  // namespace rectcount
