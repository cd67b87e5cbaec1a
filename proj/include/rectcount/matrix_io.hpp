#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "rectcount/matrix.hpp"

namespace rectcount {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Interns textual symbol tokens: "0" -> 0, "1" -> 1, anything else gets the
// next free id from 2 up. The same table must serve a matrix and the pattern
// counted against it so that equal spellings compare equal.
class TokenTable {
  public:
    Symbol intern(std::string_view token);

  private:
    std::unordered_map<std::string, std::int32_t> ids_;
    std::int32_t next_ = 2;
};

// Matrix text format: a header line "m n", then m rows. A row is either n
// whitespace-separated tokens or, for binary rows, one contiguous 0/1 string
// of length n.
RectMatrix parse_matrix(std::istream& in, TokenTable& symbols);

// Pattern format: one line of m tokens (or one contiguous 0/1 string of
// length m).
ColumnPattern parse_pattern(std::istream& in, TokenTable& symbols, std::size_t expected_m);

// Formats with tokens spelled as their decimal ids; output parses back via
// parse_matrix/parse_pattern with equality structure preserved.
std::string format_matrix(const RectMatrix& a);
std::string format_pattern(const ColumnPattern& c);

}  // namespace rectcount
