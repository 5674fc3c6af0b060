// Text input/output: whitespace-separated signed 64-bit integers in,
// one integer per line out. Parse failures carry line and column.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dcsort {

class ParseFailure : public std::runtime_error {
public:
  ParseFailure(std::size_t line, std::size_t column, std::string token)
      : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": '" + token +
                           "' is not a signed 64-bit integer"),
        line_(line),
        column_(column),
        token_(std::move(token)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& token() const { return token_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

/// Parse whitespace-separated int64 values; throws ParseFailure with a
/// 1-based line/column on the first bad token.
std::vector<std::int64_t> parse_int64_list(std::string_view text);

/// One integer per line, newline-terminated.
std::string format_int64_lines(std::span<const std::int64_t> values);

}  // namespace dcsort
