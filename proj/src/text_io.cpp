#include "dcsort/text_io.hpp"

#include <cctype>
#include <charconv>

namespace dcsort {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

}  // namespace

std::vector<std::int64_t> parse_int64_list(std::string_view text) {
  std::vector<std::int64_t> values;
  std::size_t line = 1, column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
      continue;
    }
    const std::size_t token_line = line, token_column = column;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) {
      ++i;
      ++column;
    }
    const std::string_view token = text.substr(start, i - start);
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    std::int64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
      throw ParseFailure(token_line, token_column, std::string(token));
    values.push_back(value);
  }
  return values;
}

std::string format_int64_lines(std::span<const std::int64_t> values) {
  std::string out;
  for (std::int64_t v : values) {
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

}  // namespace dcsort
