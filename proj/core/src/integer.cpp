#include "cpt/integer.hpp"

#include <limits>

#include "cpt/error.hpp"

namespace cpt {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw ParseError("expected an integer, got '" + std::string(text) + "'");
  }
  Integer value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

std::string to_string(const Integer& value) { return value.str(); }

std::optional<std::int64_t> to_int64(const Integer& value) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  if (value < lo || value > hi) return std::nullopt;
  return value.convert_to<std::int64_t>();
}

}  // namespace cpt
