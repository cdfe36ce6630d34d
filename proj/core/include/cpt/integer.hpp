#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cpt {

/// Arbitrary-precision signed integer used for every coefficient.
using Integer = boost::multiprecision::cpp_int;

/// Parses an optionally signed decimal integer. Throws ParseError.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);

/// The value as int64 if it fits.
std::optional<std::int64_t> to_int64(const Integer& value);

}  // namespace cpt
