#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cpt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live in rings with different generator counts.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A tower specification or bundle descriptor violates its invariants.
class SpecError : public Error {
 public:
  explicit SpecError(const std::string& what, std::size_t stage = 0) : Error(what), stage_(stage) {}

  /// 1-based stage the error refers to, or 0.
  std::size_t stage() const { return stage_; }

 private:
  std::size_t stage_;
};

/// Matrix or presentation shapes do not line up.
class ShapeError : public Error {
 public:
  using Error::Error;
};

}  // namespace cpt
