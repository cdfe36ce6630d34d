#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cpt/integer.hpp"

namespace cpt {

/// A monomial x_1^{a_1} ... x_g^{a_g} in degree-2 generators.
///
/// Monomials are totally ordered graded-lexicographically: first by total
/// exponent, then by the exponent of the last generator, then the one before
/// it, and so on. The innermost tower stage is therefore the heaviest
/// variable, and rewriting x_k^{n_k+1} by lower terms strictly decreases the
/// order.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  /// The unit monomial in `ngens` generators.
  explicit Monomial(std::size_t ngens = 0) : exps_(ngens, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  /// x_k^power (k zero-based).
  static Monomial generator(std::size_t ngens, std::size_t k, Exponent power = 1);

  std::size_t ngens() const { return exps_.size(); }
  Exponent operator[](std::size_t k) const { return exps_[k]; }
  std::span<const Exponent> exps() const { return exps_; }

  /// Sum of exponents.
  std::uint64_t total() const;
  /// Cohomological degree, 2 * total().
  std::uint64_t degree() const { return 2 * total(); }
  bool is_unit() const { return total() == 0; }

  /// Monomial product. Throws ArityError on mismatched generator counts.
  Monomial operator*(const Monomial& other) const;

  /// Copy with exponent k replaced.
  Monomial with_exponent(std::size_t k, Exponent e) const;

  /// Pads (or, if the dropped exponents are zero, truncates) to `ngens`.
  Monomial resized(std::size_t ngens) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Exponent> exps_;
};

/// Sparse polynomial with arbitrary-precision integer coefficients.
///
/// Invariant: no stored coefficient is zero, so structural equality is
/// mathematical equality.
class Poly {
 public:
  using Terms = std::map<Monomial, Integer>;

  explicit Poly(std::size_t ngens = 0) : ngens_(ngens) {}

  static Poly constant(std::size_t ngens, const Integer& c);
  /// c * x_k (k zero-based).
  static Poly generator(std::size_t ngens, std::size_t k, const Integer& c = 1);
  static Poly monomial(const Monomial& m, const Integer& c = 1);
  /// Builds from an explicit term list. Rejects zero coefficients, repeated
  /// monomials and wrong exponent-vector lengths with ParseError.
  static Poly from_terms(std::size_t ngens, std::vector<std::pair<Monomial, Integer>> terms);
  /// Adopts a term map, dropping any zero coefficients.
  static Poly from_map(std::size_t ngens, Terms terms);

  std::size_t ngens() const { return ngens_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(const Monomial& m) const;

  /// True when every term has cohomological degree `degree` (zero counts).
  bool is_homogeneous(std::uint64_t degree) const;
  /// One past the largest generator index with a nonzero exponent.
  std::size_t generator_span() const;
  /// Largest term in the monomial order. Precondition: !is_zero().
  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }

  /// Adds c * m, keeping the canonical form.
  void add_term(const Monomial& m, const Integer& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Integer& scalar);
  Poly operator-() const;
  Poly pow(unsigned exponent) const;

  /// Same polynomial viewed in a ring with `ngens` generators. Throws
  /// ArityError if a dropped generator actually occurs.
  Poly resized(std::size_t ngens) const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Integer& s) { return a *= s; }
  friend Poly operator*(const Integer& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::size_t ngens_;
  Terms terms_;
};

Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);

/// Evaluates `p` with generator k replaced by images[k]. All images must share
/// one ambient ring; an empty image list is only valid for constants, whose
/// target ambient is then `target_ngens`.
Poly substitute(const Poly& p, std::span<const Poly> images);
Poly substitute(const Poly& p, std::span<const Poly> images, std::size_t target_ngens);

/// Default names: x, y, z, w for up to four generators, else x1, x2, ...
std::vector<std::string> default_generator_names(std::size_t ngens);

/// Human-readable form, leading term first, e.g. "y^2 + x*y + 3*x^2".
std::string to_string(const Poly& p);
std::string to_string(const Poly& p, std::span<const std::string> names);
std::string to_string(const Monomial& m, std::span<const std::string> names);

/// Parses expressions like "3x^2 - x*y + y^2", "2xy" or "-x1*x3". Generator
/// names follow default_generator_names(ngens); "x<k>" is always accepted.
/// Throws ParseError.
Poly parse_poly(std::string_view text, std::size_t ngens);

}  // namespace cpt
