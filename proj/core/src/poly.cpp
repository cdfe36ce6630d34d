#include "cpt/poly.hpp"

#include <numeric>
#include <sstream>

#include "cpt/error.hpp"

namespace cpt {

namespace {

void require_same_arity(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw ArityError(std::string(what) + ": generator count mismatch (" + std::to_string(a) +
                     " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

Monomial Monomial::generator(std::size_t ngens, std::size_t k, Exponent power) {
  if (k >= ngens) throw ArityError("generator index out of range");
  Monomial m(ngens);
  m.exps_[k] = power;
  return m;
}

std::uint64_t Monomial::total() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_arity(ngens(), other.ngens(), "monomial product");
  Monomial out = *this;
  for (std::size_t k = 0; k < exps_.size(); ++k) out.exps_[k] += other.exps_[k];
  return out;
}

Monomial Monomial::with_exponent(std::size_t k, Exponent e) const {
  Monomial out = *this;
  out.exps_.at(k) = e;
  return out;
}

Monomial Monomial::resized(std::size_t ngens) const {
  for (std::size_t k = ngens; k < exps_.size(); ++k) {
    if (exps_[k] != 0) throw ArityError("cannot drop a generator that occurs in the monomial");
  }
  std::vector<Exponent> exps(exps_.begin(), exps_.begin() + std::min(ngens, exps_.size()));
  exps.resize(ngens, 0);
  return Monomial(std::move(exps));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.total() <=> b.total(); c != 0) return c;
  if (auto c = a.ngens() <=> b.ngens(); c != 0) return c;
  for (std::size_t k = a.ngens(); k-- > 0;) {
    if (auto c = a[k] <=> b[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// -------------------------------------------------------------------- Poly

Poly Poly::constant(std::size_t ngens, const Integer& c) {
  Poly p(ngens);
  p.add_term(Monomial(ngens), c);
  return p;
}

Poly Poly::generator(std::size_t ngens, std::size_t k, const Integer& c) {
  Poly p(ngens);
  p.add_term(Monomial::generator(ngens, k), c);
  return p;
}

Poly Poly::monomial(const Monomial& m, const Integer& c) {
  Poly p(m.ngens());
  p.add_term(m, c);
  return p;
}

Poly Poly::from_terms(std::size_t ngens, std::vector<std::pair<Monomial, Integer>> terms) {
  Poly p(ngens);
  for (auto& [m, c] : terms) {
    if (m.ngens() != ngens) {
      throw ParseError("term has " + std::to_string(m.ngens()) + " exponents, expected " +
                       std::to_string(ngens));
    }
    if (c == 0) throw ParseError("zero coefficient in polynomial term list");
    if (!p.terms_.emplace(std::move(m), std::move(c)).second) {
      throw ParseError("repeated monomial in polynomial term list");
    }
  }
  return p;
}

Poly Poly::from_map(std::size_t ngens, Terms terms) {
  Poly p(ngens);
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [m, c] : terms) require_same_arity(ngens, m.ngens(), "from_map");
  p.terms_ = std::move(terms);
  return p;
}

Integer Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool Poly::is_homogeneous(std::uint64_t degree) const {
  for (const auto& [m, c] : terms_) {
    if (m.degree() != degree) return false;
  }
  return true;
}

std::size_t Poly::generator_span() const {
  std::size_t span = 0;
  for (const auto& [m, c] : terms_) {
    for (std::size_t k = m.ngens(); k-- > span;) {
      if (m[k] != 0) {
        span = k + 1;
        break;
      }
    }
  }
  return span;
}

void Poly::add_term(const Monomial& m, const Integer& c) {
  require_same_arity(ngens_, m.ngens(), "add_term");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_arity(ngens_, other.ngens_, "add");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_arity(ngens_, other.ngens_, "subtract");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_arity(a.ngens_, b.ngens_, "mul");
  Poly out(a.ngens_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(ngens_, 1);
  Poly base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Poly Poly::resized(std::size_t ngens) const {
  Poly out(ngens);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m.resized(ngens), c);
  return out;
}

Poly add(const Poly& a, const Poly& b) { return a + b; }
Poly mul(const Poly& a, const Poly& b) { return a * b; }

Poly substitute(const Poly& p, std::span<const Poly> images) {
  if (images.empty()) {
    if (p.ngens() != 0) throw ArityError("substitute: expected one image per generator");
    return p;
  }
  return substitute(p, images, images.front().ngens());
}

Poly substitute(const Poly& p, std::span<const Poly> images, std::size_t target_ngens) {
  if (images.size() != p.ngens()) {
    throw ArityError("substitute: " + std::to_string(images.size()) + " images for " +
                     std::to_string(p.ngens()) + " generators");
  }
  for (const auto& img : images) require_same_arity(img.ngens(), target_ngens, "substitute");

  // powers[k][e] = images[k]^e, filled lazily.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t k, Monomial::Exponent e) -> const Poly& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(Poly::constant(target_ngens, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[k]);
    return cache[e];
  };

  Poly out(target_ngens);
  for (const auto& [m, c] : p.terms()) {
    Poly term = Poly::constant(target_ngens, c);
    for (std::size_t k = 0; k < m.ngens() && !term.is_zero(); ++k) {
      if (m[k] != 0) term = term * power(k, m[k]);
    }
    out += term;
  }
  return out;
}

std::vector<std::string> default_generator_names(std::size_t ngens) {
  static const char* short_names[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  names.reserve(ngens);
  for (std::size_t k = 0; k < ngens; ++k) {
    names.push_back(ngens <= 4 ? std::string(short_names[k]) : "x" + std::to_string(k + 1));
  }
  return names;
}

std::string to_string(const Monomial& m, std::span<const std::string> names) {
  std::string out;
  for (std::size_t k = 0; k < m.ngens(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[k];
    if (m[k] > 1) out += "^" + std::to_string(m[k]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Poly& p) {
  auto names = default_generator_names(p.ngens());
  return to_string(p, names);
}

std::string to_string(const Poly& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_unit()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << to_string(m, names);
    }
  }
  return os.str();
}

}  // namespace cpt
