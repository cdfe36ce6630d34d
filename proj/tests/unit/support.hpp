#pragma once

#include <random>
#include <string>

#include "cpt/catalog.hpp"
#include "cpt/poly.hpp"
#include "cpt/tower_ring.hpp"

namespace test {

/// Monomial from an exponent list; avoids the size constructor for one entry.
inline cpt::Monomial M(std::initializer_list<cpt::Monomial::Exponent> e) {
  return cpt::Monomial(std::vector<cpt::Monomial::Exponent>(e));
}

inline cpt::Poly P(const std::string& text, std::size_t ngens) { return cpt::parse_poly(text, ngens); }

inline cpt::RingPresentation pres(const std::string& id) {
  return cpt::build_presentation(cpt::parse_family(id));
}

/// Random polynomial with up to `terms` terms, exponents <= max_exp and
/// coefficients in [-c, c].
inline cpt::Poly random_poly(std::mt19937_64& rng, std::size_t ngens, int terms, unsigned max_exp, int c) {
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::uniform_int_distribution<int> coeff(-c, c);
  cpt::Poly p(ngens);
  for (int t = 0; t < terms; ++t) {
    std::vector<cpt::Monomial::Exponent> e(ngens);
    for (auto& x : e) x = exp(rng);
    p.add_term(cpt::Monomial(e), coeff(rng));
  }
  return p;
}

/// Random homogeneous polynomial of total exponent `total`.
inline cpt::Poly random_homogeneous(std::mt19937_64& rng, std::size_t ngens, unsigned total, int terms, int c) {
  std::uniform_int_distribution<int> coeff(-c, c);
  std::uniform_int_distribution<std::size_t> gen(0, ngens - 1);
  cpt::Poly p(ngens);
  for (int t = 0; t < terms; ++t) {
    std::vector<cpt::Monomial::Exponent> e(ngens, 0);
    for (unsigned i = 0; i < total; ++i) ++e[gen(rng)];
    p.add_term(cpt::Monomial(e), coeff(rng));
  }
  return p;
}

inline bool canonical(const cpt::Poly& p) {
  for (const auto& [m, c] : p.terms()) {
    if (c == 0 || m.ngens() != p.ngens()) return false;
  }
  return true;
}

}  // namespace test
