#include "cpt/tower_ring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "cpt/error.hpp"

namespace cpt {

std::uint64_t TowerSpec::real_dim() const {
  std::uint64_t d = 0;
  for (const auto& st : stages_) d += 2 * st.fiber_dim;
  return d;
}

TowerSpec TowerSpec::make(std::vector<Stage> stages) {
  const std::size_t g = stages.size();
  if (g == 0) throw SpecError("tower has no stages");
  for (std::size_t k = 0; k < g; ++k) {
    auto& st = stages[k];
    const std::string where = "stage " + std::to_string(k + 1);
    if (st.fiber_dim < 1) throw SpecError(where + " has fiber_dim 0; the fiber must be at least CP^1", k + 1);
    if (st.chern.size() > st.fiber_dim + 1) {
      throw SpecError(where + " has " + std::to_string(st.chern.size()) +
                      " chern classes but its bundle has rank " + std::to_string(st.fiber_dim + 1),
                      k + 1);
    }
    for (std::size_t i = 0; i < st.chern.size(); ++i) {
      Poly& c = st.chern[i];
      std::size_t span = c.generator_span();
      if (span > k) {
        throw SpecError(where + " chern references generator " + std::to_string(span), k + 1);
      }
      if (!c.is_homogeneous(2 * (i + 1))) {
        throw SpecError(where + " chern class c" + std::to_string(i + 1) +
                        " is not homogeneous of degree " + std::to_string(2 * (i + 1)),
                        k + 1);
      }
      c = c.resized(g);
    }
    // Trailing zero classes carry no information.
    while (!st.chern.empty() && st.chern.back().is_zero()) st.chern.pop_back();
  }
  TowerSpec spec;
  spec.stages_ = std::move(stages);
  return spec;
}

std::uint64_t RingPresentation::top_degree() const {
  return 2 * std::accumulate(caps.begin(), caps.end(), std::uint64_t{0});
}

std::uint64_t RingPresentation::rank() const {
  std::uint64_t r = 1;
  for (unsigned c : caps) r *= c + 1;
  return r;
}

namespace {

Poly relation_from_tail(std::size_t g, std::size_t k, unsigned cap, const Poly& tail) {
  Poly rel = Poly::monomial(Monomial::generator(g, k, cap + 1));
  rel -= tail;
  return rel;
}

}  // namespace

RingPresentation presentation(const TowerSpec& spec) {
  RingPresentation pres;
  const std::size_t g = spec.ngens();
  pres.gens = g;
  for (std::size_t k = 0; k < g; ++k) {
    const Stage& st = spec.stages()[k];
    const unsigned n = st.fiber_dim;
    // x^{n+1} = -sum_{i>=1} (-1)^i c_i x^{n+1-i}
    Poly tail(g);
    for (std::size_t i = 1; i <= st.chern.size(); ++i) {
      Poly c = normal_form(pres, st.chern[i - 1]);
      Poly term = c * Poly::monomial(Monomial::generator(g, k, n + 1 - static_cast<unsigned>(i)));
      if (i % 2 == 1) {
        tail += term;
      } else {
        tail -= term;
      }
    }
    pres.caps.push_back(n);
    pres.relations.push_back(relation_from_tail(g, k, n, tail));
    pres.tails.push_back(std::move(tail));
  }
  return pres;
}

RingPresentation presentation_from_relations(std::vector<unsigned> caps,
                                             std::vector<Poly> relations) {
  const std::size_t g = caps.size();
  if (relations.size() != g) throw SpecError("need one relation per generator");
  RingPresentation pres;
  pres.gens = g;
  pres.caps = std::move(caps);
  for (std::size_t k = 0; k < g; ++k) {
    const Poly& rel = relations[k];
    if (rel.ngens() != g) throw ArityError("relation " + std::to_string(k + 1) + " has wrong arity");
    const unsigned n = pres.caps[k];
    if (n < 1) throw SpecError("cap of generator " + std::to_string(k + 1) + " must be >= 1");
    Monomial lead = Monomial::generator(g, k, n + 1);
    if (rel.coeff(lead) != 1) {
      throw SpecError("relation " + std::to_string(k + 1) + " is not monic in x" +
                      std::to_string(k + 1) + "^" + std::to_string(n + 1));
    }
    Poly tail = Poly::monomial(lead) - rel;
    for (const auto& [m, c] : tail.terms()) {
      bool ok = m[k] <= n && m.degree() == lead.degree();
      for (std::size_t j = k + 1; j < g; ++j) ok = ok && m[j] == 0;
      if (!ok) {
        throw SpecError("relation " + std::to_string(k + 1) + " has a term outside the tower shape");
      }
    }
    pres.relations.push_back(rel);
    pres.tails.push_back(std::move(tail));
  }
  return pres;
}

Poly normal_form(const RingPresentation& pres, const Poly& p) {
  if (p.ngens() != pres.gens) {
    throw ArityError("normal_form: polynomial has " + std::to_string(p.ngens()) +
                     " generators, presentation has " + std::to_string(pres.gens));
  }
  Poly::Terms terms = p.terms();
  const std::size_t g = pres.gens;
  auto it = terms.end();
  while (it != terms.begin()) {
    --it;
    const Monomial& m = it->first;
    std::size_t k = g;
    for (std::size_t j = g; j-- > 0;) {
      if (m[j] > pres.caps[j]) {
        k = j;
        break;
      }
    }
    if (k == g) continue;
    const Monomial cur = m;
    const Integer coeff = it->second;
    terms.erase(it);
    if (coeff != 0) {
      const Monomial rest = cur.with_exponent(k, cur[k] - (pres.caps[k] + 1));
      for (const auto& [tm, tc] : pres.tails[k].terms()) {
        auto [pos, inserted] = terms.try_emplace(rest * tm, Integer(coeff * tc));
        if (!inserted) pos->second += coeff * tc;
      }
    }
    // Everything added is smaller than `cur`; resume just below it.
    it = terms.lower_bound(cur);
  }
  return Poly::from_map(g, std::move(terms));
}

Poly multiply(const RingPresentation& pres, const Poly& a, const Poly& b) {
  return normal_form(pres, a * b);
}

std::vector<Monomial> graded_basis(const RingPresentation& pres, std::uint64_t degree) {
  std::vector<Monomial> out;
  if (degree % 2 != 0) return out;
  const std::uint64_t want = degree / 2;
  const std::size_t g = pres.gens;
  std::vector<Monomial::Exponent> exps(g, 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t k, std::uint64_t left) {
    if (k == g) {
      if (left == 0) out.emplace_back(exps);
      return;
    }
    for (unsigned e = 0; e <= pres.caps[k] && e <= left; ++e) {
      exps[k] = e;
      rec(k + 1, left - e);
    }
    exps[k] = 0;
  };
  rec(0, want);
  std::sort(out.begin(), out.end());
  return out;
}

PoincarePoly poincare(const RingPresentation& pres) {
  // Coefficients of prod_k (1 + t + ... + t^{n_k}).
  std::vector<std::uint64_t> betti{1};
  for (unsigned n : pres.caps) {
    std::vector<std::uint64_t> next(betti.size() + n, 0);
    for (std::size_t i = 0; i < betti.size(); ++i) {
      for (unsigned e = 0; e <= n; ++e) next[i + e] += betti[i];
    }
    betti = std::move(next);
  }
  return PoincarePoly{std::move(betti)};
}

Matrix top_pairing_matrix(const RingPresentation& pres, std::uint64_t degree) {
  const std::uint64_t top = pres.top_degree();
  if (degree > top) throw ShapeError("pairing degree exceeds the top degree");
  auto rows = graded_basis(pres, degree);
  auto cols = graded_basis(pres, top - degree);
  std::vector<Monomial::Exponent> top_exps(pres.caps.begin(), pres.caps.end());
  const Monomial top_mono(top_exps);
  Matrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      Poly prod = normal_form(pres, Poly::monomial(rows[i] * cols[j]));
      m(i, j) = prod.coeff(top_mono);
    }
  }
  return m;
}

}  // namespace cpt
