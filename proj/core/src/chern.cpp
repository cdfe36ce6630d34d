#include "cpt/chern.hpp"

#include <string>

#include "cpt/error.hpp"

namespace cpt {

namespace {

// floor(a / 2) for signed a.
Integer floor_half(const Integer& a) {
  Integer q = a / 2;
  if (a < 0 && q * 2 != a) q -= 1;
  return q;
}

}  // namespace

BundleDescriptor make_bundle(const RingPresentation& base, unsigned rank, std::vector<Poly> chern,
                             std::optional<int> alpha) {
  if (rank == 0) throw SpecError("bundle rank must be positive");
  if (chern.size() > rank) {
    throw SpecError("bundle of rank " + std::to_string(rank) + " given " +
                    std::to_string(chern.size()) + " chern classes");
  }
  chern.resize(rank, Poly(base.gens));
  for (std::size_t i = 0; i < chern.size(); ++i) {
    if (chern[i].ngens() != base.gens) chern[i] = chern[i].resized(base.gens);
    if (!chern[i].is_homogeneous(2 * (i + 1))) {
      throw SpecError("chern class c" + std::to_string(i + 1) + " is not homogeneous of degree " +
                      std::to_string(2 * (i + 1)));
    }
    chern[i] = normal_form(base, chern[i]);
  }
  if (alpha) {
    if (rank != 2 || base.caps != std::vector<unsigned>{3}) {
      throw SpecError("alpha is only defined for rank 2 bundles over CP^3");
    }
    if (*alpha != 0 && *alpha != 1) throw SpecError("alpha must be 0 or 1");
    const Integer c1 = chern[0].coeff(Monomial::generator(1, 0));
    if (*alpha == 1 && c1 % 2 != 0) throw SpecError("alpha must be 0 when c1 is odd");
  }
  return BundleDescriptor{rank, std::move(chern), alpha};
}

BundleDescriptor tensor_line(const RingPresentation& base, const BundleDescriptor& xi,
                             const Poly& gamma_c1) {
  if (xi.rank != 2) throw SpecError("tensor_line needs a rank 2 bundle");
  if (!gamma_c1.is_homogeneous(2)) throw SpecError("line bundle class must have degree 2");
  const Poly g = gamma_c1.ngens() == base.gens ? gamma_c1 : gamma_c1.resized(base.gens);
  const Poly& c1 = xi.chern[0];
  const Poly& c2 = xi.chern[1];
  Poly n1 = c1 + Integer(2) * g;
  Poly n2 = c2 + g * c1 + g * g;
  BundleDescriptor out{2, {normal_form(base, n1), normal_form(base, n2)}, xi.alpha};
  return out;
}

BundleDescriptor whitney_sum_of_lines(const RingPresentation& base, const std::vector<Poly>& c1s) {
  if (c1s.empty()) throw SpecError("whitney sum of an empty list");
  const std::size_t g = base.gens;
  // e[i] = i-th elementary symmetric function of the roots seen so far.
  std::vector<Poly> e{Poly::constant(g, 1)};
  for (const Poly& raw : c1s) {
    if (!raw.is_homogeneous(2)) throw SpecError("line bundle class must have degree 2");
    const Poly root = raw.ngens() == g ? raw : raw.resized(g);
    e.emplace_back(g);
    for (std::size_t i = e.size() - 1; i >= 1; --i) e[i] = normal_form(base, e[i] + e[i - 1] * root);
  }
  std::vector<Poly> chern(e.begin() + 1, e.end());
  return BundleDescriptor{static_cast<unsigned>(c1s.size()), std::move(chern), std::nullopt};
}

NormalizedBundle normalize_c1(const RingPresentation& base, const BundleDescriptor& xi) {
  if (xi.rank != 2) throw SpecError("normalize_c1 needs a rank 2 bundle");
  Poly shift(base.gens);
  for (std::size_t k = 0; k < base.gens; ++k) {
    const Integer a = xi.chern[0].coeff(Monomial::generator(base.gens, k));
    shift.add_term(Monomial::generator(base.gens, k), -floor_half(a));
  }
  return NormalizedBundle{tensor_line(base, xi, shift), shift};
}

TowerSpec dual_complement_of_tautological(int i, int j) {
  if (i < 1) throw SpecError("Milnor hypersurface needs i >= 1");
  if (i > j) throw SpecError("Milnor hypersurface needs i <= j");
  if (j < 2) throw SpecError("Milnor hypersurface with j = 1 has a point fiber");
  // c(gamma^perp) = (1 + c_1(gamma))^{-1}, truncated at rank j and at x^{i+1}.
  std::vector<Poly> chern;
  const Poly minus_x = Poly::generator(1, 0, -1);
  for (int q = 1; q <= std::min(i, j); ++q) chern.push_back(minus_x.pow(static_cast<unsigned>(q)));
  std::vector<Stage> stages;
  stages.push_back(Stage{static_cast<unsigned>(i), {}});
  stages.push_back(Stage{static_cast<unsigned>(j - 1), std::move(chern)});
  return TowerSpec::make(std::move(stages));
}

TowerSpec append_stage(const TowerSpec& base_spec, const BundleDescriptor& xi) {
  if (xi.rank < 2) throw SpecError("projectivizing a line bundle gives a point fiber");
  std::vector<Stage> stages = base_spec.stages();
  stages.push_back(Stage{xi.rank - 1, xi.chern});
  return TowerSpec::make(std::move(stages));
}

Poly symmetric_reduce(const Poly& p) {
  const std::size_t g = p.ngens();
  if (g < 2) throw SpecError("symmetric_reduce needs at least two generators");
  const Poly e1 = Poly::generator(g, 0) + Poly::generator(g, 1);
  const Poly e2 = Poly::generator(g, 0) * Poly::generator(g, 1);
  Poly rest = p;
  Poly out(g);
  while (!rest.is_zero()) {
    // Pick the term with the largest t1 exponent, then largest t2 exponent.
    const Monomial* best = nullptr;
    for (const auto& [m, c] : rest.terms()) {
      if (best == nullptr || m[0] > (*best)[0] || (m[0] == (*best)[0] && m[1] > (*best)[1])) {
        best = &m;
      }
    }
    const Monomial lead = *best;
    const Integer c = rest.coeff(lead);
    if (lead[0] < lead[1]) throw SpecError("polynomial is not symmetric in t1, t2");
    // c * t1^a t2^b * (other gens) is the leading term of c * e1^{a-b} e2^b * (other gens).
    const Monomial other = lead.with_exponent(0, 0).with_exponent(1, 0);
    const unsigned a = lead[0];
    const unsigned b = lead[1];
    rest -= Poly::monomial(other, c) * e1.pow(a - b) * e2.pow(b);
    Monomial target = other.with_exponent(0, a - b).with_exponent(1, b);
    out.add_term(target, c);
  }
  return out;
}

SplittingResult splitting_oracle_tensor() {
  // Ring (t1, t2, s).
  const Poly one = Poly::constant(3, 1);
  const Poly t1 = Poly::generator(3, 0);
  const Poly t2 = Poly::generator(3, 1);
  const Poly s = Poly::generator(3, 2);
  const Poly total = (one + t1 + s) * (one + t2 + s);
  Poly deg1(3);
  Poly deg2(3);
  for (const auto& [m, c] : total.terms()) {
    if (m.total() == 1) deg1.add_term(m, c);
    if (m.total() == 2) deg2.add_term(m, c);
  }
  return SplittingResult{symmetric_reduce(deg1), symmetric_reduce(deg2)};
}

}  // namespace cpt
