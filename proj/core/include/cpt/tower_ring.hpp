#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cpt/matrix.hpp"
#include "cpt/poly.hpp"

namespace cpt {

/// One projectivization step: the fiber is CP^{fiber_dim} and `chern` holds
/// c_1, c_2, ... of the rank fiber_dim+1 bundle being projectivized. Missing
/// trailing classes are zero.
struct Stage {
  unsigned fiber_dim = 1;
  std::vector<Poly> chern;
};

/// Validated list of stages. Chern classes of stage k (1-based) may only use
/// generators 1..k-1; they are stored in the ambient of the whole tower.
class TowerSpec {
 public:
  TowerSpec() = default;

  /// Validates and adopts `stages`. Throws SpecError with a message such as
  /// "stage 2 chern references generator 3".
  static TowerSpec make(std::vector<Stage> stages);

  const std::vector<Stage>& stages() const { return stages_; }
  std::size_t ngens() const { return stages_.size(); }
  /// Real dimension 2 * sum n_k.
  std::uint64_t real_dim() const;

 private:
  std::vector<Stage> stages_;
};

/// Z[x_1..x_g] / (relation_1, ..., relation_g) with relation k monic in
/// x_k^{caps[k]+1}.
struct RingPresentation {
  std::size_t gens = 0;
  std::vector<unsigned> caps;
  std::vector<Poly> relations;
  /// tails[k] = x_k^{caps[k]+1} - relations[k], the rewrite target.
  std::vector<Poly> tails;

  std::uint64_t top_degree() const;
  /// Number of reduced basis monomials, prod (caps[k]+1).
  std::uint64_t rank() const;

  friend bool operator==(const RingPresentation& a, const RingPresentation& b) {
    return a.caps == b.caps && a.relations == b.relations;
  }
};

struct PoincarePoly {
  /// betti[d] is the rank in cohomological degree 2d.
  std::vector<std::uint64_t> betti;

  friend bool operator==(const PoincarePoly&, const PoincarePoly&) = default;
};

/// Builds the presentation, reducing each stage's Chern classes in the
/// presentation of the stages below it.
RingPresentation presentation(const TowerSpec& spec);

/// Builds a presentation directly from caps and monic relations. Throws
/// SpecError if relation k does not have leading monomial x_k^{caps[k]+1}
/// or its tail involves x_j for j >= k beyond the allowed powers.
RingPresentation presentation_from_relations(std::vector<unsigned> caps,
                                             std::vector<Poly> relations);

/// Unique representative supported on {x^a : a_k <= caps[k]}.
///
/// The largest offending monomial is rewritten first. Rewriting by relation
/// k only produces monomials that are smaller in the graded-lex order, so a
/// single descending pass over the term map suffices.
Poly normal_form(const RingPresentation& pres, const Poly& p);

/// nf(a * b).
Poly multiply(const RingPresentation& pres, const Poly& a, const Poly& b);

/// Reduced basis monomials of cohomological degree `degree`, ascending.
std::vector<Monomial> graded_basis(const RingPresentation& pres, std::uint64_t degree);

PoincarePoly poincare(const RingPresentation& pres);

/// Pairing of degree `degree` against degree top-`degree`, read off the
/// coefficient of the top monomial. Throws ShapeError if degree > top.
Matrix top_pairing_matrix(const RingPresentation& pres, std::uint64_t degree);

}  // namespace cpt
