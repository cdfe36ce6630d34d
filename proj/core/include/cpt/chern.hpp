#pragma once

#include <optional>
#include <vector>

#include "cpt/poly.hpp"
#include "cpt/tower_ring.hpp"

namespace cpt {

/// Chern data of a complex vector bundle over a tower stage. `chern` holds
/// c_1..c_rank, reduced in the base presentation. `alpha` is the Atiyah-Rees
/// tag, stored as given and never computed.
struct BundleDescriptor {
  unsigned rank = 0;
  std::vector<Poly> chern;
  std::optional<int> alpha;

  friend bool operator==(const BundleDescriptor&, const BundleDescriptor&) = default;
};

/// Validates and reduces. Throws SpecError when a class is inhomogeneous, the
/// list is longer than the rank, or alpha is attached outside rank 2 over
/// CP^3 (or is 1 while c_1 is odd).
BundleDescriptor make_bundle(const RingPresentation& base, unsigned rank, std::vector<Poly> chern,
                             std::optional<int> alpha = std::nullopt);

/// xi tensor gamma, where gamma is the line bundle with first Chern class
/// `gamma_c1`: c_1 + 2 gamma, c_2 + gamma c_1 + gamma^2. Throws SpecError
/// unless xi has rank 2.
BundleDescriptor tensor_line(const RingPresentation& base, const BundleDescriptor& xi,
                             const Poly& gamma_c1);

/// Whitney sum of line bundles with the given first Chern classes.
BundleDescriptor whitney_sum_of_lines(const RingPresentation& base, const std::vector<Poly>& c1s);

struct NormalizedBundle {
  BundleDescriptor bundle;
  /// c_1 of the line bundle that was tensored in.
  Poly shift;
};

/// Tensors a rank-2 bundle so every coordinate of c_1 lands in {0, 1}.
NormalizedBundle normalize_c1(const RingPresentation& base, const BundleDescriptor& xi);

/// Milnor hypersurface H_{i,j} as P(gamma^perp) over CP^i, where gamma^perp
/// is the complement of the tautological line in the trivial rank j+1
/// bundle. Throws SpecError unless 1 <= i <= j and j >= 2.
TowerSpec dual_complement_of_tautological(int i, int j);

/// Tower with `xi` projectivized on top of `base_spec`.
TowerSpec append_stage(const TowerSpec& base_spec, const BundleDescriptor& xi);

/// Splitting-principle expansion of (1 + t1 + s)(1 + t2 + s), rewritten in
/// e1 = t1 + t2, e2 = t1 t2 and s. Results live in the three-generator ring
/// (e1, e2, s).
struct SplittingResult {
  Poly c1;
  Poly c2;
};
SplittingResult splitting_oracle_tensor();

/// Writes a polynomial in t1, t2 (generators 0, 1) with coefficients in the
/// remaining generators as a polynomial in e1, e2 (generators 0, 1). Throws
/// SpecError if it is not symmetric in t1, t2.
Poly symmetric_reduce(const Poly& p);

}  // namespace cpt
