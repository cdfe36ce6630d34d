#pragma once

#include <optional>
#include <vector>

#include "cpt/matrix.hpp"
#include "cpt/poly.hpp"
#include "cpt/tower_ring.hpp"

namespace cpt {

/// A graded ring map A -> B given on degree-2 generators. Column k of
/// `matrix` holds the coordinates of the image of source generator k in the
/// target generators.
struct IsoCertificate {
  Matrix matrix;
  Integer det;

  friend bool operator==(const IsoCertificate&, const IsoCertificate&) = default;
};

enum class NoneReason { Exhausted, BettiMismatch };

/// Either a certificate or a bounded non-existence statement: no certificate
/// has all entries in [-bound, bound]. The latter is not a proof that the
/// rings are non-isomorphic.
struct SearchVerdict {
  std::optional<IsoCertificate> certificate;
  int bound = 0;
  NoneReason reason = NoneReason::Exhausted;

  bool found() const { return certificate.has_value(); }
  static SearchVerdict none(int bound, NoneReason reason) { return SearchVerdict{std::nullopt, bound, reason}; }
  static SearchVerdict of(IsoCertificate cert, int bound) { return SearchVerdict{std::move(cert), bound, NoneReason::Exhausted}; }

  friend bool operator==(const SearchVerdict&, const SearchVerdict&) = default;
};

struct SearchOptions {
  /// Worker threads. Results do not depend on this.
  unsigned jobs = 1;
  /// Discard partial matrices whose maximal minors have gcd != 1.
  bool prune = true;
};

/// Images of the source generators as polynomials in the target ring.
std::vector<Poly> generator_images(const Matrix& m);

/// True iff |det| = 1 and every source relation maps to zero in the target.
/// Such a map is onto in degree 2, hence onto (both rings are generated in
/// degree 2), and an onto map of free graded modules of equal finite ranks
/// is bijective. Returns false on a Poincare mismatch; throws ShapeError if
/// the matrix shape does not match the generator counts.
bool verify(const IsoCertificate& cert, const RingPresentation& a, const RingPresentation& b);

/// First certificate in lexicographic order of the column-major flattened
/// matrix, entries running from -bound to bound.
SearchVerdict search(const RingPresentation& a, const RingPresentation& b, int bound,
                     SearchOptions opts = {});

/// Every certificate within the bound, in the same order.
std::vector<IsoCertificate> search_all(const RingPresentation& a, const RingPresentation& b,
                                       int bound, SearchOptions opts = {});

/// Plain enumeration of every matrix in the same order, with determinant and
/// exact relation checks only. Used to validate the pruned search.
SearchVerdict search_reference(const RingPresentation& a, const RingPresentation& b, int bound);
std::vector<IsoCertificate> search_all_reference(const RingPresentation& a,
                                                 const RingPresentation& b, int bound);

/// Certificate for B -> A.
IsoCertificate inverse(const IsoCertificate& cert);
/// Certificate for A -> C from A -> B and B -> C.
IsoCertificate compose(const IsoCertificate& ab, const IsoCertificate& bc);

}  // namespace cpt
