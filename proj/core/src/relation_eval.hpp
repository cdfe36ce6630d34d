#pragma once

// Machine-integer evaluation of source relations under a partial linear map,
// used by the search inner loop. Any overflow is reported to the caller, who
// then falls back to exact arithmetic.

#include <cstdint>
#include <vector>

#include "cpt/tower_ring.hpp"

namespace cpt::detail {

/// Multiplication-by-generator tables of a target presentation.
class TargetTables {
 public:
  explicit TargetTables(const RingPresentation& target);

  bool exact_only() const { return exact_only_; }
  std::size_t gens() const { return gens_; }
  std::size_t dim(std::size_t degree) const { return dims_[degree]; }
  std::size_t max_degree() const { return dims_.size() - 1; }

  /// out += scale * (x_j * v), v in degree d. False on overflow.
  bool mul_gen_add(std::size_t j, std::size_t d, const std::int64_t* v, std::int64_t scale,
                   std::int64_t* out) const;

 private:
  std::size_t gens_ = 0;
  std::vector<std::size_t> dims_;
  // table_[j][d] is dim(d+1) x dim(d), row-major.
  std::vector<std::vector<std::vector<std::int64_t>>> table_;
  bool exact_only_ = false;
};

/// Incremental evaluator for the relations of a source presentation.
class RelationEvaluator {
 public:
  RelationEvaluator(const RingPresentation& source, const TargetTables& target);

  /// Recomputes cached products after column k changed, then evaluates
  /// relation k. Returns +1 if it vanishes, 0 if not, -1 on overflow.
  int assign_and_check(std::size_t k, const std::vector<std::vector<std::int64_t>>& cols);

 private:
  struct Node {
    std::size_t parent;   // index of m / x_level
    std::size_t level;    // highest generator present
    std::size_t degree;   // total exponent
  };
  struct Term {
    std::size_t node;
    std::int64_t coeff;
  };

  const TargetTables& target_;
  std::vector<Node> nodes_;
  std::vector<std::vector<std::size_t>> level_nodes_;
  std::vector<std::vector<Term>> relation_terms_;
  std::vector<bool> relation_exact_only_;
  std::vector<bool> level_ok_;
  std::vector<std::vector<std::int64_t>> values_;
  std::vector<std::int64_t> scratch_;
};

}  // namespace cpt::detail
