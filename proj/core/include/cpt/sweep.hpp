#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cpt/catalog.hpp"
#include "cpt/iso_search.hpp"

namespace cpt {

enum class Expectation { Distinct, Coincident };

struct ReportRow {
  FamilyId a;
  FamilyId b;
  Expectation expected = Expectation::Distinct;
  SearchVerdict verdict;
  bool pass = false;
  /// Row belongs to a pair of mutually inconsistent published statements.
  bool discrepancy = false;
  std::string note;
  /// Recorded homotopy data, for M8 pairs with equal u and different alpha.
  std::optional<Pi6Comparison> pi6;
};

struct Report {
  std::string theorem;
  int range = 0;
  int bound = 0;
  std::vector<ReportRow> rows;
  double seconds = 0.0;

  std::size_t failures() const;
};

using Searcher =
    std::function<SearchVerdict(const RingPresentation&, const RingPresentation&, int bound)>;

struct SweepOptions {
  /// Pairs are searched in parallel; row order does not depend on this.
  unsigned jobs = 1;
  /// Replaces the plain search, e.g. with a caching wrapper.
  Searcher searcher;
};

/// Every pair of the dimension <= 6 canonical list with parameters in
/// [-n, n]; all distinct pairs are expected non-isomorphic.
Report sweep_distinctness(int n, int bound, const SweepOptions& opts = {});
/// Two-stage towers: Eta2(s, a) for s in {0, 1}, a in [-n, n], and GB2(k).
Report sweep_two_stage(int n, int bound, const SweepOptions& opts = {});
/// Three-stage towers: Zeta3 and Xi3 for (s, r) in {0, 1}^2, parameter in [-n, n].
Report sweep_three_stage(int n, int bound, const SweepOptions& opts = {});
/// M8(a, u) and N8(u) for u in [-n, n], with pi_6 rows.
Report sweep_eight_dim(int n, int bound, const SweepOptions& opts = {});

/// Dispatches on "main", "two-stage", "three-stage" or "eight-dim". Throws
/// SpecError for other names.
Report run_sweep(const std::string& theorem, int n, int bound, const SweepOptions& opts = {});

std::string to_string(Expectation e);

}  // namespace cpt
