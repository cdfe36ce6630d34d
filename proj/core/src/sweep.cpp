#include "cpt/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "cpt/error.hpp"

namespace cpt {

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return !r.pass; }));
}

std::string to_string(Expectation e) { return e == Expectation::Distinct ? "distinct" : "coincident"; }

namespace {

bool same_pair(const FamilyId& a, const FamilyId& b, const FamilyId& c, const FamilyId& d) {
  return (a == c && b == d) || (a == d && b == c);
}

Report run_pairs(std::string theorem, int n, int bound, const std::vector<FamilyId>& ids,
                 const SweepOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<RingPresentation> pres;
  pres.reserve(ids.size());
  for (const auto& id : ids) pres.push_back(build_presentation(id));

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i; j < ids.size(); ++j) pairs.emplace_back(i, j);
  }

  const auto fixtures = coincidence_fixtures();
  Searcher searcher = opts.searcher;
  if (!searcher) {
    searcher = [](const RingPresentation& a, const RingPresentation& b, int bd) { return search(a, b, bd); };
  }

  Report report;
  report.theorem = std::move(theorem);
  report.range = n;
  report.bound = bound;
  report.rows.resize(pairs.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    try {
      while (!failed.load()) {
        const std::size_t t = next.fetch_add(1);
        if (t >= pairs.size()) return;
        const auto [i, j] = pairs[t];
        ReportRow& row = report.rows[t];
        row.a = ids[i];
        row.b = ids[j];
        row.expected = ring_class(ids[i]) == ring_class(ids[j]) ? Expectation::Coincident : Expectation::Distinct;
        row.verdict = searcher(pres[i], pres[j], bound);
        row.pass = row.verdict.found() == (row.expected == Expectation::Coincident);
        for (const auto& fx : fixtures) {
          if (fx.discrepancy && same_pair(row.a, row.b, fx.a, fx.b)) {
            row.discrepancy = true;
            row.note = fx.note;
          }
        }
        if (row.a.family == Family::M8 && row.b.family == Family::M8 &&
            row.a.params[1] == row.b.params[1] && row.a.params[0] != row.b.params[0]) {
          row.pi6 = pi6_distinguish(row.a, row.b);
          if (pres[i] == pres[j]) row.note = "identical presentations";
        }
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void check_args(int n, int bound) {
  if (n < 0) throw SpecError("sweep range must be non-negative");
  if (bound < 0) throw SpecError("sweep bound must be non-negative");
}

}  // namespace

Report sweep_distinctness(int n, int bound, const SweepOptions& opts) {
  check_args(n, bound);
  return run_pairs("main", n, bound, canonical_list(n), opts);
}

Report sweep_two_stage(int n, int bound, const SweepOptions& opts) {
  check_args(n, bound);
  std::vector<FamilyId> ids;
  for (int k = 0; k <= 2; ++k) ids.push_back(make_id(Family::GB2, {k}));
  for (int s = 0; s <= 1; ++s) {
    for (int a = -n; a <= n; ++a) ids.push_back(make_id(Family::Eta2, {s, a}));
  }
  return run_pairs("two-stage", n, bound, ids, opts);
}

Report sweep_three_stage(int n, int bound, const SweepOptions& opts) {
  check_args(n, bound);
  std::vector<FamilyId> ids;
  for (Family f : {Family::Zeta3, Family::Xi3}) {
    for (int s = 0; s <= 1; ++s) {
      for (int r = 0; r <= 1; ++r) {
        for (int a = -n; a <= n; ++a) ids.push_back(make_id(f, {s, r, a}));
      }
    }
  }
  // Both readings of the cross-base coincidence are always exercised.
  for (const auto& fx : coincidence_fixtures()) {
    if (!fx.discrepancy) continue;
    for (const FamilyId& id : {fx.a, fx.b}) {
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    }
  }
  return run_pairs("three-stage", n, bound, ids, opts);
}

Report sweep_eight_dim(int n, int bound, const SweepOptions& opts) {
  check_args(n, bound);
  std::vector<FamilyId> ids;
  for (int u = -n; u <= n; ++u) {
    ids.push_back(make_id(Family::M8, {0, u}));
    ids.push_back(make_id(Family::M8, {1, u}));
  }
  for (int u = -n; u <= n; ++u) ids.push_back(make_id(Family::N8, {u}));
  return run_pairs("eight-dim", n, bound, ids, opts);
}

Report run_sweep(const std::string& theorem, int n, int bound, const SweepOptions& opts) {
  if (theorem == "main") return sweep_distinctness(n, bound, opts);
  if (theorem == "two-stage") return sweep_two_stage(n, bound, opts);
  if (theorem == "three-stage") return sweep_three_stage(n, bound, opts);
  if (theorem == "eight-dim") return sweep_eight_dim(n, bound, opts);
  throw SpecError("unknown theorem tag '" + theorem + "'");
}

}  // namespace cpt
