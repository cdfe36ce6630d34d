#include "cpt/iso_search.hpp"

#include <atomic>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "cpt/error.hpp"
#include "relation_eval.hpp"

namespace cpt {

namespace {

using Col = std::vector<std::int64_t>;
__extension__ using Wide = __int128;

std::size_t candidate_count(int bound, std::size_t g) {
  std::size_t n = 1;
  for (std::size_t j = 0; j < g; ++j) n *= static_cast<std::size_t>(2 * bound + 1);
  return n;
}

// Candidate t in lexicographic order: entry 0 varies slowest, -bound first.
void decode(std::size_t t, int bound, Col& out) {
  const std::size_t base = static_cast<std::size_t>(2 * bound + 1);
  for (std::size_t j = out.size(); j-- > 0;) {
    out[j] = static_cast<std::int64_t>(t % base) - bound;
    t /= base;
  }
}

// Determinant of a small square matrix, fraction-free.
Wide small_det(std::vector<Wide> a, std::size_t n) {
  if (n == 0) return 1;
  Wide sign = 1;
  Wide prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r * n + k] == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[r * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      }
    }
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

Wide abs128(Wide v) { return v < 0 ? -v : v; }

Wide gcd128(Wide a, Wide b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Whether the first `ncols` columns extend to a unimodular matrix, i.e. the
// gcd of their maximal minors is 1.
bool extendable(const std::vector<Col>& cols, std::size_t ncols, std::size_t g) {
  std::vector<std::size_t> rows(ncols);
  std::iota(rows.begin(), rows.end(), 0);
  Wide acc = 0;
  std::vector<Wide> sub(ncols * ncols);
  while (true) {
    for (std::size_t i = 0; i < ncols; ++i) {
      for (std::size_t j = 0; j < ncols; ++j) sub[i * ncols + j] = cols[j][rows[i]];
    }
    acc = gcd128(acc, small_det(sub, ncols));
    if (acc == 1) return true;
    // Next row subset in lexicographic order.
    std::size_t i = ncols;
    while (i > 0 && rows[i - 1] == g - ncols + i - 1) --i;
    if (i == 0) return false;
    ++rows[i - 1];
    for (std::size_t j = i; j < ncols; ++j) rows[j] = rows[j - 1] + 1;
  }
}

Matrix to_matrix(const std::vector<Col>& cols, std::size_t g) {
  Matrix m(g, g);
  for (std::size_t c = 0; c < g; ++c) {
    for (std::size_t r = 0; r < g; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Poly linear_form(const Matrix& m, std::size_t c) {
  Poly p(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) p.add_term(Monomial::generator(m.rows(), r), m(r, c));
  return p;
}

bool relation_vanishes(const RingPresentation& a, const RingPresentation& b, std::size_t k,
                       const std::vector<Poly>& images) {
  return normal_form(b, substitute(a.relations[k], images, b.gens)).is_zero();
}

class Dfs {
 public:
  Dfs(const RingPresentation& a, const RingPresentation& b, const detail::TargetTables& tables,
      int bound, bool prune)
      : a_(a), b_(b), eval_(a, tables), bound_(bound), prune_(prune), g_(a.gens),
        ncand_(candidate_count(bound, a.gens)), cols_(a.gens, Col(a.gens, 0)) {}

  // Explores the subtree with column 0 set to candidate `t0`. `emit` returns
  // true to stop; `abort` is polled between candidates.
  template <class Emit, class Abort>
  bool run(std::size_t t0, Emit&& emit, Abort&& abort) {
    decode(t0, bound_, cols_[0]);
    if (!accept(0)) return false;
    return descend(1, emit, abort);
  }

  std::size_t candidates() const { return ncand_; }

 private:
  bool accept(std::size_t k) {
    if (prune_ && !extendable(cols_, k + 1, g_)) return false;
    int r = eval_.assign_and_check(k, cols_);
    if (r >= 0) return r == 1;
    std::vector<Poly> images(g_, Poly(g_));
    for (std::size_t j = 0; j <= k; ++j) {
      for (std::size_t i = 0; i < g_; ++i) {
        images[j].add_term(Monomial::generator(g_, i), cols_[j][i]);
      }
    }
    return relation_vanishes(a_, b_, k, images);
  }

  template <class Emit, class Abort>
  bool descend(std::size_t k, Emit& emit, Abort& abort) {
    if (k == g_) {
      Matrix m = to_matrix(cols_, g_);
      Integer det = m.det();
      if (det != 1 && det != -1) return false;
      IsoCertificate cert{std::move(m), det};
      if (!verify(cert, a_, b_)) throw std::logic_error("search produced a certificate that does not verify");
      return emit(std::move(cert));
    }
    for (std::size_t t = 0; t < ncand_; ++t) {
      if (abort()) return true;
      decode(t, bound_, cols_[k]);
      if (!accept(k)) continue;
      if (descend(k + 1, emit, abort)) return true;
    }
    return false;
  }

  const RingPresentation& a_;
  const RingPresentation& b_;
  detail::RelationEvaluator eval_;
  int bound_;
  bool prune_;
  std::size_t g_;
  std::size_t ncand_;
  std::vector<Col> cols_;
};

// Certificates grouped by the column-0 candidate they start with.
std::vector<IsoCertificate> explore(const RingPresentation& a, const RingPresentation& b, int bound,
                                    const SearchOptions& opts, bool first_only) {
  if (bound < 0) throw ShapeError("search bound must be non-negative");
  const detail::TargetTables tables(b);
  const std::size_t ncand = candidate_count(bound, a.gens);
  std::vector<std::vector<IsoCertificate>> found(ncand);
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{none};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  auto worker = [&] {
    try {
      Dfs dfs(a, b, tables, bound, opts.prune);
      while (true) {
        const std::size_t t = next.fetch_add(1);
        if (t >= ncand || failed.load()) return;
        if (first_only && t > best.load()) return;
        auto& bucket = found[t];
        auto emit = [&](IsoCertificate cert) {
          bucket.push_back(std::move(cert));
          return first_only;
        };
        auto abort = [&] { return first_only && best.load() < t; };
        dfs.run(t, emit, abort);
        if (first_only && !bucket.empty()) {
          std::size_t cur = best.load();
          while (t < cur && !best.compare_exchange_weak(cur, t)) {
          }
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
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<IsoCertificate> out;
  if (first_only) {
    if (best.load() != none) out.push_back(std::move(found[best.load()].front()));
    return out;
  }
  for (auto& bucket : found) {
    for (auto& c : bucket) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<Poly> generator_images(const Matrix& m) {
  std::vector<Poly> images;
  images.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) images.push_back(linear_form(m, c));
  return images;
}

bool verify(const IsoCertificate& cert, const RingPresentation& a, const RingPresentation& b) {
  if (cert.matrix.cols() != a.gens || cert.matrix.rows() != b.gens) {
    throw ShapeError("certificate is " + std::to_string(cert.matrix.rows()) + "x" +
                     std::to_string(cert.matrix.cols()) + " but the rings have " +
                     std::to_string(a.gens) + " and " + std::to_string(b.gens) + " generators");
  }
  if (poincare(a) != poincare(b)) return false;
  const Integer det = cert.matrix.det();
  if (det != 1 && det != -1) return false;
  if (det != cert.det) return false;
  const auto images = generator_images(cert.matrix);
  for (std::size_t k = 0; k < a.gens; ++k) {
    if (!relation_vanishes(a, b, k, images)) return false;
  }
  return true;
}

SearchVerdict search(const RingPresentation& a, const RingPresentation& b, int bound,
                     SearchOptions opts) {
  if (poincare(a) != poincare(b)) return SearchVerdict::none(bound, NoneReason::BettiMismatch);
  auto certs = explore(a, b, bound, opts, true);
  if (certs.empty()) return SearchVerdict::none(bound, NoneReason::Exhausted);
  return SearchVerdict::of(std::move(certs.front()), bound);
}

std::vector<IsoCertificate> search_all(const RingPresentation& a, const RingPresentation& b,
                                       int bound, SearchOptions opts) {
  if (poincare(a) != poincare(b)) return {};
  return explore(a, b, bound, opts, false);
}

namespace {

template <class Emit>
void reference_scan(const RingPresentation& a, const RingPresentation& b, int bound, Emit&& emit) {
  if (bound < 0) throw ShapeError("search bound must be non-negative");
  const std::size_t g = a.gens;
  const std::size_t total = candidate_count(bound, g * g);
  Col flat(g * g);
  for (std::size_t t = 0; t < total; ++t) {
    decode(t, bound, flat);
    Matrix m(g, g);
    for (std::size_t c = 0; c < g; ++c) {
      for (std::size_t r = 0; r < g; ++r) m(r, c) = flat[c * g + r];
    }
    Integer det = m.det();
    if (det != 1 && det != -1) continue;
    IsoCertificate cert{std::move(m), det};
    if (verify(cert, a, b) && emit(std::move(cert))) return;
  }
}

}  // namespace

SearchVerdict search_reference(const RingPresentation& a, const RingPresentation& b, int bound) {
  if (poincare(a) != poincare(b)) return SearchVerdict::none(bound, NoneReason::BettiMismatch);
  std::optional<IsoCertificate> first;
  reference_scan(a, b, bound, [&](IsoCertificate c) {
    first = std::move(c);
    return true;
  });
  if (!first) return SearchVerdict::none(bound, NoneReason::Exhausted);
  return SearchVerdict::of(std::move(*first), bound);
}

std::vector<IsoCertificate> search_all_reference(const RingPresentation& a,
                                                 const RingPresentation& b, int bound) {
  std::vector<IsoCertificate> out;
  if (poincare(a) != poincare(b)) return out;
  reference_scan(a, b, bound, [&](IsoCertificate c) {
    out.push_back(std::move(c));
    return false;
  });
  return out;
}

IsoCertificate inverse(const IsoCertificate& cert) {
  return IsoCertificate{cert.matrix.unimodular_inverse(), cert.det};
}

IsoCertificate compose(const IsoCertificate& ab, const IsoCertificate& bc) {
  Matrix m = bc.matrix * ab.matrix;
  return IsoCertificate{std::move(m), ab.det * bc.det};
}

}  // namespace cpt
