#pragma once

// Independent reference arithmetic for tower rings.
//
// Elements are dense coefficient vectors over the box basis
// {x^e : e_k <= caps[k]}. Relations come straight from the raw stage data
// (unreduced Chern classes), and reduction rewrites the lowest offending
// generator first, the opposite strategy to the library. Only the term
// containers of cpt::Poly are read; none of its arithmetic is used.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "cpt/integer.hpp"
#include "cpt/poly.hpp"
#include "cpt/tower_ring.hpp"

namespace oracle {

using cpt::Integer;
using Exps = std::vector<unsigned>;
using Sparse = std::map<Exps, Integer>;

inline Exps exps_of(const cpt::Monomial& m) { return Exps(m.exps().begin(), m.exps().end()); }

inline Sparse sparse_of(const cpt::Poly& p) {
  Sparse out;
  for (const auto& [m, c] : p.terms()) out[exps_of(m)] += c;
  return out;
}

inline void add_into(Sparse& acc, const Exps& e, const Integer& c) {
  if (c == 0) return;
  auto [it, fresh] = acc.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

inline Sparse sparse_mul(const Sparse& a, const Sparse& b) {
  Sparse out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exps e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      add_into(out, e, ca * cb);
    }
  }
  return out;
}

class DenseRing {
 public:
  using Vec = std::vector<Integer>;

  /// tails[k] is what x_k^{caps[k]+1} equals; it may be unreduced.
  DenseRing(std::vector<unsigned> caps, std::vector<Sparse> tails)
      : caps_(std::move(caps)), tails_(std::move(tails)) {
    size_ = 1;
    for (unsigned c : caps_) size_ *= c + 1;
  }

  /// Relations read from the raw stages: x^{n+1} = -sum_i (-1)^i c_i x^{n+1-i}.
  static DenseRing from_tower(const cpt::TowerSpec& spec) {
    const std::size_t g = spec.ngens();
    std::vector<unsigned> caps;
    std::vector<Sparse> tails;
    for (std::size_t k = 0; k < g; ++k) {
      const auto& st = spec.stages()[k];
      caps.push_back(st.fiber_dim);
      Sparse tail;
      for (std::size_t i = 0; i < st.chern.size(); ++i) {
        const unsigned power = st.fiber_dim - static_cast<unsigned>(i);  // n+1-(i+1)
        const Integer sign = (i % 2 == 0) ? 1 : -1;  // -(-1)^{i+1}
        for (const auto& [m, c] : st.chern[i].terms()) {
          Exps e = exps_of(m);
          e.resize(g, 0);
          e[k] += power;
          add_into(tail, e, sign * c);
        }
      }
      tails.push_back(std::move(tail));
    }
    return DenseRing(std::move(caps), std::move(tails));
  }

  std::size_t gens() const { return caps_.size(); }
  std::size_t size() const { return size_; }
  const std::vector<unsigned>& caps() const { return caps_; }

  std::size_t index(const Exps& e) const {
    std::size_t idx = 0;
    for (std::size_t k = caps_.size(); k-- > 0;) idx = idx * (caps_[k] + 1) + e[k];
    return idx;
  }

  Exps exps_at(std::size_t idx) const {
    Exps e(caps_.size());
    for (std::size_t k = 0; k < caps_.size(); ++k) {
      e[k] = static_cast<unsigned>(idx % (caps_[k] + 1));
      idx /= caps_[k] + 1;
    }
    return e;
  }

  /// Dense image of one monomial.
  const Vec& reduce_monomial(const Exps& e) {
    if (auto it = memo_.find(e); it != memo_.end()) return it->second;
    Vec out(size_);
    std::size_t k = 0;
    while (k < e.size() && e[k] <= caps_[k]) ++k;
    if (k == e.size()) {
      out[index(e)] = 1;
    } else {
      Exps rest = e;
      rest[k] -= caps_[k] + 1;
      for (const auto& [te, tc] : tails_[k]) {
        Exps f(e.size());
        for (std::size_t i = 0; i < f.size(); ++i) f[i] = rest[i] + te[i];
        const Vec& sub = reduce_monomial(f);
        for (std::size_t i = 0; i < size_; ++i) {
          if (sub[i] != 0) out[i] += tc * sub[i];
        }
      }
    }
    return memo_.emplace(e, std::move(out)).first->second;
  }

  Vec reduce(const Sparse& p) {
    Vec out(size_);
    for (const auto& [e, c] : p) {
      const Vec& v = reduce_monomial(e);
      for (std::size_t i = 0; i < size_; ++i) {
        if (v[i] != 0) out[i] += c * v[i];
      }
    }
    return out;
  }

  Vec reduce(const cpt::Poly& p) { return reduce(sparse_of(p)); }

  Vec multiply(const Vec& a, const Vec& b) {
    Vec out(size_);
    for (std::size_t i = 0; i < size_; ++i) {
      if (a[i] == 0) continue;
      const Exps ei = exps_at(i);
      for (std::size_t j = 0; j < size_; ++j) {
        if (b[j] == 0) continue;
        const Exps ej = exps_at(j);
        Exps e(ei.size());
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ei[k] + ej[k];
        const Vec& v = reduce_monomial(e);
        const Integer c = a[i] * b[j];
        for (std::size_t t = 0; t < size_; ++t) {
          if (v[t] != 0) out[t] += c * v[t];
        }
      }
    }
    return out;
  }

  /// Dense vector of a library polynomial assumed already reduced.
  Vec embed_reduced(const cpt::Poly& p) const {
    Vec out(size_);
    for (const auto& [m, c] : p.terms()) {
      const Exps e = exps_of(m);
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] > caps_[k]) throw std::logic_error("embed_reduced: term outside the box basis");
      }
      out[index(e)] = c;
    }
    return out;
  }

  /// The raw relation polynomials x_k^{n+1} - tail_k.
  std::vector<Sparse> relations() const {
    std::vector<Sparse> out;
    for (std::size_t k = 0; k < caps_.size(); ++k) {
      Sparse r;
      for (const auto& [e, c] : tails_[k]) add_into(r, e, -c);
      Exps lead(caps_.size(), 0);
      lead[k] = caps_[k] + 1;
      add_into(r, lead, 1);
      out.push_back(std::move(r));
    }
    return out;
  }

  static bool is_zero(const Vec& v) {
    for (const auto& c : v) {
      if (c != 0) return false;
    }
    return true;
  }

 private:
  std::vector<unsigned> caps_;
  std::vector<Sparse> tails_;
  std::size_t size_ = 1;
  std::map<Exps, Vec> memo_;
};

}  // namespace oracle
