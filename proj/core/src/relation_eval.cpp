#include "relation_eval.hpp"

#include <algorithm>
#include <map>

#include "cpt/integer.hpp"

namespace cpt::detail {

namespace {

inline bool mul_add(std::int64_t a, std::int64_t b, std::int64_t& acc) {
  std::int64_t prod;
  if (__builtin_mul_overflow(a, b, &prod)) return false;
  return !__builtin_add_overflow(acc, prod, &acc);
}

}  // namespace

TargetTables::TargetTables(const RingPresentation& target) : gens_(target.gens) {
  const std::size_t top = target.top_degree() / 2;
  std::vector<std::vector<Monomial>> basis(top + 1);
  std::vector<std::map<Monomial, std::size_t>> index(top + 1);
  for (std::size_t d = 0; d <= top; ++d) {
    basis[d] = graded_basis(target, 2 * d);
    for (std::size_t i = 0; i < basis[d].size(); ++i) index[d][basis[d][i]] = i;
    dims_.push_back(basis[d].size());
  }
  table_.assign(gens_, std::vector<std::vector<std::int64_t>>(top + 1));
  for (std::size_t j = 0; j < gens_; ++j) {
    const Monomial xj = Monomial::generator(gens_, j);
    for (std::size_t d = 0; d <= top; ++d) {
      const std::size_t rows = d + 1 <= top ? dims_[d + 1] : 0;
      auto& t = table_[j][d];
      t.assign(rows * dims_[d], 0);
      if (rows == 0) continue;
      for (std::size_t c = 0; c < dims_[d]; ++c) {
        Poly p = normal_form(target, Poly::monomial(basis[d][c] * xj));
        for (const auto& [m, coeff] : p.terms()) {
          auto v = to_int64(coeff);
          if (!v) {
            exact_only_ = true;
            continue;
          }
          t[index[d + 1].at(m) * dims_[d] + c] = *v;
        }
      }
    }
  }
}

bool TargetTables::mul_gen_add(std::size_t j, std::size_t d, const std::int64_t* v,
                               std::int64_t scale, std::int64_t* out) const {
  if (d + 1 >= dims_.size()) return true;
  const std::size_t rows = dims_[d + 1];
  const std::size_t cols = dims_[d];
  const auto& t = table_[j][d];
  for (std::size_t r = 0; r < rows; ++r) {
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      if (t[r * cols + c] != 0 && !mul_add(t[r * cols + c], v[c], acc)) return false;
    }
    if (acc != 0 && !mul_add(acc, scale, out[r])) return false;
  }
  return true;
}

RelationEvaluator::RelationEvaluator(const RingPresentation& source, const TargetTables& target)
    : target_(target) {
  const std::size_t g = source.gens;
  std::map<Monomial, std::size_t> ids;
  const Monomial unit(g);
  nodes_.push_back(Node{0, g, 0});
  ids[unit] = 0;
  level_nodes_.resize(g);

  auto node_of = [&](auto&& self, const Monomial& m) -> std::size_t {
    if (auto it = ids.find(m); it != ids.end()) return it->second;
    std::size_t h = g;
    for (std::size_t j = g; j-- > 0;) {
      if (m[j] != 0) {
        h = j;
        break;
      }
    }
    const std::size_t parent = self(self, m.with_exponent(h, m[h] - 1));
    const std::size_t id = nodes_.size();
    nodes_.push_back(Node{parent, h, static_cast<std::size_t>(m.total())});
    ids[m] = id;
    level_nodes_[h].push_back(id);
    return id;
  };

  relation_terms_.resize(g);
  relation_exact_only_.assign(g, target.exact_only());
  for (std::size_t k = 0; k < g; ++k) {
    for (const auto& [m, c] : source.relations[k].terms()) {
      auto v = to_int64(c);
      if (!v) relation_exact_only_[k] = true;
      relation_terms_[k].push_back(Term{node_of(node_of, m), v.value_or(0)});
    }
  }
  for (auto& lv : level_nodes_) {
    std::stable_sort(lv.begin(), lv.end(),
                     [&](std::size_t a, std::size_t b) { return nodes_[a].degree < nodes_[b].degree; });
  }
  level_ok_.assign(g, false);
  values_.resize(nodes_.size());
  values_[0] = {1};
}

int RelationEvaluator::assign_and_check(std::size_t k,
                                        const std::vector<std::vector<std::int64_t>>& cols) {
  const auto& col = cols[k];
  level_ok_[k] = false;
  for (std::size_t id : level_nodes_[k]) {
    const Node& n = nodes_[id];
    auto& out = values_[id];
    out.assign(n.degree < target_.max_degree() + 1 ? target_.dim(n.degree) : 0, 0);
    if (out.empty()) continue;
    const auto& in = values_[n.parent];
    for (std::size_t j = 0; j < col.size(); ++j) {
      if (col[j] == 0) continue;
      if (!target_.mul_gen_add(j, n.degree - 1, in.data(), col[j], out.data())) return -1;
    }
  }
  level_ok_[k] = true;
  if (relation_exact_only_[k]) return -1;
  // Products cached at a lower level may be stale after an overflow there.
  for (std::size_t j = 0; j < k; ++j) {
    if (!level_ok_[j]) return -1;
  }
  const auto& terms = relation_terms_[k];
  if (terms.empty()) return 1;
  const std::size_t deg = nodes_[terms.front().node].degree;
  scratch_.assign(deg <= target_.max_degree() ? target_.dim(deg) : 0, 0);
  for (const Term& t : terms) {
    const auto& v = values_[t.node];
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0 && !mul_add(t.coeff, v[i], scratch_[i])) return -1;
    }
  }
  return std::all_of(scratch_.begin(), scratch_.end(), [](std::int64_t x) { return x == 0; }) ? 1 : 0;
}

}  // namespace cpt::detail
