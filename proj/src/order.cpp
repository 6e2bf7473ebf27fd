#include "pclab/order.hpp"

#include <algorithm>
#include <numeric>

#include "pclab/errors.hpp"

namespace pclab {

MonomialOrder::MonomialOrder(std::vector<uint32_t> vertex_rank, uint32_t colours)
    : rank_(std::move(vertex_rank)), k_(colours) {
  require(k_ >= 1, "colour count must be >= 1");
  std::vector<bool> seen(rank_.size(), false);
  for (uint32_t r : rank_) {
    require(r < rank_.size() && !seen[r], "vertex ranks must form a permutation");
    seen[r] = true;
  }
}

MonomialOrder MonomialOrder::identity(uint32_t n_vertices, uint32_t colours) {
  std::vector<uint32_t> rank(n_vertices);
  std::iota(rank.begin(), rank.end(), 0);
  return MonomialOrder(std::move(rank), colours);
}

uint32_t MonomialOrder::rank_of(uint32_t vertex) const {
  require(vertex < rank_.size(), "vertex outside the order's universe");
  return rank_[vertex];
}

std::pair<uint32_t, uint32_t> MonomialOrder::var_key(Variable v) const {
  require(v.vertex < rank_.size(), "variable vertex outside the order's universe");
  require(v.colour >= 1 && v.colour <= k_, "variable colour outside [k]");
  return {rank_[v.vertex], v.colour};
}

Cmp MonomialOrder::compare_vars(Variable a, Variable b) const {
  auto ka = var_key(a), kb = var_key(b);
  if (ka < kb) return Cmp::less;
  if (kb < ka) return Cmp::greater;
  return Cmp::equal;
}

Cmp MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& v : a.vars()) var_key(v);
  for (const auto& v : b.vars()) var_key(v);
  if (a.degree() != b.degree())
    return a.degree() < b.degree() ? Cmp::less : Cmp::greater;

  // Equal degree: compare variable sequences from the largest variable down.
  auto key = [&](const Monomial& m) {
    std::vector<std::pair<uint32_t, uint32_t>> ks;
    ks.reserve(m.degree());
    for (const auto& v : m.vars()) ks.push_back(var_key(v));
    std::sort(ks.rbegin(), ks.rend());
    return ks;
  };
  auto ka = key(a), kb = key(b);
  if (ka < kb) return Cmp::less;
  if (kb < ka) return Cmp::greater;
  return Cmp::equal;
}

Monomial MonomialOrder::leading_monomial(const Polynomial& p) const {
  require(!p.is_zero(), "leading monomial of the zero polynomial");
  const Monomial* best = &p.terms()[0].mono;
  for (size_t i = 1; i < p.terms().size(); ++i) {
    if (compare(*best, p.terms()[i].mono) == Cmp::less) best = &p.terms()[i].mono;
  }
  return *best;
}

Scalar MonomialOrder::leading_coeff(const Polynomial& p) const {
  return p.coeff(leading_monomial(p));
}

}  // namespace pclab
