#include "pclab/groebner.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "pclab/errors.hpp"

namespace pclab {

namespace {

bool intersects(const Monomial& a, const Monomial& b) {
  auto i = a.vars().begin();
  auto j = b.vars().begin();
  while (i != a.vars().end() && j != b.vars().end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else
      return true;
  }
  return false;
}

}  // namespace

GroebnerBasis::GroebnerBasis(std::vector<Polynomial> generators, MonomialOrder ord)
    : GroebnerBasis(std::move(generators), std::move(ord),
                    Field::rationals()) {}

GroebnerBasis::GroebnerBasis(std::vector<Polynomial> generators, MonomialOrder ord, Field field)
    : ord_(std::move(ord)), field_(field), generators_(std::move(generators)) {
  if (!generators_.empty()) field_ = generators_[0].field();
  for (const auto& g : generators_)
    require(g.field() == field_, "groebner generators over mixed fields");
  run_buchberger();
}

Polynomial GroebnerBasis::reduce_against(const Polynomial& p,
                                         const std::vector<Polynomial>& basis,
                                         const std::vector<Monomial>& leads,
                                         size_t skip) const {
  Polynomial remainder(field_);
  Polynomial h = p;
  while (!h.is_zero()) {
    Monomial t = ord_.leading_monomial(h);
    Scalar c = h.coeff(t);
    size_t hit = basis.size();
    for (size_t i = 0; i < basis.size(); ++i) {
      if (i != skip && leads[i].divides(t)) {
        hit = i;
        break;
      }
    }
    if (hit == basis.size()) {
      remainder = remainder.add(Polynomial::monomial(field_, t).scale(c));
      h = h.sub(Polynomial::monomial(field_, t).scale(c));
    } else {
      h = h.sub(basis[hit].times_monomial(t.quotient_by(leads[hit]), c));
    }
  }
  return remainder;
}

void GroebnerBasis::run_buchberger() {
  std::vector<Polynomial> elems;
  std::vector<Monomial> leads;

  struct PairCmp {
    const MonomialOrder* ord;
    bool operator()(const std::tuple<Monomial, size_t, size_t>& a,
                    const std::tuple<Monomial, size_t, size_t>& b) const {
      Cmp c = ord->compare(std::get<0>(a), std::get<0>(b));
      if (c != Cmp::equal) return c == Cmp::less;
      if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
      return std::get<2>(a) < std::get<2>(b);
    }
  };
  std::set<std::tuple<Monomial, size_t, size_t>, PairCmp> pairs{PairCmp{&ord_}};
  std::deque<Polynomial> work(generators_.begin(), generators_.end());

  auto absorb = [&](const Polynomial& cand) {
    Polynomial r = reduce_against(cand, elems, leads, elems.size());
    if (r.is_zero()) return;
    Monomial lm = ord_.leading_monomial(r);
    r = r.scale(field_.inv(r.coeff(lm)));
    size_t idx = elems.size();
    for (size_t i = 0; i < idx; ++i) {
      // coprime leading monomials: S-pair reduces to zero, skip
      if (intersects(leads[i], lm)) pairs.insert({leads[i].times(lm), i, idx});
    }
    // S-pairs with the Boolean axiom of each leading variable collapse to x*f
    for (Variable x : lm.vars()) work.push_back(r.times_variable(x));
    elems.push_back(std::move(r));
    leads.push_back(std::move(lm));
  };

  while (!work.empty() || !pairs.empty()) {
    if (!work.empty()) {
      Polynomial cand = std::move(work.front());
      work.pop_front();
      absorb(cand);
      continue;
    }
    auto [lcm, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    Polynomial s = elems[i]
                       .times_monomial(lcm.quotient_by(leads[i]), field_.one())
                       .sub(elems[j].times_monomial(lcm.quotient_by(leads[j]), field_.one()));
    absorb(s);
  }

  // minimal basis: drop elements whose lead is divisible by another lead
  std::vector<size_t> keep;
  for (size_t i = 0; i < elems.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < elems.size() && !redundant; ++j) {
      if (i == j) continue;
      if (leads[j].divides(leads[i]) && !(leads[i] == leads[j] && j > i)) redundant = true;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<Polynomial> minimal;
  std::vector<Monomial> minimal_leads;
  for (size_t i : keep) {
    minimal.push_back(elems[i]);
    minimal_leads.push_back(leads[i]);
  }

  // interreduce tails until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      Polynomial tail = minimal[i].sub(Polynomial::monomial(field_, minimal_leads[i]));
      Polynomial red = reduce_against(tail, minimal, minimal_leads, i);
      Polynomial next = Polynomial::monomial(field_, minimal_leads[i]).add(red);
      if (next != minimal[i]) {
        minimal[i] = std::move(next);
        changed = true;
      }
    }
  }

  std::vector<size_t> idx(minimal.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return ord_.compare(minimal_leads[a], minimal_leads[b]) == Cmp::less;
  });
  for (size_t i : idx) {
    basis_.push_back(minimal[i]);
    leads_.push_back(minimal_leads[i]);
  }
}

Polynomial GroebnerBasis::reduce(const Polynomial& p) const {
  require(p.field() == field_, "reduce over a different field");
  return reduce_against(p, basis_, leads_, basis_.size());
}

bool GroebnerBasis::is_reducible(const Monomial& m) const {
  for (const auto& lm : leads_)
    if (lm.divides(m)) return true;
  return false;
}

CommonRoots common_roots(const std::vector<Polynomial>& generators, uint32_t variable_budget) {
  return common_roots(generators, {}, variable_budget);
}

CommonRoots common_roots(const std::vector<Polynomial>& generators,
                         const std::vector<Variable>& extra_variables,
                         uint32_t variable_budget) {
  CommonRoots result;
  result.variables = extra_variables;
  for (const auto& g : generators) {
    auto vs = g.variables();
    result.variables.insert(result.variables.end(), vs.begin(), vs.end());
  }
  std::sort(result.variables.begin(), result.variables.end());
  result.variables.erase(std::unique(result.variables.begin(), result.variables.end()),
                         result.variables.end());
  size_t n = result.variables.size();
  if (n > variable_budget)
    throw ResourceError("common-root enumeration over " + std::to_string(n) +
                        " variables exceeds the budget of " + std::to_string(variable_budget));

  // term masks per generator
  std::vector<std::vector<std::pair<uint64_t, Scalar>>> gens;
  for (const auto& g : generators) {
    std::vector<std::pair<uint64_t, Scalar>> terms;
    for (const auto& t : g.terms()) {
      uint64_t mask = 0;
      for (const auto& v : t.mono.vars()) {
        size_t pos = std::lower_bound(result.variables.begin(), result.variables.end(), v) -
                     result.variables.begin();
        mask |= 1ULL << pos;
      }
      terms.push_back({mask, t.coeff});
    }
    gens.push_back(std::move(terms));
  }

  const Field f = generators.empty() ? Field::rationals() : generators[0].field();
  for (uint64_t a = 0; a < (1ULL << n); ++a) {
    bool root = true;
    for (size_t gi = 0; gi < gens.size() && root; ++gi) {
      Scalar val = f.zero();
      for (const auto& [mask, coeff] : gens[gi])
        if ((mask & a) == mask) val = f.add(val, coeff);
      if (!f.is_zero(val)) root = false;
    }
    if (root) result.roots.push_back(a);
  }
  return result;
}

}  // namespace pclab
