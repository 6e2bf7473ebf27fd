#include "pclab/polynomial.hpp"

#include <algorithm>

#include "pclab/errors.hpp"

namespace pclab {

Monomial::Monomial(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

bool Monomial::contains(Variable v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

bool Monomial::divides(const Monomial& m) const {
  return std::includes(m.vars_.begin(), m.vars_.end(), vars_.begin(), vars_.end());
}

Monomial Monomial::times(const Monomial& m) const {
  std::vector<Variable> out;
  out.reserve(vars_.size() + m.vars_.size());
  std::set_union(vars_.begin(), vars_.end(), m.vars_.begin(), m.vars_.end(),
                 std::back_inserter(out));
  Monomial r;
  r.vars_ = std::move(out);
  return r;
}

Monomial Monomial::times(Variable v) const {
  Monomial r = *this;
  auto it = std::lower_bound(r.vars_.begin(), r.vars_.end(), v);
  if (it == r.vars_.end() || *it != v) r.vars_.insert(it, v);
  return r;
}

Monomial Monomial::quotient_by(const Monomial& m) const {
  check_invariant(m.divides(*this), "monomial quotient by non-divisor");
  std::vector<Variable> out;
  std::set_difference(vars_.begin(), vars_.end(), m.vars_.begin(), m.vars_.end(),
                      std::back_inserter(out));
  Monomial r;
  r.vars_ = std::move(out);
  return r;
}

std::string Monomial::to_string() const {
  if (vars_.empty()) return "1";
  std::string s;
  for (const auto& v : vars_) {
    if (!s.empty()) s += "*";
    s += "x[" + std::to_string(v.vertex) + "," + std::to_string(v.colour) + "]";
  }
  return s;
}

Polynomial::Polynomial(Field f, std::vector<Term> terms) : field_(f) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = field_.add(terms_.back().coeff, t.coeff);
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [&](const Term& t) { return field_.is_zero(t.coeff); });
}

Polynomial Polynomial::constant(Field f, const Scalar& c) {
  Polynomial p(f);
  if (!f.is_zero(c)) p.terms_.push_back({Monomial::unit(), c});
  return p;
}

Polynomial Polynomial::monomial(Field f, const Monomial& m) {
  Polynomial p(f);
  p.terms_.push_back({m, f.one()});
  return p;
}

size_t Polynomial::degree() const {
  size_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Scalar Polynomial::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.mono < x; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return field_.zero();
}

std::vector<Variable> Polynomial::variables() const {
  std::vector<Variable> out;
  for (const auto& t : terms_)
    out.insert(out.end(), t.mono.vars().begin(), t.mono.vars().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Polynomial::assert_same_field(const Polynomial& q) const {
  require(field_ == q.field_,
          "mixed fields: " + field_.describe() + " vs " + q.field_.describe());
}

Polynomial Polynomial::add(const Polynomial& q) const {
  assert_same_field(q);
  Polynomial out(field_);
  out.terms_.reserve(terms_.size() + q.terms_.size());
  auto a = terms_.begin(), b = q.terms_.begin();
  while (a != terms_.end() || b != q.terms_.end()) {
    if (b == q.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->mono < a->mono) {
      out.terms_.push_back(*b++);
    } else {
      Scalar c = field_.add(a->coeff, b->coeff);
      if (!field_.is_zero(c)) out.terms_.push_back({a->mono, c});
      ++a;
      ++b;
    }
  }
  return out;
}

Polynomial Polynomial::sub(const Polynomial& q) const { return add(q.negate()); }

Polynomial Polynomial::scale(const Scalar& a) const {
  Polynomial out(field_);
  if (field_.is_zero(a)) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar c = field_.mul(t.coeff, a);
    if (!field_.is_zero(c)) out.terms_.push_back({t.mono, c});
  }
  return out;
}

Polynomial Polynomial::negate() const {
  Polynomial out(field_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono, field_.neg(t.coeff)});
  return out;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Scalar& a) const {
  std::vector<Term> acc;
  acc.reserve(terms_.size());
  for (const auto& t : terms_) acc.push_back({t.mono.times(m), field_.mul(t.coeff, a)});
  return Polynomial(field_, std::move(acc));
}

Polynomial Polynomial::multiply(const Polynomial& q) const {
  assert_same_field(q);
  std::vector<Term> acc;
  acc.reserve(terms_.size() * q.terms_.size());
  for (const auto& t : terms_)
    for (const auto& u : q.terms_)
      acc.push_back({t.mono.times(u.mono), field_.mul(t.coeff, u.coeff)});
  return Polynomial(field_, std::move(acc));
}

Scalar Polynomial::evaluate(const std::function<std::optional<bool>(Variable)>& assignment) const {
  Scalar acc = field_.zero();
  for (const auto& t : terms_) {
    bool all_one = true;
    for (const auto& v : t.mono.vars()) {
      auto val = assignment(v);
      require(val.has_value(), "evaluation misses variable " + Monomial::var(v).to_string());
      if (!*val) {
        all_one = false;
        break;
      }
    }
    if (all_one) acc = field_.add(acc, t.coeff);
  }
  return acc;
}

Polynomial Polynomial::substitute(const std::map<Variable, Polynomial>& rho) const {
  for (const auto& [v, image] : rho)
    require(image.field() == field_, "substitution image over a different field");
  Polynomial out(field_);
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(field_, t.coeff);
    Monomial kept;
    for (const auto& v : t.mono.vars()) {
      auto it = rho.find(v);
      if (it == rho.end()) {
        kept = kept.times(v);
      } else {
        prod = prod.multiply(it->second);
        if (prod.is_zero()) break;
      }
    }
    out = out.add(prod.times_monomial(kept, field_.one()));
  }
  return out;
}

bool Polynomial::operator==(const Polynomial& q) const {
  if (!(field_ == q.field_) || terms_.size() != q.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == q.terms_[i].mono)) return false;
    if (!field_.eq(terms_[i].coeff, q.terms_[i].coeff)) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    s += field_.to_string(t.coeff);
    if (!t.mono.is_unit()) s += "*" + t.mono.to_string();
  }
  return s;
}

}  // namespace pclab
