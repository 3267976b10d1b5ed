/*------------------------------------------------------------------------*/
/*! \file polynomial.cpp
    \brief sparse multilinear polynomial arithmetic

  Part of lpacheck
  Copyright(C) 2026 lpacheck developers
*/
/*------------------------------------------------------------------------*/
#include "lpac/polynomial.hpp"

#include <algorithm>

namespace lpac {

Rational make_rational(const std::string& num, const std::string& den) {
  if (den.find_first_not_of('0') == std::string::npos)
    throw std::invalid_argument("zero denominator");
  Rational q(num + "/" + den);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

/*------------------------------------------------------------------------*/

Monomial Monomial::of(std::vector<Var> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  Monomial m;
  m.vars_ = std::move(vars);
  return m;
}

bool Monomial::contains(const Var& v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.vars_.reserve(a.vars_.size() + b.vars_.size());
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(),
                 b.vars_.end(), std::back_inserter(m.vars_));
  return m;
}

bool monomial_precedes(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  return a.vars() < b.vars();
}

/*------------------------------------------------------------------------*/

Polynomial Polynomial::constant(Rational c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({std::move(c), Monomial()});
  return p;
}

Polynomial Polynomial::variable(Var v) {
  Polynomial p;
  p.terms_.push_back({Rational(1), Monomial(std::move(v))});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::map<Monomial, Rational, decltype(&monomial_precedes)> acc(
      &monomial_precedes);
  for (auto& t : terms) acc[std::move(t.mono)] += t.coeff;
  Polynomial p;
  for (auto& [mono, coeff] : acc)
    if (coeff != 0) p.terms_.push_back({std::move(coeff), mono});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_unit() &&
         terms_[0].coeff == 1;
}

std::size_t Polynomial::degree() const {
  // Terms are sorted by descending degree.
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

std::set<Var> Polynomial::vars() const {
  std::set<Var> out;
  collect_vars(out);
  return out;
}

void Polynomial::collect_vars(std::set<Var>& out) const {
  for (const auto& t : terms_)
    out.insert(t.mono.vars().begin(), t.mono.vars().end());
}

bool Polynomial::mentions(const Var& v) const {
  for (const auto& t : terms_)
    if (t.mono.contains(v)) return true;
  return false;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  // Merge of two canonically sorted term sequences.
  Polynomial out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() && ib != b.terms_.end()) {
    if (ia->mono == ib->mono) {
      Rational c = ia->coeff + ib->coeff;
      if (c != 0) out.terms_.push_back({std::move(c), ia->mono});
      ++ia, ++ib;
    } else if (monomial_precedes(ia->mono, ib->mono)) {
      out.terms_.push_back(*ia++);
    } else {
      out.terms_.push_back(*ib++);
    }
  }
  out.terms_.insert(out.terms_.end(), ia, a.terms_.end());
  out.terms_.insert(out.terms_.end(), ib, b.terms_.end());
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::map<Monomial, Rational, decltype(&monomial_precedes)> acc(
      &monomial_precedes);
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_)
      acc[ta.mono * tb.mono] += ta.coeff * tb.coeff;
  Polynomial out;
  for (auto& [mono, coeff] : acc)
    if (coeff != 0) out.terms_.push_back({std::move(coeff), mono});
  return out;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Rational Polynomial::eval(const std::map<Var, Rational>& assignment) const {
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational prod = t.coeff;
    for (const auto& v : t.mono.vars()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) throw UnmappedVariableError(v);
      prod *= it->second;
    }
    sum += prod;
  }
  return sum;
}

/*------------------------------------------------------------------------*/

bool Substitution::set(Var v, Polynomial image) {
  if (index_.count(v)) return false;
  index_.emplace(v, entries_.size());
  entries_.emplace_back(std::move(v), std::move(image));
  return true;
}

const Polynomial& Substitution::image(const Var& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw UnmappedVariableError(v);
  return entries_[it->second].second;
}

Substitution Substitution::identity_on(const std::set<Var>& vars) {
  Substitution phi;
  for (const auto& v : vars) phi.set(v, Polynomial::variable(v));
  return phi;
}

Polynomial substitute(const Polynomial& p, const Substitution& phi) {
  Polynomial out;
  for (const auto& t : p.terms()) {
    Polynomial prod = Polynomial::constant(t.coeff);
    for (const auto& v : t.mono.vars()) prod = prod * phi.image(v);
    out = out + prod;
  }
  return out;
}

Polynomial linear_combination(
    const std::vector<std::pair<Polynomial, Polynomial>>& parts) {
  if (parts.empty())
    throw std::invalid_argument("linear_combination: empty part sequence");
  Polynomial sum;
  for (const auto& [coeff, operand] : parts) sum = sum + coeff * operand;
  return sum;
}

bool is_boolean_valued(const Polynomial& q) {
  return (q * q - q).is_zero();
}

bool equal_mod_boolean(const Polynomial& p, const Polynomial& q) {
  // Both arguments are canonical multilinear normal forms.
  return p == q;
}

}  // namespace lpac
