/*------------------------------------------------------------------------*/
/*! \file polynomial.hpp
    \brief sparse multilinear polynomials over the rationals

  All arithmetic reduces eagerly modulo the Boolean value polynomials
  B(X) = {x^2 - x}, so every stored polynomial is the unique multilinear
  normal form of its residue class. Two polynomials are equal modulo
  <B(X)> iff their term sequences are identical.

  Part of lpacheck
  Copyright(C) 2026 lpacheck developers
*/
/*------------------------------------------------------------------------*/
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lpac/rational.hpp"

namespace lpac {

/// A variable. Names compare by byte-wise lexicographic order; this is the
/// global variable order used everywhere.
struct Var {
  std::string name;

  auto operator<=>(const Var&) const = default;
};

/// Raised when a substitution or evaluation point is consulted for a
/// variable outside its declared domain.
class UnmappedVariableError : public std::runtime_error {
 public:
  explicit UnmappedVariableError(const Var& v)
      : std::runtime_error("unmapped variable: " + v.name), var(v) {}

  Var var;
};

/// A multilinear monomial: a strictly increasing sequence of variables,
/// each with implicit exponent 1. The empty sequence is the constant
/// monomial 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Var v) : vars_{std::move(v)} {}

  /// Builds from an arbitrary variable list (sorts, drops duplicates).
  static Monomial of(std::vector<Var> vars);

  bool is_unit() const { return vars_.empty(); }
  std::size_t degree() const { return vars_.size(); }
  const std::vector<Var>& vars() const { return vars_; }
  bool contains(const Var& v) const;

  /// Multilinear product: the union of the two variable sets (x * x = x).
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Var> vars_;
};

/// Canonical term order: true iff a precedes b, i.e. a has higher total
/// degree, or equal degree and a lexicographically smaller variable
/// sequence. Leading terms of highest degree come first.
bool monomial_precedes(const Monomial& a, const Monomial& b);

struct Term {
  Rational coeff;
  Monomial mono;

  bool operator==(const Term&) const = default;
};

/// Sparse multilinear polynomial in canonical form: terms strictly ordered
/// by monomial_precedes, no zero coefficients. The zero polynomial is the
/// empty term sequence. Values are immutable after construction.
class Polynomial {
 public:
  Polynomial() = default;  // zero

  static Polynomial constant(Rational c);
  static Polynomial variable(Var v);
  /// Normalizes an arbitrary term list: merges like monomials, drops
  /// zeros, sorts canonically.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The constant 1 test, used for compact serialization of coefficients.
  bool is_one() const;

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t degree() const;

  std::set<Var> vars() const;
  void collect_vars(std::set<Var>& out) const;
  bool mentions(const Var& v) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Multilinear power by binary exponentiation; e = 0 yields 1.
  Polynomial pow(std::uint64_t e) const;

  /// Exact value at a point. The assignment must cover every variable of
  /// the polynomial; otherwise UnmappedVariableError.
  Rational eval(const std::map<Var, Rational>& assignment) const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<Term> terms_;
};

/// A finite map Var -> Polynomial, total on its declared domain. Looking
/// up a variable outside the domain throws; there is no implicit identity.
/// Entries remember declaration order for serialization.
class Substitution {
 public:
  Substitution() = default;

  /// Adds an entry. Returns false if the variable is already mapped
  /// (the existing image is kept).
  bool set(Var v, Polynomial image);

  bool contains(const Var& v) const { return index_.count(v) != 0; }
  const Polynomial& image(const Var& v) const;
  const std::vector<std::pair<Var, Polynomial>>& entries() const {
    return entries_;
  }
  std::size_t size() const { return entries_.size(); }

  static Substitution identity_on(const std::set<Var>& vars);

  bool operator==(const Substitution& other) const {
    return entries_ == other.entries_;
  }

 private:
  std::vector<std::pair<Var, Polynomial>> entries_;
  std::map<Var, std::size_t> index_;
};

/// Replaces every variable of p by its image under phi and renormalizes.
/// phi must cover Var(p).
Polynomial substitute(const Polynomial& p, const Substitution& phi);

/// normalize(sum of coeff_k * operand_k); the parts sequence must be
/// nonempty. Products are reduced multilinearly during accumulation.
Polynomial linear_combination(
    const std::vector<std::pair<Polynomial, Polynomial>>& parts);

/// True iff q^2 - q lies in <B(X)>, i.e. q only takes values in {0, 1} on
/// the Boolean cube.
bool is_boolean_valued(const Polynomial& q);

/// Canonical-form comparison: p and q represent the same residue class
/// modulo <B(X)>.
bool equal_mod_boolean(const Polynomial& p, const Polynomial& q);

}  // namespace lpac
