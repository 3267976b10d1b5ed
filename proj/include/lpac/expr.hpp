/*------------------------------------------------------------------------*/
/*! \file expr.hpp
    \brief raw polynomial expression trees with arbitrary exponents

  An Expr keeps the input expression as written, before any reduction.
  normalize() maps it to the multilinear normal form; eval() computes the
  unreduced value at a point, which serves as the independent oracle for
  the reduction.

  Part of lpacheck
  Copyright(C) 2026 lpacheck developers
*/
/*------------------------------------------------------------------------*/
#pragma once

#include <cstdint>
#include <memory>
#include <set>

#include "lpac/polynomial.hpp"

namespace lpac {

class Expr {
 public:
  static Expr constant(Rational c);
  static Expr variable(Var v);
  static Expr add(Expr a, Expr b);
  static Expr sub(Expr a, Expr b);
  static Expr mul(Expr a, Expr b);
  static Expr pow(Expr base, std::uint64_t exponent);
  static Expr neg(Expr a);

  /// The unique multilinear normal form: exponents >= 1 collapse to 1,
  /// like terms merge, zero terms drop, canonical ordering applies.
  Polynomial normalize() const;

  /// Unreduced value at a point (x^e evaluated literally). Throws
  /// UnmappedVariableError for variables outside the assignment.
  Rational eval(const std::map<Var, Rational>& assignment) const;

  std::set<Var> vars() const;

 private:
  enum class Kind { Constant, Variable, Add, Sub, Mul, Pow, Neg };

  struct Node {
    Kind kind;
    Rational value;           // Constant
    Var var;                  // Variable
    std::shared_ptr<const Node> lhs, rhs;
    std::uint64_t exponent = 0;  // Pow
  };

  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace lpac
