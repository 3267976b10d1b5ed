/*------------------------------------------------------------------------*/
/*! \file expr.cpp
    \brief expression tree normalization and unreduced evaluation

  Part of lpacheck
  Copyright(C) 2026 lpacheck developers
*/
/*------------------------------------------------------------------------*/
#include "lpac/expr.hpp"

namespace lpac {

Expr Expr::constant(Rational c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->value = std::move(c);
  return Expr(std::move(n));
}

Expr Expr::variable(Var v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->var = std::move(v);
  return Expr(std::move(n));
}

Expr Expr::add(Expr a, Expr b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Add;
  n->lhs = a.node_;
  n->rhs = b.node_;
  return Expr(std::move(n));
}

Expr Expr::sub(Expr a, Expr b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sub;
  n->lhs = a.node_;
  n->rhs = b.node_;
  return Expr(std::move(n));
}

Expr Expr::mul(Expr a, Expr b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Mul;
  n->lhs = a.node_;
  n->rhs = b.node_;
  return Expr(std::move(n));
}

Expr Expr::pow(Expr base, std::uint64_t exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->lhs = base.node_;
  n->exponent = exponent;
  return Expr(std::move(n));
}

Expr Expr::neg(Expr a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Neg;
  n->lhs = a.node_;
  return Expr(std::move(n));
}

namespace {

Rational rational_pow(const Rational& base, std::uint64_t e) {
  Rational result(1);
  Rational b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

}  // namespace

Polynomial Expr::normalize() const {
  struct Walk {
    Polynomial operator()(const Node& n) const {
      switch (n.kind) {
        case Kind::Constant:
          return Polynomial::constant(n.value);
        case Kind::Variable:
          return Polynomial::variable(n.var);
        case Kind::Add:
          return (*this)(*n.lhs) + (*this)(*n.rhs);
        case Kind::Sub:
          return (*this)(*n.lhs) - (*this)(*n.rhs);
        case Kind::Mul:
          return (*this)(*n.lhs) * (*this)(*n.rhs);
        case Kind::Pow:
          return (*this)(*n.lhs).pow(n.exponent);
        case Kind::Neg:
          return -(*this)(*n.lhs);
      }
      return Polynomial();
    }
  };
  return Walk{}(*node_);
}

Rational Expr::eval(const std::map<Var, Rational>& assignment) const {
  struct Walk {
    const std::map<Var, Rational>& point;

    Rational operator()(const Node& n) const {
      switch (n.kind) {
        case Kind::Constant:
          return n.value;
        case Kind::Variable: {
          auto it = point.find(n.var);
          if (it == point.end()) throw UnmappedVariableError(n.var);
          return it->second;
        }
        case Kind::Add:
          return (*this)(*n.lhs) + (*this)(*n.rhs);
        case Kind::Sub:
          return (*this)(*n.lhs) - (*this)(*n.rhs);
        case Kind::Mul:
          return (*this)(*n.lhs) * (*this)(*n.rhs);
        case Kind::Pow:
          return rational_pow((*this)(*n.lhs), n.exponent);
        case Kind::Neg:
          return -(*this)(*n.lhs);
      }
      return Rational(0);
    }
  };
  return Walk{assignment}(*node_);
}

std::set<Var> Expr::vars() const {
  struct Walk {
    std::set<Var>& out;

    void operator()(const Node& n) const {
      if (n.kind == Kind::Variable) {
        out.insert(n.var);
        return;
      }
      if (n.lhs) (*this)(*n.lhs);
      if (n.rhs) (*this)(*n.rhs);
    }
  };
  std::set<Var> out;
  Walk{out}(*node_);
  return out;
}

}  // namespace lpac
