// Shared helpers for the test suites: fixture loading, Boolean-cube
// enumeration, and seeded random generators.
#pragma once

#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lpac/expr.hpp"
#include "lpac/polynomial.hpp"

namespace lpt {

inline std::string fixture_path(const std::string& name) {
  return std::string(LPAC_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Calls fn with every 0/1 assignment of the given variables.
inline void for_each_cube_point(
    const std::vector<lpac::Var>& vars,
    const std::function<void(const std::map<lpac::Var, lpac::Rational>&)>& fn) {
  const std::size_t n = vars.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::map<lpac::Var, lpac::Rational> point;
    for (std::size_t i = 0; i < n; ++i)
      point[vars[i]] = lpac::Rational((bits >> i) & 1);
    fn(point);
  }
}

inline bool cube_equal(const lpac::Polynomial& p, const lpac::Polynomial& q) {
  std::set<lpac::Var> var_set = p.vars();
  q.collect_vars(var_set);
  std::vector<lpac::Var> vars(var_set.begin(), var_set.end());
  bool equal = true;
  for_each_cube_point(vars, [&](const auto& point) {
    if (p.eval(point) != q.eval(point)) equal = false;
  });
  return equal;
}

/// Random multilinear polynomial with integer coefficients in
/// [-max_coeff, max_coeff] over a subset of the given variables.
inline lpac::Polynomial random_polynomial(std::mt19937& rng,
                                          const std::vector<lpac::Var>& vars,
                                          int max_terms = 6,
                                          int max_coeff = 5) {
  std::uniform_int_distribution<int> term_count(0, max_terms);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<lpac::Term> terms;
  const int k = term_count(rng);
  for (int t = 0; t < k; ++t) {
    std::vector<lpac::Var> mono;
    for (const auto& v : vars)
      if (coin(rng)) mono.push_back(v);
    terms.push_back(
        {lpac::Rational(coeff(rng)), lpac::Monomial::of(std::move(mono))});
  }
  return lpac::Polynomial::from_terms(std::move(terms));
}

inline bool coin_flip(std::mt19937& rng) {
  return std::uniform_int_distribution<int>(0, 1)(rng) == 1;
}

/// Random raw expression tree (with exponents and nested arithmetic).
inline lpac::Expr random_expr(std::mt19937& rng,
                              const std::vector<lpac::Var>& vars, int depth) {
  std::uniform_int_distribution<int> leaf(0, 3);
  std::uniform_int_distribution<int> node(0, 4);
  std::uniform_int_distribution<int> small(-4, 4);
  std::uniform_int_distribution<std::size_t> var_pick(0, vars.size() - 1);
  std::uniform_int_distribution<int> exponent(0, 4);
  if (depth <= 0 || leaf(rng) == 0) {
    if (coin_flip(rng))
      return lpac::Expr::variable(vars[var_pick(rng)]);
    return lpac::Expr::constant(lpac::Rational(small(rng)));
  }
  switch (node(rng)) {
    case 0:
      return lpac::Expr::add(random_expr(rng, vars, depth - 1),
                             random_expr(rng, vars, depth - 1));
    case 1:
      return lpac::Expr::sub(random_expr(rng, vars, depth - 1),
                             random_expr(rng, vars, depth - 1));
    case 2:
      return lpac::Expr::mul(random_expr(rng, vars, depth - 1),
                             random_expr(rng, vars, depth - 1));
    case 3:
      return lpac::Expr::pow(random_expr(rng, vars, depth - 1),
                             exponent(rng));
    default:
      return lpac::Expr::neg(random_expr(rng, vars, depth - 1));
  }
}

/// Turns a canonical polynomial back into a raw expression.
inline lpac::Expr poly_to_expr(const lpac::Polynomial& p) {
  lpac::Expr acc = lpac::Expr::constant(lpac::Rational(0));
  for (const auto& t : p.terms()) {
    lpac::Expr term = lpac::Expr::constant(t.coeff);
    for (const auto& v : t.mono.vars())
      term = lpac::Expr::mul(term, lpac::Expr::variable(v));
    acc = lpac::Expr::add(acc, term);
  }
  return acc;
}

inline std::vector<lpac::Var> make_vars(int n) {
  std::vector<lpac::Var> vars;
  for (int i = 0; i < n; ++i)
    vars.push_back(lpac::Var{std::string(1, static_cast<char>('a' + i))});
  return vars;
}

}  // namespace lpt
