#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpac/parser.hpp"
#include "lpac/serialize.hpp"
#include "test_util.hpp"

using namespace lpac;

namespace {

Expr one_minus(const Var& v) {
  return Expr::sub(Expr::constant(Rational(1)), Expr::variable(v));
}

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(make_rational("4", "6") == Rational(2, 3));
  CHECK(rational_to_string(make_rational("4", "6")) == "2/3");
  CHECK(rational_to_string(Rational(-7)) == "-7");
  CHECK_THROWS_AS(make_rational("1", "0"), std::invalid_argument);
}

TEST_CASE("canonical term order is graded, ties by variable sequence") {
  // Highest degree first, alphabetical within a degree.
  CHECK(poly_to_string(parse_polynomial("y+x")) == "x+y");
  CHECK(poly_to_string(parse_polynomial("x+x*y")) == "x*y+x");
  CHECK(poly_to_string(parse_polynomial("1+y*z+y")) == "y*z+y+1");
  CHECK(poly_to_string(parse_polynomial("z+x")) == "x+z");
}

TEST_CASE("normalize collapses exponents and merges like terms") {
  CHECK(parse_polynomial("x^2-x").is_zero());

  const Var y{"y"};
  const Expr e = Expr::sub(Expr::pow(one_minus(y), 2), one_minus(y));
  CHECK(e.normalize().is_zero());  // (1-y)^2 - (1-y) = y^2 - y

  CHECK(poly_to_string(parse_polynomial("x^3*y^2+x*y")) == "2*x*y");
  CHECK(parse_polynomial("x*y-y*x").is_zero());
  CHECK(poly_to_string(parse_polynomial("x^0")) == "1");
}

TEST_CASE("linear_combination matches the worked examples") {
  auto poly = [](const char* s) { return parse_polynomial(s); };

  // p1 + 2 p2 over the pattern variables.
  CHECK(linear_combination({{poly("1"), poly("v1-2*v2")},
                            {poly("2"), poly("v2-v3")}}) == poly("v1-2*v3"));
  // The closing combination of the first example.
  CHECK(linear_combination({{poly("1"), poly("a-x+1")},
                            {poly("1"), poly("x-2*z")},
                            {poly("-1"), poly("a-2*z")}}) == poly("1"));
  // The resolution combination with polynomial coefficients.
  CHECK(linear_combination({{poly("w3"), poly("v1*v2")},
                            {poly("v1"), poly("v2*v3-v2-v3+1")},
                            {poly("v1*v2-v1"), poly("-w3+1-v3")}}) ==
        poly("v1*w3"));
  // Identity combination.
  const Polynomial p = poly("3*x*y-z+1/2");
  CHECK(linear_combination({{poly("1"), p}}) == p);
  CHECK_THROWS_AS(linear_combination({}), std::invalid_argument);
}

TEST_CASE("substitute replaces variables and renormalizes") {
  auto poly = [](const char* s) { return parse_polynomial(s); };
  Substitution phi;
  phi.set(Var{"v1"}, poly("x"));
  phi.set(Var{"v2"}, poly("1-y"));
  phi.set(Var{"v3"}, poly("z"));

  CHECK(substitute(poly("v1-2*v2"), phi) == poly("x+2*y-2"));
  CHECK(substitute(poly("v2-v3"), phi) == poly("-y-z+1"));

  const Polynomial p = poly("x*y-3*z+2");
  CHECK(substitute(p, Substitution::identity_on(p.vars())) == p);

  Substitution partial;
  partial.set(Var{"v1"}, poly("x"));
  CHECK_THROWS_AS(substitute(poly("v1+v2"), partial), UnmappedVariableError);
}

TEST_CASE("is_boolean_valued") {
  auto poly = [](const char* s) { return parse_polynomial(s); };
  CHECK(is_boolean_valued(poly("1-y")));
  CHECK(is_boolean_valued(poly("x")));
  CHECK(is_boolean_valued(poly("x*y")));

  // Brute-force derivation for x+y: (x+y)^2 - (x+y) takes value 2 at (1,1).
  const Expr raw = parse_polynomial_expr("x^2+2*x*y+y^2-x-y");
  std::map<Var, Rational> point{{Var{"x"}, Rational(1)},
                                {Var{"y"}, Rational(1)}};
  CHECK(raw.eval(point) == Rational(2));
  CHECK_FALSE(is_boolean_valued(poly("x+y")));
}

TEST_CASE("equal_mod_boolean") {
  auto poly = [](const char* s) { return parse_polynomial(s); };
  CHECK(equal_mod_boolean(poly("x^2"), poly("x")));
  Substitution phi;
  phi.set(Var{"v1"}, poly("x"));
  phi.set(Var{"v2"}, poly("1-y"));
  CHECK(equal_mod_boolean(poly("x+2*y-2"), substitute(poly("v1-2*v2"), phi)));
  CHECK_FALSE(equal_mod_boolean(poly("x-2*z"), poly("a-2*z")));
}

TEST_CASE("eval") {
  auto poly = [](const char* s) { return parse_polynomial(s); };
  CHECK(poly("x-2*z").eval({{Var{"x"}, Rational(1)}, {Var{"z"}, Rational(0)}}) ==
        Rational(1));
  CHECK(Polynomial().eval({}) == Rational(0));
  CHECK(poly("v1*w3").eval(
            {{Var{"v1"}, Rational(1)}, {Var{"w3"}, Rational(1)}}) ==
        Rational(1));
  CHECK_THROWS_AS(poly("x").eval({}), UnmappedVariableError);
}

TEST_CASE("normalization is idempotent and multilinear") {
  std::mt19937 rng(20260809);
  const auto vars = lpt::make_vars(5);
  for (int round = 0; round < 200; ++round) {
    const Expr e = lpt::random_expr(rng, vars, 4);
    const Polynomial p = e.normalize();
    CHECK(lpt::poly_to_expr(p).normalize() == p);
    for (const auto& t : p.terms()) {
      CHECK(t.coeff != 0);
      for (std::size_t i = 1; i < t.mono.vars().size(); ++i)
        CHECK(t.mono.vars()[i - 1] < t.mono.vars()[i]);
    }
  }
}

TEST_CASE("reduction agrees with the unreduced expression on the cube") {
  std::mt19937 rng(7);
  const auto vars = lpt::make_vars(5);
  for (int round = 0; round < 120; ++round) {
    const Expr e = lpt::random_expr(rng, vars, 4);
    const Polynomial p = e.normalize();
    lpt::for_each_cube_point(vars, [&](const auto& point) {
      CHECK(e.eval(point) == p.eval(point));
    });
  }
}

TEST_CASE("canonical equality is exactly cube equality") {
  std::mt19937 rng(99);
  const auto vars = lpt::make_vars(6);
  for (int round = 0; round < 100; ++round) {
    const Polynomial p = lpt::random_polynomial(rng, vars);
    const Polynomial q = lpt::random_polynomial(rng, vars);
    CHECK(equal_mod_boolean(p, q) == lpt::cube_equal(p, q));

    // A Boolean-zero perturbation never changes the class.
    Expr perturbed = lpt::poly_to_expr(p);
    for (const auto& v : vars)
      if (lpt::coin_flip(rng))
        perturbed = Expr::add(
            perturbed,
            Expr::mul(Expr::sub(Expr::pow(Expr::variable(v), 2),
                                Expr::variable(v)),
                      lpt::poly_to_expr(lpt::random_polynomial(rng, vars))));
    CHECK(equal_mod_boolean(p, perturbed.normalize()));
  }
}

TEST_CASE("substitution commutes with reduction for Boolean-valued images") {
  std::mt19937 rng(31337);
  const auto vars = lpt::make_vars(4);
  const auto img_vars = lpt::make_vars(3);
  for (int round = 0; round < 80; ++round) {
    const Expr e = lpt::random_expr(rng, vars, 3);
    Substitution phi;
    std::vector<std::pair<Var, Expr>> raw_images;
    for (const auto& v : vars) {
      // Images drawn from Boolean-valued shapes: a variable, its
      // complement, or a product.
      Expr image = Expr::variable(img_vars[0]);
      switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
        case 0: image = Expr::variable(img_vars[1]); break;
        case 1: image = one_minus(img_vars[2]); break;
        case 2:
          image = Expr::mul(Expr::variable(img_vars[0]),
                            Expr::variable(img_vars[1]));
          break;
        default: break;
      }
      phi.set(v, image.normalize());
      raw_images.emplace_back(v, image);
    }
    for (const auto& [v, img] : raw_images)
      REQUIRE(is_boolean_valued(phi.image(v)));

    // substitute(normalize(e), phi) must be the normal form of the
    // substituted-before-reduction expression. Both sides are canonical
    // polynomials over the image variables, so by semantic completeness
    // it suffices that they agree on every 0/1 point of those variables.
    const Polynomial direct = substitute(e.normalize(), phi);
    lpt::for_each_cube_point(img_vars, [&](const auto& point) {
      std::map<Var, Rational> lifted;
      for (const auto& v : vars) lifted[v] = phi.image(v).eval(point);
      CHECK(e.eval(lifted) == direct.eval(point));
    });
  }
}

TEST_CASE("linear_combination ring laws") {
  std::mt19937 rng(4242);
  const auto vars = lpt::make_vars(4);
  for (int round = 0; round < 60; ++round) {
    const Polynomial q1 = lpt::random_polynomial(rng, vars);
    const Polynomial q2 = lpt::random_polynomial(rng, vars);
    const Polynomial op1 = lpt::random_polynomial(rng, vars);
    const Polynomial op2 = lpt::random_polynomial(rng, vars);

    // Linear in each coefficient.
    CHECK(linear_combination({{q1 + q2, op1}}) ==
          linear_combination({{q1, op1}, {q2, op1}}));
    // A zero coefficient part never changes the result.
    CHECK(linear_combination({{q1, op1}, {Polynomial(), op2}}) ==
          linear_combination({{q1, op1}}));
  }
}
