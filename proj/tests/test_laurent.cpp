#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qshuffle/laurent.hpp"
#include "qshuffle/laurent_json.hpp"
#include "qshuffle/param_scalar.hpp"

using namespace qsh;
using P = LaurentPoly<ParamScalar>;

namespace {

P random_poly(int arity, std::mt19937_64& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> exp(-2, 3);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> coef(-5, 5);
  P p(arity);
  int tn = nterms(rng);
  for (int i = 0; i < tn; ++i) {
    ExpVec e(arity);
    for (auto& x : e) x = exp(rng);
    int c = coef(rng);
    if (c == 0) c = 1;
    p.add_term(e, ParamScalar(static_cast<long>(c)) * ParamScalar::vu(exp(rng), 0));
  }
  return p;
}

std::vector<ParamScalar> random_point(int arity, std::mt19937_64& rng) {
  std::vector<ParamScalar> pt;
  for (int i = 0; i < arity; ++i) pt.push_back(ParamScalar(random_rat(rng)));
  return pt;
}

}  // namespace

TEST_CASE("arithmetic") {
  P one = P::constant(2, ParamScalar(1l));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5; ++i) {
    P f = random_poly(2, rng);
    CHECK(f * one == f);
  }

  P x1 = P::variable(2, 0), x2 = P::variable(2, 1);
  P lhs = (x1 - x2) * (x1 + x2);
  P rhs = x1 * x1 - x2 * x2;
  CHECK(lhs == rhs);

  for (int i = 0; i < 5; ++i) {
    P f = random_poly(3, rng), g = random_poly(3, rng);
    auto pt = random_point(3, rng);
    CHECK((f * g).eval(pt) == f.eval(pt) * g.eval(pt));
    CHECK((f + g).eval(pt) == f.eval(pt) + g.eval(pt));
  }
}

TEST_CASE("substitute") {
  std::mt19937_64 rng(22);
  P f = random_poly(3, rng);
  std::vector<std::pair<ParamScalar, int>> identity = {
      {ParamScalar(1l), 0}, {ParamScalar(1l), 1}, {ParamScalar(1l), 2}};
  CHECK(f.substitute(identity, 3) == f);

  // f = x y, plan x -> z1, y -> -v z2 gives -v z1 z2.
  P xy = P::variable(2, 0) * P::variable(2, 1);
  std::vector<std::pair<ParamScalar, int>> plan = {
      {ParamScalar(1l), 0}, {ParamScalar(0l) - ParamScalar::vu(1, 0), 1}};
  P got = xy.substitute(plan, 2);
  P want = (P::variable(2, 0) * P::variable(2, 1))
               .scaled(ParamScalar(0l) - ParamScalar::vu(1, 0));
  CHECK(got == want);

  // substitute is multiplicative.
  for (int i = 0; i < 5; ++i) {
    P a = random_poly(2, rng), b = random_poly(2, rng);
    std::vector<std::pair<ParamScalar, int>> pl = {{ParamScalar::vu(1, 0), 1},
                                                   {ParamScalar::vu(-2, 1), 0}};
    CHECK((a * b).substitute(pl, 2) == a.substitute(pl, 2) * b.substitute(pl, 2));
  }
}

TEST_CASE("group_symmetrize") {
  P x1 = P::variable(2, 0), x2 = P::variable(2, 1);
  P asym = x1.group_symmetrize({{{0, 1}, true}});
  CHECK(asym == (x1 - x2).scaled(ParamScalar(1l) / ParamScalar(2l)));

  P x1x2 = x1 * x2;
  CHECK(x1x2.group_symmetrize({{{0, 1}, false}}) == x1x2);

  // asym of x1^0 x2^1 x3^2 is Vandermonde / 6.
  P m = P::monomial(3, {0, 1, 2}, ParamScalar(1l));
  P a = P::variable(3, 0), b = P::variable(3, 1), c = P::variable(3, 2);
  P vand = (b - a) * (c - a) * (c - b);
  CHECK(m.group_symmetrize({{{0, 1, 2}, true}}) ==
        vand.scaled(ParamScalar(1l) / ParamScalar(6l)));

  // Projection property and vanishing of asym output on equal variables.
  std::mt19937_64 rng(33);
  for (int i = 0; i < 4; ++i) {
    P f = random_poly(4, rng);
    std::vector<SymGroup> groups = {{{0, 1}, true}, {{2, 3}, false}};
    P s = f.group_symmetrize(groups);
    CHECK(s.group_symmetrize(groups) == s);
    auto pt = random_point(4, rng);
    pt[1] = pt[0];
    CHECK(s.eval(pt).is_zero());
  }
}

TEST_CASE("divide_exact") {
  std::mt19937_64 rng(44);
  P one = P::constant(2, ParamScalar(1l));
  for (int i = 0; i < 5; ++i) {
    P f = random_poly(2, rng);
    CHECK(divide_exact(f, one) == f);
  }

  P x1 = P::variable(2, 0), x2 = P::variable(2, 1);
  CHECK(divide_exact(x1 * x1 - x2 * x2, x1 - x2) == x1 + x2);

  for (int i = 0; i < 8; ++i) {
    P f = random_poly(3, rng), g = random_poly(3, rng);
    if (g.is_zero()) continue;
    CHECK(divide_exact(f * g, g) == f);
  }

  // Laurent case with genuinely negative exponents.
  P f = P::monomial(2, {-3, 1}, ParamScalar::vu(1, 0)) + P::monomial(2, {0, -2}, ParamScalar(2l));
  P g = P::monomial(2, {-1, -1}, ParamScalar(1l));
  CHECK(divide_exact(f * g, g) == f);

  CHECK_THROWS_AS(divide_exact(x1 + x2, x1 - x2), NotDivisible);
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 5; ++i) {
    P f = random_poly(3, rng);
    auto j = laurent_to_json(f, {"x1", "x2", "y1"});
    std::vector<std::string> vars;
    P back = laurent_from_json(j, &vars);
    CHECK(back == f);
    CHECK(vars == std::vector<std::string>{"x1", "x2", "y1"});
  }
}
