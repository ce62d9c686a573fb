#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qshuffle/rootofunity.hpp"

using namespace qsh;

namespace {

void require_all(const CheckLog& log) {
  CHECK_FALSE(log.empty());
  for (const auto& [id, ok] : log) {
    INFO(id);
    CHECK(ok);
  }
}

}  // namespace

TEST_CASE("partition enumeration and admissibility") {
  CHECK(partitions_into(4, 3, 4).size() == 4);  // 400 310 220 211
  CHECK(partitions_into(0, 2, 0).size() == 1);
  CHECK(strict_partitions_into(3, 2).size() == 2);  // 30 21
  CHECK(strict_partitions_into(0, 2).empty());      // would need two distinct nonneg parts
  CHECK(strict_partitions_into(1, 2).size() == 1);  // 10
  CHECK_FALSE(admissible({0, 0}, 2));
  CHECK(admissible({1, 0, 0}, 3));
  CHECK(admissible({3, 1}, 2));
  CHECK_FALSE(admissible({-1, -1}, 2));
}

TEST_CASE("hall-littlewood shuffle identity at a root of unity") {
  for (int t : {2, 3}) {
    RouContext ctx = rou_context(t);
    for (Partition lam : {Partition{2, 1, 0}, Partition{1, 1, 1}, Partition{3, 0}}) {
      ShuffleElem<Cyc> prod = ShuffleElem<Cyc>::unit(ctx.one_group);
      for (int p : lam)
        prod = shuffle(prod, ShuffleElem<Cyc>::generator(ctx.one_group, 0, p));
      CHECK(hall_littlewood<Cyc>(static_cast<int>(lam.size()), lam, ctx.v_one) == prod.num());
    }
  }
}

TEST_CASE("one-group basis theorem at desk scale") {
  require_all(boris_check(2, 3, 6));
  require_all(boris_check(3, 3, 5));
  require_all(boris_check(2, 1, 4));  // below the wheel threshold: all vacuous
}

TEST_CASE("even-root atom is nilpotent of order exactly t") {
  require_all(nilpotency_check(2, 2, 3));
  require_all(nilpotency_check(3, 1, 4));
}

TEST_CASE("order-2t wheel condition on generated elements") {
  RouContext ctx = rou_context(2);
  // Every admissible product passes; below threshold everything passes.
  for (const auto& h : enumerate_h(ctx.two_group, {2, 2}, 0, 1)) {
    INFO(h.str());
    CHECK(wheel_check_rou(ctx, f_h(ctx, h)));
  }
  // Products of degree-one generators pass (subalgebra property).
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> mode(-1, 2);
  for (int rep = 0; rep < 3; ++rep) {
    ShuffleElem<Cyc> F = ShuffleElem<Cyc>::unit(ctx.two_group.family);
    for (int i = 0; i < 2; ++i) F = shuffle(F, generator_image(ctx.two_group, 0, mode(rng)));
    for (int i = 0; i < 2; ++i) F = shuffle(F, generator_image(ctx.two_group, 1, mode(rng)));
    CHECK(wheel_check_rou(ctx, F));
  }
  // The plain Vandermonde numerator violates the wheel identity.
  LaurentPoly<Cyc> bad =
      vandermonde<Cyc>(4, {0, 1}) * vandermonde<Cyc>(4, {2, 3});
  CHECK_FALSE(wheel_check_rou(ctx, ShuffleElem<Cyc>(ctx.two_group.family, {2, 2}, bad)));
  // Vacuous below the threshold.
  LaurentPoly<Cyc> small = LaurentPoly<Cyc>::constant(3, Cyc(1l));
  CHECK(wheel_check_rou(ctx, ShuffleElem<Cyc>(ctx.two_group.family, {1, 2}, small, false)));
}

TEST_CASE("admissible products are independent, inadmissible ones vanish") {
  require_all(rou_independence_check(2, 3, 3, 0, 1));
}

TEST_CASE("generator products of the grading-(t,t) wheel ideal") {
  require_all(toy_check(2));
  require_all(toy_check(3));
}

TEST_CASE("wheel subspace equals the generated subalgebra per degree") {
  require_all(wheel_dimension_check(2, 2, 2, 8, -2));
}

TEST_CASE("membership decomposition over the admissible products") {
  RouContext ctx = rou_context(2);
  // A single admissible product decomposes to itself.
  HFunction h{{{2}, {0}, {1}}};
  auto combo = lambda_zeta_membership(ctx, f_h(ctx, h), 0, 2);
  REQUIRE(combo.size() == 1);
  CHECK(combo.begin()->first == h);
  CHECK(combo.begin()->second == Cyc(1l));

  // A random combination decomposes with zero residual.
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<HFunction> hs;
  for (const auto& hh : enumerate_h(ctx.two_group, {2, 2}, 0, 1))
    if (admissible_h(hh, 2)) hs.push_back(hh);
  ShuffleElem<Cyc> F(ctx.two_group.family, {2, 2}, LaurentPoly<Cyc>(4), false);
  std::map<HFunction, Cyc> want;
  for (const auto& hh : hs) {
    Cyc c(static_cast<long>(coef(rng)));
    if (c.is_zero()) continue;
    want[hh] = c;
    F = F + f_h(ctx, hh).scaled(c);
  }
  auto got = lambda_zeta_membership(ctx, F, 0, 1);
  ShuffleElem<Cyc> back(ctx.two_group.family, {2, 2}, LaurentPoly<Cyc>(4), false);
  for (const auto& [hh, c] : got) back = back + f_h(ctx, hh).scaled(c);
  CHECK(back == F);

  // A wheel-violating element is not in the span.
  LaurentPoly<Cyc> bad = vandermonde<Cyc>(4, {0, 1}) * vandermonde<Cyc>(4, {2, 3});
  ShuffleElem<Cyc> B(ctx.two_group.family, {2, 2}, bad);
  CHECK_THROWS_AS(lambda_zeta_membership(ctx, B, -1, 2), NotInSpan);
}

TEST_CASE("staircase products match the displayed closed form") {
  auto rd = lambda_root_datum(ParamScalar::vu(1, 0));
  require_all(elementary_product_check(rd, 3, 2));
}
