#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qshuffle/specialization.hpp"

using namespace qsh;
using PS = ParamScalar;
using Elem = ShuffleElem<PS>;
using Poly = LaurentPoly<PS>;

namespace {

const PS V = PS::vu(1, 0);
const PS U = PS::vu(0, 1);

void require_all(const CheckLog& log) {
  CHECK_FALSE(log.empty());
  for (const auto& [id, ok] : log) {
    INFO(id);
    CHECK(ok);
  }
}

Elem random_elem(const FamilyPtr<PS>& fam, const std::vector<int>& grading,
                 std::mt19937_64& rng) {
  int total = 0;
  for (int g : grading) total += g;
  std::uniform_int_distribution<int> exp(0, 2);
  std::uniform_int_distribution<int> coef(-4, 4);
  Poly p(total);
  for (int t = 0; t < 4; ++t) {
    ExpVec e(total);
    for (auto& x : e) x = exp(rng);
    int c = coef(rng);
    if (c == 0) c = 1;
    p.add_term(e, PS(static_cast<long>(c)));
  }
  std::vector<SymGroup> groups(fam->group_count());
  int idx = 0;
  for (int g = 0; g < fam->group_count(); ++g) {
    for (int r = 0; r < grading[g]; ++r) groups[g].vars.push_back(idx++);
    groups[g].skew = fam->groups[g].skew;
  }
  return Elem(fam, grading, p.group_symmetrize(groups));
}

}  // namespace

TEST_CASE("hall_littlewood matches the one-group shuffle product") {
  auto fam = symmetric_family(V);
  Elem p10 = shuffle(Elem::generator(fam, 0, 1), Elem::generator(fam, 0, 0));
  CHECK(hall_littlewood<PS>(2, {1, 0}, V) == p10.num());
  Elem p00 = shuffle(Elem::generator(fam, 0, 0), Elem::generator(fam, 0, 0));
  CHECK(hall_littlewood<PS>(2, {0, 0}, V) == p00.num());
  Elem p210 = shuffle(shuffle(Elem::generator(fam, 0, 2), Elem::generator(fam, 0, 1)),
                      Elem::generator(fam, 0, 0));
  CHECK(hall_littlewood<PS>(3, {2, 1, 0}, V) == p210.num());
}

TEST_CASE("two-group specialization: vanishing and closed form") {
  auto rd = lambda_root_datum(V);
  for (auto grading : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {2, 2}}) {
    for (const auto& h : enumerate_h(rd, grading, 0, 1)) {
      require_all(check_specialization_of(rd, h));
    }
  }
}

TEST_CASE("two-group filtration steps compose") {
  auto rd = lambda_root_datum(V);
  std::mt19937_64 rng(811);
  // d = (2,0,2) -> (1,1,1) -> (0,2,0) on random elements of grading (2,2).
  for (int rep = 0; rep < 3; ++rep) {
    Elem F = random_elem(rd.family, {2, 2}, rng);
    Poly a = phi_d(rd, {2, 0, 2}, F);
    Poly b = phi_d(rd, {1, 1, 1}, F);
    Poly c = phi_d(rd, {0, 2, 0}, F);
    CHECK(rho_step({2, 0, 2}, a) == b);
    CHECK(rho_step({1, 1, 1}, b) == c);
  }
  // Bottom of the filtration is injective on a nonzero element.
  Elem r0r1 = shuffle(root_vector_image(rd, 1, 0), root_vector_image(rd, 1, 1));
  CHECK_FALSE(phi_d(rd, {0, 2, 0}, r0r1).is_zero());
}

TEST_CASE("three-fermionic specialization: vanishing and closed form") {
  auto rd = omega_root_datum(V, U);
  for (const auto& h : enumerate_h(rd, {1, 1, 1}, 0, 1)) {
    require_all(check_specialization_of(rd, h));
  }
  // Even-root multiplicity two (Hall-Littlewood block) and a mixed pair.
  require_all(check_specialization_of(rd, single_root_h(rd, rd.root_index("alpha12"), {0, 1})));
  require_all(check_specialization_of(rd, single_root_h(rd, rd.root_index("alpha13"), {0, 0})));
  HFunction mixed;
  mixed.modes.resize(rd.roots.size());
  mixed.modes[rd.root_index("alpha12")] = {0};
  mixed.modes[rd.root_index("alpha3")] = {1};
  require_all(check_specialization_of(rd, mixed));
}

TEST_CASE("one-fermionic specialization: vanishing and closed form") {
  auto rd = omega_prime_root_datum(V, U);
  for (const auto& h : enumerate_h(rd, {1, 1, 0}, 0, 1)) {
    require_all(check_specialization_of(rd, h));
  }
  for (const auto& h : enumerate_h(rd, {1, 1, 1}, 0, 0)) {
    require_all(check_specialization_of(rd, h));
  }
  // The doubled middle root alone.
  require_all(check_specialization_of(rd, single_root_h(rd, rd.root_index("gamma"), {0})));
  // A mixed pair whose kernel factors are asymmetric in the u exponent.
  HFunction mixed;
  mixed.modes.resize(rd.roots.size());
  mixed.modes[rd.root_index("alpha123")] = {0};
  mixed.modes[rd.root_index("alpha23")] = {0};
  require_all(check_specialization_of(rd, mixed));
}

TEST_CASE("single-root blocks factor through the declared kernels") {
  auto rdl = lambda_root_datum(V);
  require_all(check_root_block_structure(rdl, rdl.root_index("gamma"), {0, 2}));

  auto rd = omega_root_datum(V, U);
  for (const char* name : {"alpha12", "alpha13", "alpha23"})
    require_all(check_root_block_structure(rd, rd.root_index(name), {0, 2}));
  require_all(check_root_block_structure(rd, rd.root_index("alpha123"), {0, 1}));
  require_all(check_root_block_structure(rd, rd.root_index("alpha1"), {0, 1}));

  auto rdp = omega_prime_root_datum(V, U);
  for (const char* name : {"alpha1", "alpha3"})
    require_all(check_root_block_structure(rdp, rdp.root_index(name), {0, 2}));
  for (const char* name : {"alpha12", "alpha23", "alpha123"})
    require_all(check_root_block_structure(rdp, rdp.root_index(name), {0, 1}));
  require_all(check_root_block_structure(rdp, rdp.root_index("gamma"), {0, 1}));
}

TEST_CASE("wheel condition holds on images and fails on generic elements") {
  auto rdo = omega_root_datum(V, U);
  for (const auto& h : enumerate_h(rdo, {1, 1, 1}, 0, 1)) {
    INFO(h.str());
    CHECK(wheel_check(rdo, pbw_image(rdo, h)));
  }
  // A generic admissible-shape numerator violates the wheel condition.
  Poly one(3);
  one.add_term({0, 0, 0}, PS(1l));
  Elem bad(rdo.family, {1, 1, 1}, one);
  CHECK_FALSE(wheel_check(rdo, bad));

  auto rdp = omega_prime_root_datum(V, U);
  std::mt19937_64 rng(99);
  for (const auto& h : enumerate_h(rdp, {2, 1, 0}, 0, 1)) {
    INFO(h.str());
    CHECK(wheel_check(rdp, pbw_image(rdp, h)));
  }
  CHECK(wheel_check(rdp, pbw_image(rdp, single_root_h(rdp, rdp.root_index("gamma"), {0}))));
  Elem gen = random_elem(rdp.family, {2, 1, 0}, rng);
  CHECK_FALSE(wheel_check(rdp, gen));
  // Vacuous when the grading cannot build a wheel.
  CHECK(wheel_check(rdp, random_elem(rdp.family, {1, 1, 0}, rng)));
}
