// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
// Every check is exact (zero residual); no tolerances anywhere.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qshuffle/pbw.hpp"
#include "qshuffle/presentations.hpp"
#include "qshuffle/rootofunity.hpp"
#include "qshuffle/specialization.hpp"

using namespace qsh;
using PS = ParamScalar;
using Elem = ShuffleElem<PS>;

namespace {

const PS V = PS::vu(1, 0);
const PS U = PS::vu(0, 1);

struct Tally {
  int checks = 0;
  std::vector<std::string> failures;

  void take(const CheckLog& log) {
    for (const auto& [id, ok] : log) {
      ++checks;
      if (!ok) failures.push_back(id);
    }
  }
  void check(const std::string& id, bool ok) {
    ++checks;
    if (!ok) failures.push_back(id);
  }
};

bool report(int n, const std::string& desc, const Tally& t,
            std::chrono::steady_clock::time_point start) {
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = t.failures.empty();
  std::printf("%s criterion-%d %s [%d checks, %.1fs]\n", ok ? "PASS" : "FAIL", n, desc.c_str(),
              t.checks, secs);
  for (size_t i = 0; i < t.failures.size() && i < 10; ++i)
    std::printf("       failed: %s\n", t.failures[i].c_str());
  std::fflush(stdout);
  return ok;
}

/// All gradings of the given rank with total in [1, max_total].
std::vector<std::vector<int>> gradings_up_to(int rank, int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(rank, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == rank) {
      if (left < max_total) out.push_back(cur);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      cur[pos] = x;
      self(self, pos + 1, left - x);
    }
  };
  rec(rec, 0, max_total);
  // Drop the zero grading.
  std::erase_if(out, [](const std::vector<int>& g) {
    for (int x : g)
      if (x > 0) return false;
    return true;
  });
  return out;
}

int total_of(const std::vector<int>& g) {
  int t = 0;
  for (int x : g) t += x;
  return t;
}

Elem random_generator_product(const RootDatum<PS>& rd, int factors, std::mt19937_64& rng,
                              int mode_lo = -2, int mode_hi = 2) {
  std::uniform_int_distribution<int> simple(0, rd.rank() - 1);
  std::uniform_int_distribution<int> mode(mode_lo, mode_hi);
  Elem acc = Elem::unit(rd.family);
  for (int f = 0; f < factors; ++f)
    acc = shuffle(acc, generator_image(rd, simple(rng), mode(rng)));
  return acc;
}

// --- criteria ---------------------------------------------------------------

bool criterion1() {
  auto start = std::chrono::steady_clock::now();
  Tally t;
  t.take(check_defining_relations(lambda_root_datum(V), -2, 2));
  t.take(check_defining_relations(omega_root_datum(V, U), -1, 1));
  t.take(check_defining_relations(omega_prime_root_datum(V, U), -1, 1));
  return report(1, "defining relations of all three presentations", t, start);
}

bool criterion2() {
  auto start = std::chrono::steady_clock::now();
  Tally t;
  auto rd = lambda_root_datum(V);
  t.take(check_comm_lemmas(rd, -2, 2));
  // Adjacent-mode commutation and its nested-bracket expansion, k in [0, 3].
  PS vinv = PS(1l) / V;
  auto p = [&](int k) { return generator_image(rd, 0, k); };
  auto q = [&](int s) { return generator_image(rd, 1, s); };
  auto br = [&](const Elem& f, const Elem& g, const PS& c) { return super_bracket(rd, f, g, c); };
  for (int k = 0; k <= 3; ++k) {
    Elem rk = br(p(k), q(0), vinv);
    Elem rk1 = br(p(k - 1), q(0), vinv);
    t.check("rr-adjacent-zero:" + std::to_string(k), br(rk, rk1, V * V).is_zero());
    Elem nested = br(br(p(k), br(p(k), q(-1), V), V), q(0), vinv * vinv);
    t.check("rr-adjacent-nested:" + std::to_string(k), nested.is_zero());
  }
  return report(2, "root-vector commutation identities and expansions", t, start);
}

bool criterion3() {
  auto start = std::chrono::steady_clock::now();
  Tally t;
  t.take(elementary_product_check(lambda_root_datum(V), 3, 2));
  return report(3, "staircase product closed forms (n<=3, k<=2)", t, start);
}

bool criterion4() {
  auto start = std::chrono::steady_clock::now();
  Tally t;
  std::mt19937_64 rng(20260823);
  std::vector<std::pair<std::string, RootDatum<PS>>> data;
  data.emplace_back("two-group", lambda_root_datum(V));
  data.emplace_back("three-fermionic", omega_root_datum(V, U));
  data.emplace_back("one-fermionic", omega_prime_root_datum(V, U));
  for (const auto& [name, rd] : data) {
    for (int trial = 0; trial < 20; ++trial) {
      Elem F = random_generator_product(rd, 2, rng);
      Elem G = random_generator_product(rd, 2, rng);
      Elem H = random_generator_product(rd, 2, rng);
      t.check("assoc:" + name + ":" + std::to_string(trial),
              shuffle(shuffle(F, G), H) == shuffle(F, shuffle(G, H)));
    }
  }
  // One-group symmetric algebra: a single group symmetrizes over all slots at
  // once, so keep the triples at 4 total variables.
  auto fam = symmetric_family(V);
  std::uniform_int_distribution<int> mode(-2, 2);
  auto sgen = [&] { return Elem::generator(fam, 0, mode(rng)); };
  for (int trial = 0; trial < 20; ++trial) {
    Elem F = shuffle(sgen(), sgen());
    Elem G = sgen(), H = sgen();
    t.check("assoc:symmetric:" + std::to_string(trial),
            shuffle(shuffle(F, G), H) == shuffle(F, shuffle(G, H)));
  }
  return report(4, "associativity on random triples (<= 6 variables)", t, start);
}

bool criterion5() {
  auto start = std::chrono::steady_clock::now();
  Tally t;
  std::vector<RootDatum<PS>> data = {lambda_root_datum(V), omega_root_datum(V, U),
                                     omega_prime_root_datum(V, U)};
  for (const auto& rd : data) {
    for (const auto& g : gradings_up_to(rd.rank(), 6)) {
      int hi = total_of(g) <= 4 ? 1 : 0;
      for (const auto& h : enumerate_h(rd, g, 0, hi)) t.take(check_specialization_of(rd, h));
    }
  }
  // Filtration steps compose on random two-group elements of grading (2, 2):
  // d = (2,0,2) -> (1,1,1) -> (0,2,0).
  auto rd = lambda_root_datum(V);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 3; ++trial) {
    Elem F = shuffle(random_generator_product(rd, 2, rng), random_generator_product(rd, 2, rng));
    while (F.grading() != std::vector<int>{2, 2})
      F = shuffle(random_generator_product(rd, 2, rng), random_generator_product(rd, 2, rng));
    auto a = phi_d(rd, {2, 0, 2}, F);
    auto b = phi_d(rd, {1, 1, 1}, F);
    auto c = phi_d(rd, {0, 2, 0}, F);
    t.check("rho-compose-1:" + std::to_string(trial), rho_step({2, 0, 2}, a) == b);
    t.check("rho-compose-2:" + std::to_string(trial), rho_step({1, 1, 1}, b) == c);
  }
  return report(5, "specialization maps: vanishing, leading terms, filtration steps", t, start);
}

bool criterion6() {
  auto start = std::chrono::steady_clock::now();
  Tally t;
  std::vector<RootDatum<PS>> data = {lambda_root_datum(V), omega_root_datum(V, U),
                                     omega_prime_root_datum(V, U)};
  for (const auto& rd : data) {
    std::string fam = std::to_string(rd.rank()) + "r";
    for (const auto& g : gradings_up_to(rd.rank(), 6)) {
      int hi = total_of(g) == 2 ? 2 : 1;
      auto hs = enumerate_h(rd, g, 0, hi);
      std::vector<Elem> images;
      images.reserve(hs.size());
      for (const auto& h : hs) images.push_back(pbw_image(rd, h));
      std::ostringstream id;
      id << "rank:" << fam << ":g=";
      for (size_t i = 0; i < g.size(); ++i) id << (i ? "," : "") << g[i];
      t.check(id.str(), independence_rank(images) == static_cast<int>(hs.size()));
    }
    // Exact round trip of constructed combinations.
    std::mt19937_64 rng(99);
    std::vector<int> g(rd.rank(), 0);
    g[0] = 1;
    g[1] = 1;
    auto hs = enumerate_h(rd, g, 0, 1);
    std::uniform_int_distribution<int> coef(-5, 5);
    std::map<HFunction, PS> want;
    Elem F(rd.family, g, LaurentPoly<PS>(total_of(g)), false);
    for (const auto& h : hs) {
      int c = coef(rng);
      if (c == 0) continue;
      want[h] = PS(static_cast<long>(c)) * scalar_pow(V, coef(rng));
      F = F + pbw_image(rd, h).scaled(want.at(h));
    }
    t.check("roundtrip:" + fam, pbw_decompose(rd, F, 0, 1) == want);
    // Arbitrary three-factor generator products decompose with zero residual.
    for (int trial = 0; trial < 3; ++trial) {
      Elem P = random_generator_product(rd, 3, rng, 0, 1);
      auto coeffs = pbw_decompose(rd, P, -1, 2);
      Elem back(rd.family, P.grading(), LaurentPoly<PS>(P.arity()), false);
      for (const auto& [h, c] : coeffs) back = back + pbw_image(rd, h).scaled(c);
      t.check("threefactor:" + fam + ":" + std::to_string(trial), back == P);
    }
  }
  return report(6, "ordered-product bases: ranks, decomposition round trips", t, start);
}

bool criterion7() {
  auto start = std::chrono::steady_clock::now();
  Tally t;
  t.take(nilpotency_check(2, 2, 3));
  t.take(nilpotency_check(3, 1, 4));
  t.take(rou_independence_check(2, 3, 3, 0, 1));
  t.take(toy_check(2));
  t.take(toy_check(3));
  t.take(wheel_dimension_check(2, 2, 2, 8, -2));
  return report(7, "root of unity: nilpotency, independence, wheel dimensions", t, start);
}

bool criterion8() {
  auto start = std::chrono::steady_clock::now();
  Tally t;
  for (int tt : {2, 3})
    for (int n = 1; n <= 4; ++n) t.take(boris_check(tt, n, 8));
  return report(8, "symmetric algebra at a root of unity: admissible basis", t, start);
}

bool criterion9() {
  auto start = std::chrono::steady_clock::now();
  Tally t;
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> num(1, 40);
  std::vector<RootDatum<PS>> data = {lambda_root_datum(V), omega_root_datum(V, U),
                                     omega_prime_root_datum(V, U)};
  for (const auto& rd : data) {
    for (int trial = 0; trial < 5; ++trial) {
      Elem F = random_generator_product(rd, 2, rng);
      Elem G = random_generator_product(rd, 1, rng);
      Elem H = shuffle(F, G);
      // Distinct rational coordinates keep the point off every pole.
      std::vector<PS> point;
      for (int i = 0; i < H.arity(); ++i)
        point.push_back(PS(static_cast<long>(num(rng))) +
                        PS(static_cast<long>(100 * (i + 1))));
      t.check("oracle:" + std::to_string(rd.rank()) + ":" + std::to_string(trial),
              H.eval(point) == shuffle_eval_direct(F, G, point));
    }
  }
  return report(9, "numerator algorithm agrees with direct evaluation at random points", t,
                start);
}

}  // namespace

int main(int argc, char** argv) {
  bool (*criteria[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                          criterion6, criterion7, criterion8, criterion9};
  bool run[9];
  // Optional arguments select individual criteria (1-9); default is all.
  for (int i = 0; i < 9; ++i) run[i] = argc < 2;
  for (int a = 1; a < argc; ++a) {
    int n = std::atoi(argv[a]);
    if (n < 1 || n > 9) {
      std::fprintf(stderr, "unknown criterion: %s\n", argv[a]);
      return 2;
    }
    run[n - 1] = true;
  }
  bool ok = true;
  for (int i = 0; i < 9; ++i)
    if (run[i]) ok &= criteria[i]();
  std::printf("%s\n", ok ? "ALL CRITERIA PASSED" : "ACCEPTANCE FAILED");
  return ok ? 0 : 1;
}
