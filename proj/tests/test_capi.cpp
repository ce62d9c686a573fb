// Exercises the C interface end to end: handles, arithmetic, JSON round
// trips, decomposition, suite runners, and error reporting.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <string>

#include "qshuffle.h"

namespace {

struct DatumGuard {
  qsh_datum* d = nullptr;
  explicit DatumGuard(const char* id) { REQUIRE(qsh_datum_create(id, &d) == QSH_OK); }
  ~DatumGuard() { qsh_datum_free(d); }
};

struct ElemGuard {
  qsh_elem* e = nullptr;
  ElemGuard() = default;
  explicit ElemGuard(qsh_elem* p) : e(p) {}
  ElemGuard(const ElemGuard&) = delete;
  ElemGuard& operator=(ElemGuard&& o) {
    qsh_elem_free(e);
    e = o.e;
    o.e = nullptr;
    return *this;
  }
  ElemGuard(ElemGuard&& o) : e(o.e) { o.e = nullptr; }
  ~ElemGuard() { qsh_elem_free(e); }
};

ElemGuard gen(const qsh_datum* d, int i, int k) {
  qsh_elem* e = nullptr;
  REQUIRE(qsh_generator(d, i, k, &e) == QSH_OK);
  return ElemGuard(e);
}

ElemGuard prod(const qsh_elem* a, const qsh_elem* b) {
  qsh_elem* e = nullptr;
  REQUIRE(qsh_shuffle(a, b, &e) == QSH_OK);
  return ElemGuard(e);
}

std::string take_string(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  qsh_string_free(s);
  return out;
}

std::string run_report(const std::function<qsh_status(char**, int*)>& fn,
                       int want_failures = 0) {
  char* report = nullptr;
  int failures = -1;
  REQUIRE(fn(&report, &failures) == QSH_OK);
  std::string text = take_string(report);
  CHECK(text.rfind("qshuffle-report\t1\n", 0) == 0);
  CHECK(failures == want_failures);
  return text;
}

}  // namespace

TEST_CASE("datum lifecycle and errors") {
  qsh_datum* d = nullptr;
  CHECK(qsh_datum_create("no-such-presentation", &d) == QSH_ERR_INVALID);
  CHECK(std::string(qsh_last_error()).find("unknown presentation") != std::string::npos);
  CHECK(qsh_datum_create(nullptr, &d) == QSH_ERR_INVALID);

  DatumGuard sl("sl21");
  int rank = 0, roots = 0;
  REQUIRE(qsh_datum_rank(sl.d, &rank) == QSH_OK);
  REQUIRE(qsh_datum_root_count(sl.d, &roots) == QSH_OK);
  CHECK(rank == 2);
  CHECK(roots == 3);
  char* name = nullptr;
  REQUIRE(qsh_datum_root_name(sl.d, 1, &name) == QSH_OK);
  CHECK(take_string(name) == "gamma");
  CHECK(qsh_datum_root_name(sl.d, 7, &name) == QSH_ERR_INVALID);

  DatumGuard of("d21f");
  REQUIRE(qsh_datum_rank(of.d, &rank) == QSH_OK);
  CHECK(rank == 3);
}

TEST_CASE("element arithmetic through the C surface") {
  DatumGuard sl("sl21");
  ElemGuard p0 = gen(sl.d, 0, 0);
  ElemGuard q0 = gen(sl.d, 1, 0);

  // Odd generators anticommute: p0*q0 + q0*p0 involves the kernel, but
  // p0*p0 + p0*p0 = 2 p0*p0 with p0*p0 = 0 (skew group).
  ElemGuard pp = prod(p0.e, p0.e);
  int zero = 0;
  REQUIRE(qsh_is_zero(pp.e, &zero) == QSH_OK);
  CHECK(zero == 1);

  ElemGuard pq = prod(p0.e, q0.e);
  REQUIRE(qsh_is_zero(pq.e, &zero) == QSH_OK);
  CHECK(zero == 0);
  int grading[2] = {0, 0}, written = 0;
  REQUIRE(qsh_grading(pq.e, grading, 2, &written) == QSH_OK);
  CHECK(written == 2);
  CHECK(grading[0] == 1);
  CHECK(grading[1] == 1);

  // r_0 = [p_0, q_0]_{v^-1} = p0*q0 + v^{-1} q0*p0 (both odd).
  ElemGuard qp = prod(q0.e, p0.e);
  qsh_elem* scaled = nullptr;
  REQUIRE(qsh_scale(qp.e, "v^-1", &scaled) == QSH_OK);
  ElemGuard qp_scaled(scaled);
  qsh_elem* sum = nullptr;
  REQUIRE(qsh_add(pq.e, qp_scaled.e, &sum) == QSH_OK);
  ElemGuard bracket(sum);
  qsh_elem* r0 = nullptr;
  REQUIRE(qsh_root_vector(sl.d, "gamma", 0, &r0) == QSH_OK);
  ElemGuard gamma(r0);
  int eq = 0;
  REQUIRE(qsh_equal(bracket.e, gamma.e, &eq) == QSH_OK);
  CHECK(eq == 1);

  qsh_elem* diff = nullptr;
  REQUIRE(qsh_sub(bracket.e, gamma.e, &diff) == QSH_OK);
  ElemGuard d2(diff);
  REQUIRE(qsh_is_zero(d2.e, &zero) == QSH_OK);
  CHECK(zero == 1);

  CHECK(qsh_scale(qp.e, "not a scalar", &scaled) != QSH_OK);
  CHECK(qsh_root_vector(sl.d, "no-such-root", 0, &r0) == QSH_ERR_INVALID);
}

TEST_CASE("JSON round trip") {
  DatumGuard sl("sl21");
  ElemGuard p1 = gen(sl.d, 0, 1);
  ElemGuard q0 = gen(sl.d, 1, 0);
  ElemGuard f = prod(p1.e, q0.e);

  char* json = nullptr;
  REQUIRE(qsh_elem_to_json(f.e, &json) == QSH_OK);
  std::string text = take_string(json);
  auto j = nlohmann::json::parse(text);
  CHECK(j.at("datum") == "sl21");
  CHECK(j.at("grading") == std::vector<int>({1, 1}));
  CHECK(j.at("numerator").at("vars").size() == 2);

  qsh_elem* back = nullptr;
  REQUIRE(qsh_elem_from_json(sl.d, text.c_str(), &back) == QSH_OK);
  ElemGuard g(back);
  int eq = 0;
  REQUIRE(qsh_equal(f.e, g.e, &eq) == QSH_OK);
  CHECK(eq == 1);

  CHECK(qsh_elem_from_json(sl.d, "{ not json", &back) == QSH_ERR_PARSE);
  DatumGuard of("d21f");
  CHECK(qsh_elem_from_json(of.d, text.c_str(), &back) == QSH_ERR_INVALID);
}

TEST_CASE("decomposition") {
  DatumGuard sl("sl21");
  ElemGuard p1 = gen(sl.d, 0, 1);
  ElemGuard q0 = gen(sl.d, 1, 0);
  ElemGuard f = prod(p1.e, q0.e);

  char* json = nullptr;
  REQUIRE(qsh_decompose(sl.d, f.e, 0, 1, &json) == QSH_OK);
  auto j = nlohmann::json::parse(take_string(json));
  CHECK(j.at("window") == std::vector<int>({0, 1}));
  REQUIRE(!j.at("terms").empty());

  // Rebuild the element from its decomposition and compare.
  qsh_elem* acc = nullptr;
  bool first = true;
  ElemGuard total;
  for (const auto& term : j.at("terms")) {
    auto modes = term.at("modes").get<std::vector<std::vector<int>>>();
    qsh_elem* mono = nullptr;
    REQUIRE(qsh_unit(sl.d, &mono) == QSH_OK);
    ElemGuard m(mono);
    for (size_t b = 0; b < modes.size(); ++b) {
      char* rname = nullptr;
      REQUIRE(qsh_datum_root_name(sl.d, static_cast<int>(b), &rname) == QSH_OK);
      std::string root = take_string(rname);
      for (int k : modes[b]) {
        qsh_elem* rv = nullptr;
        REQUIRE(qsh_root_vector(sl.d, root.c_str(), k, &rv) == QSH_OK);
        ElemGuard r(rv);
        m = prod(m.e, r.e);
      }
    }
    qsh_elem* scaled = nullptr;
    REQUIRE(qsh_scale(m.e, term.at("coeff").get<std::string>().c_str(), &scaled) == QSH_OK);
    ElemGuard sm(scaled);
    if (first) {
      total = std::move(sm);
      first = false;
    } else {
      REQUIRE(qsh_add(total.e, sm.e, &acc) == QSH_OK);
      total = ElemGuard(acc);
    }
  }
  int eq = 0;
  REQUIRE(qsh_equal(total.e, f.e, &eq) == QSH_OK);
  CHECK(eq == 1);

  // A mode-2 product is not reachable with window [0, 0].
  ElemGuard p2 = gen(sl.d, 0, 2);
  ElemGuard g = prod(p2.e, q0.e);
  CHECK(qsh_decompose(sl.d, g.e, 0, 0, &json) == QSH_ERR_NOT_IN_SPAN);
  CHECK(std::string(qsh_last_error()).find("widening") != std::string::npos);
}

TEST_CASE("relation and commutation suites") {
  DatumGuard sl("sl21");
  std::string text = run_report(
      [&](char** r, int* f) { return qsh_run_relations(sl.d, -1, 1, r, f); });
  CHECK(text.find("PASS\trelations:sl21\tmixed-pq:0,0\t") != std::string::npos);
  run_report([&](char** r, int* f) { return qsh_run_comm_lemmas(sl.d, -1, 1, r, f); });
  run_report([&](char** r, int* f) { return qsh_run_elementary(sl.d, 2, 1, r, f); });

  DatumGuard of("d21o");
  run_report([&](char** r, int* f) { return qsh_run_relations(of.d, 0, 0, r, f); });
  char* report = nullptr;
  int failures = -1;
  CHECK(qsh_run_comm_lemmas(of.d, 0, 0, &report, &failures) == QSH_ERR_INVALID);
  CHECK(qsh_run_relations(sl.d, 1, 0, &report, &failures) == QSH_ERR_INVALID);
}

TEST_CASE("pbw and specialization suites") {
  DatumGuard sl("sl21");
  int grading[2] = {1, 1};
  std::string text = run_report(
      [&](char** r, int* f) { return qsh_run_pbw(sl.d, grading, 2, 0, 1, r, f); });
  // Candidates at grading (1,1), modes in [0,1]: four two-factor products
  // plus the composite root vector at two modes.
  CHECK(text.find("rank=6 count=6") != std::string::npos);
  std::string spec = run_report(
      [&](char** r, int* f) { return qsh_run_specialization(sl.d, grading, 2, 0, 1, r, f); });
  char* report = nullptr;
  int failures = -1;
  CHECK(qsh_run_pbw(sl.d, grading, 3, 0, 1, &report, &failures) == QSH_ERR_INVALID);

  // Reports are byte-identical across worker counts.
  setenv("QSHUFFLE_WORKERS", "3", 1);
  std::string text2 = run_report(
      [&](char** r, int* f) { return qsh_run_pbw(sl.d, grading, 2, 0, 1, r, f); });
  std::string spec2 = run_report(
      [&](char** r, int* f) { return qsh_run_specialization(sl.d, grading, 2, 0, 1, r, f); });
  unsetenv("QSHUFFLE_WORKERS");
  CHECK(text2 == text);
  CHECK(spec2 == spec);
}

TEST_CASE("root-of-unity suites") {
  std::string nil = run_report(
      [&](char** r, int* f) { return qsh_run_rou_nilpotency(2, 1, 3, r, f); });
  CHECK(nil.find("gamma-power") != std::string::npos);

  std::string degenerate = run_report(
      [&](char** r, int* f) { return qsh_run_rou_nilpotency(1, 1, 3, r, f); });
  CHECK(degenerate.find("vacuous") != std::string::npos);

  run_report([&](char** r, int* f) { return qsh_run_rou_independence(2, 2, 2, 0, 1, r, f); });
  run_report([&](char** r, int* f) { return qsh_run_rou_toy(2, r, f); });

  std::string wheel = run_report(
      [&](char** r, int* f) { return qsh_run_rou_wheeldim(2, 2, 2, 4, -2, r, f); });
  CHECK(wheel.find("EQUAL") != std::string::npos);
  CHECK(wheel.find("t=2;g=2,2;D=4") != std::string::npos);

  run_report([&](char** r, int* f) { return qsh_run_sym_basis(2, 2, 4, r, f); });
  char* report = nullptr;
  int failures = -1;
  CHECK(qsh_run_sym_basis(0, 2, 4, &report, &failures) == QSH_ERR_INVALID);
}
