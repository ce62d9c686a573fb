#include "qshuffle.h"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qshuffle/laurent_json.hpp"
#include "qshuffle/pbw.hpp"
#include "qshuffle/presentations.hpp"
#include "qshuffle/rootofunity.hpp"
#include "qshuffle/specialization.hpp"

using qsh::CheckLog;
using qsh::HFunction;
using qsh::ShuffleElem;
using PS = qsh::ParamScalar;

struct qsh_datum {
  std::string id;
  qsh::RootDatum<PS> rd;
};

struct qsh_elem {
  std::string datum_id;
  ShuffleElem<PS> e;
};

namespace {

thread_local std::string g_last_error;

qsh_status fail(qsh_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

/// Runs fn() and maps exceptions to status codes.
template <class Fn>
qsh_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const qsh::NotInSpan& e) {
    return fail(QSH_ERR_NOT_IN_SPAN, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(QSH_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(QSH_ERR_INVALID, e.what());
  } catch (const std::exception& e) {
    return fail(QSH_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int worker_count() {
  const char* env = std::getenv("QSHUFFLE_WORKERS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n > 1 ? n : 1;
}

/// Canonically ordered parallel map: runs fn(i) for i in [0, count) on up to
/// QSHUFFLE_WORKERS threads and returns results in index order.
template <class Fn>
auto ordered_map(int count, Fn fn) -> std::vector<decltype(fn(0))> {
  using R = decltype(fn(0));
  std::vector<std::optional<R>> slots(count);
  int workers = std::min(worker_count(), count > 0 ? count : 1);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) slots[i].emplace(fn(i));
  } else {
    std::atomic<int> next{0};
    std::vector<std::future<void>> jobs;
    for (int w = 0; w < workers; ++w)
      jobs.push_back(std::async(std::launch::async, [&] {
        for (int i = next++; i < count; i = next++) slots[i].emplace(fn(i));
      }));
    for (auto& j : jobs) j.get();
  }
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

const char* kReportHeader = "qshuffle-report\t1\n";

void append_log(std::ostringstream& os, const std::string& suite, const CheckLog& log,
                int* failures) {
  for (const auto& [id, ok] : log) {
    if (!ok) ++*failures;
    os << (ok ? "PASS" : "FAIL") << '\t' << suite << '\t' << id << '\t' << "exact-residual"
       << '\n';
  }
}

qsh_status emit_report(const std::string& suite, const CheckLog& log, char** report,
                       int* failures) {
  if (!report || !failures) return fail(QSH_ERR_INVALID, "null output pointer");
  std::ostringstream os;
  os << kReportHeader;
  *failures = 0;
  append_log(os, suite, log, failures);
  *report = dup_string(os.str());
  return QSH_OK;
}

qsh_status require(bool cond, const std::string& msg) {
  return cond ? QSH_OK : fail(QSH_ERR_INVALID, msg);
}

std::vector<std::string> var_names(const ShuffleElem<PS>& e) {
  std::vector<std::string> names;
  const auto& g = e.grading();
  for (size_t grp = 0; grp < g.size(); ++grp)
    for (int r = 0; r < g[grp]; ++r)
      names.push_back("x" + std::to_string(grp + 1) + "_" + std::to_string(r + 1));
  return names;
}

std::string grading_key(const int* grading, int rank) {
  std::string s;
  for (int i = 0; i < rank; ++i) s += (i ? "," : "") + std::to_string(grading[i]);
  return s;
}

}  // namespace

extern "C" {

const char* qsh_last_error(void) { return g_last_error.c_str(); }

void qsh_string_free(char* s) { std::free(s); }

qsh_status qsh_datum_create(const char* id, qsh_datum** out) {
  return guarded([&]() -> qsh_status {
    if (auto st = require(id && out, "null argument"); st != QSH_OK) return st;
    std::string name(id);
    qsh::RootDatum<PS> rd;
    if (name == "sl21")
      rd = qsh::lambda_root_datum(PS::vu(1, 0));
    else if (name == "d21f")
      rd = qsh::omega_root_datum(PS::vu(1, 0), PS::vu(0, 1));
    else if (name == "d21o")
      rd = qsh::omega_prime_root_datum(PS::vu(1, 0), PS::vu(0, 1));
    else
      return fail(QSH_ERR_INVALID, "unknown presentation id: " + name +
                                       " (expected sl21, d21f, or d21o)");
    *out = new qsh_datum{std::move(name), std::move(rd)};
    return QSH_OK;
  });
}

void qsh_datum_free(qsh_datum* d) { delete d; }

qsh_status qsh_datum_rank(const qsh_datum* d, int* out) {
  if (auto st = require(d && out, "null argument"); st != QSH_OK) return st;
  *out = d->rd.rank();
  return QSH_OK;
}

qsh_status qsh_datum_root_count(const qsh_datum* d, int* out) {
  if (auto st = require(d && out, "null argument"); st != QSH_OK) return st;
  *out = static_cast<int>(d->rd.roots.size());
  return QSH_OK;
}

qsh_status qsh_datum_root_name(const qsh_datum* d, int idx, char** out) {
  if (auto st = require(d && out, "null argument"); st != QSH_OK) return st;
  if (idx < 0 || idx >= static_cast<int>(d->rd.roots.size()))
    return fail(QSH_ERR_INVALID, "root index out of range");
  *out = dup_string(d->rd.roots[idx].name);
  return QSH_OK;
}

void qsh_elem_free(qsh_elem* e) { delete e; }

qsh_status qsh_elem_clone(const qsh_elem* e, qsh_elem** out) {
  if (auto st = require(e && out, "null argument"); st != QSH_OK) return st;
  *out = new qsh_elem(*e);
  return QSH_OK;
}

qsh_status qsh_unit(const qsh_datum* d, qsh_elem** out) {
  return guarded([&]() -> qsh_status {
    if (auto st = require(d && out, "null argument"); st != QSH_OK) return st;
    *out = new qsh_elem{d->id, ShuffleElem<PS>::unit(d->rd.family)};
    return QSH_OK;
  });
}

qsh_status qsh_generator(const qsh_datum* d, int i, int k, qsh_elem** out) {
  return guarded([&]() -> qsh_status {
    if (auto st = require(d && out, "null argument"); st != QSH_OK) return st;
    if (i < 0 || i >= d->rd.rank()) return fail(QSH_ERR_INVALID, "simple root index out of range");
    *out = new qsh_elem{d->id, qsh::generator_image(d->rd, i, k)};
    return QSH_OK;
  });
}

qsh_status qsh_root_vector(const qsh_datum* d, const char* root, int k, qsh_elem** out) {
  return guarded([&]() -> qsh_status {
    if (auto st = require(d && root && out, "null argument"); st != QSH_OK) return st;
    int idx = d->rd.root_index(root);
    *out = new qsh_elem{d->id, qsh::root_vector_image(d->rd, idx, k)};
    return QSH_OK;
  });
}

qsh_status qsh_shuffle(const qsh_elem* a, const qsh_elem* b, qsh_elem** out) {
  return guarded([&]() -> qsh_status {
    if (auto st = require(a && b && out, "null argument"); st != QSH_OK) return st;
    *out = new qsh_elem{a->datum_id, qsh::shuffle(a->e, b->e)};
    return QSH_OK;
  });
}

qsh_status qsh_add(const qsh_elem* a, const qsh_elem* b, qsh_elem** out) {
  return guarded([&]() -> qsh_status {
    if (auto st = require(a && b && out, "null argument"); st != QSH_OK) return st;
    *out = new qsh_elem{a->datum_id, a->e + b->e};
    return QSH_OK;
  });
}

qsh_status qsh_sub(const qsh_elem* a, const qsh_elem* b, qsh_elem** out) {
  return guarded([&]() -> qsh_status {
    if (auto st = require(a && b && out, "null argument"); st != QSH_OK) return st;
    *out = new qsh_elem{a->datum_id, a->e - b->e};
    return QSH_OK;
  });
}

qsh_status qsh_scale(const qsh_elem* e, const char* scalar, qsh_elem** out) {
  return guarded([&]() -> qsh_status {
    if (auto st = require(e && scalar && out, "null argument"); st != QSH_OK) return st;
    *out = new qsh_elem{e->datum_id, e->e.scaled(PS::parse(scalar))};
    return QSH_OK;
  });
}

qsh_status qsh_is_zero(const qsh_elem* e, int* out) {
  if (auto st = require(e && out, "null argument"); st != QSH_OK) return st;
  *out = e->e.is_zero() ? 1 : 0;
  return QSH_OK;
}

qsh_status qsh_equal(const qsh_elem* a, const qsh_elem* b, int* out) {
  return guarded([&]() -> qsh_status {
    if (auto st = require(a && b && out, "null argument"); st != QSH_OK) return st;
    *out = (a->e == b->e) ? 1 : 0;
    return QSH_OK;
  });
}

qsh_status qsh_grading(const qsh_elem* e, int* buf, int buf_len, int* written) {
  if (auto st = require(e && buf && written, "null argument"); st != QSH_OK) return st;
  const auto& g = e->e.grading();
  if (buf_len < static_cast<int>(g.size())) return fail(QSH_ERR_INVALID, "buffer too small");
  for (size_t i = 0; i < g.size(); ++i) buf[i] = g[i];
  *written = static_cast<int>(g.size());
  return QSH_OK;
}

qsh_status qsh_elem_to_json(const qsh_elem* e, char** out) {
  return guarded([&]() -> qsh_status {
    if (auto st = require(e && out, "null argument"); st != QSH_OK) return st;
    nlohmann::json j;
    j["datum"] = e->datum_id;
    j["grading"] = e->e.grading();
    j["numerator"] = qsh::laurent_to_json(e->e.num(), var_names(e->e));
    *out = dup_string(j.dump());
    return QSH_OK;
  });
}

qsh_status qsh_elem_from_json(const qsh_datum* d, const char* json, qsh_elem** out) {
  return guarded([&]() -> qsh_status {
    if (auto st = require(d && json && out, "null argument"); st != QSH_OK) return st;
    nlohmann::json j = nlohmann::json::parse(json);
    if (j.at("datum").get<std::string>() != d->id)
      return fail(QSH_ERR_INVALID, "element belongs to a different presentation");
    auto grading = j.at("grading").get<std::vector<int>>();
    auto num = qsh::laurent_from_json(j.at("numerator"));
    // The constructor validates arity and group symmetry.
    *out = new qsh_elem{d->id, ShuffleElem<PS>(d->rd.family, grading, std::move(num))};
    return QSH_OK;
  });
}

qsh_status qsh_decompose(const qsh_datum* d, const qsh_elem* e, int lo, int hi,
                         char** json_out) {
  return guarded([&]() -> qsh_status {
    if (auto st = require(d && e && json_out, "null argument"); st != QSH_OK) return st;
    if (lo > hi) return fail(QSH_ERR_INVALID, "empty mode window");
    std::map<HFunction, PS> coeffs;
    try {
      coeffs = qsh::pbw_decompose(d->rd, e->e, lo, hi);
    } catch (const qsh::NotInSpan&) {
      return fail(QSH_ERR_NOT_IN_SPAN,
                  "not a combination of ordered products with modes in [" +
                      std::to_string(lo) + ", " + std::to_string(hi) +
                      "]; try widening the window to [" + std::to_string(lo - 1) + ", " +
                      std::to_string(hi + 1) + "]");
    }
    nlohmann::json j;
    j["window"] = {lo, hi};
    j["terms"] = nlohmann::json::array();
    for (const auto& [h, c] : coeffs) {
      nlohmann::json t;
      t["modes"] = h.modes;
      t["coeff"] = c.str();
      j["terms"].push_back(std::move(t));
    }
    *json_out = dup_string(j.dump());
    return QSH_OK;
  });
}

qsh_status qsh_run_relations(const qsh_datum* d, int kmin, int kmax, char** report,
                             int* failures) {
  return guarded([&]() -> qsh_status {
    if (auto st = require(d != nullptr, "null datum"); st != QSH_OK) return st;
    if (kmin > kmax) return fail(QSH_ERR_INVALID, "empty mode window");
    return emit_report("relations:" + d->id, qsh::check_defining_relations(d->rd, kmin, kmax),
                       report, failures);
  });
}

qsh_status qsh_run_comm_lemmas(const qsh_datum* d, int kmin, int kmax, char** report,
                               int* failures) {
  return guarded([&]() -> qsh_status {
    if (auto st = require(d != nullptr, "null datum"); st != QSH_OK) return st;
    if (kmin > kmax) return fail(QSH_ERR_INVALID, "empty mode window");
    return emit_report("comm-lemmas:" + d->id, qsh::check_comm_lemmas(d->rd, kmin, kmax),
                       report, failures);
  });
}

qsh_status qsh_run_elementary(const qsh_datum* d, int nmax, int kmax, char** report,
                              int* failures) {
  return guarded([&]() -> qsh_status {
    if (auto st = require(d != nullptr, "null datum"); st != QSH_OK) return st;
    return emit_report("elementary:" + d->id, qsh::elementary_product_check(d->rd, nmax, kmax),
                       report, failures);
  });
}

qsh_status qsh_run_pbw(const qsh_datum* d, const int* grading, int rank, int lo, int hi,
                       char** report, int* failures) {
  return guarded([&]() -> qsh_status {
    if (auto st = require(d && grading && report && failures, "null argument"); st != QSH_OK)
      return st;
    if (rank != d->rd.rank()) return fail(QSH_ERR_INVALID, "grading length != rank");
    for (int i = 0; i < rank; ++i)
      if (grading[i] < 0) return fail(QSH_ERR_INVALID, "grading must be non-negative");
    std::vector<int> g(grading, grading + rank);
    auto hs = qsh::enumerate_h(d->rd, g, lo, hi);
    auto images = ordered_map(static_cast<int>(hs.size()),
                              [&](int i) { return qsh::pbw_image(d->rd, hs[i]); });
    int r = qsh::independence_rank(images);
    CheckLog log;
    std::ostringstream id;
    id << "rank:g=" << grading_key(grading, rank) << ";w=" << lo << ".." << hi;
    log.emplace_back(id.str(), r == static_cast<int>(hs.size()));
    *failures = 0;
    std::ostringstream os;
    os << kReportHeader;
    os << (log[0].second ? "PASS" : "FAIL") << "\tpbw:" << d->id << '\t' << log[0].first
       << "\trank=" << r << " count=" << hs.size() << '\n';
    if (!log[0].second) ++*failures;
    *report = dup_string(os.str());
    return QSH_OK;
  });
}

qsh_status qsh_run_specialization(const qsh_datum* d, const int* grading, int rank, int lo,
                                  int hi, char** report, int* failures) {
  return guarded([&]() -> qsh_status {
    if (auto st = require(d && grading && report && failures, "null argument"); st != QSH_OK)
      return st;
    if (rank != d->rd.rank()) return fail(QSH_ERR_INVALID, "grading length != rank");
    std::vector<int> g(grading, grading + rank);
    auto hs = qsh::enumerate_h(d->rd, g, lo, hi);
    auto logs = ordered_map(static_cast<int>(hs.size()),
                            [&](int i) { return qsh::check_specialization_of(d->rd, hs[i]); });
    std::ostringstream os;
    os << kReportHeader;
    *failures = 0;
    for (const auto& log : logs) append_log(os, "specialization:" + d->id, log, failures);
    *report = dup_string(os.str());
    return QSH_OK;
  });
}

qsh_status qsh_run_rou_nilpotency(int t, int kmax, int mmax, char** report, int* failures) {
  return guarded([&]() -> qsh_status {
    if (t < 1) return fail(QSH_ERR_INVALID, "order parameter must be positive");
    if (t == 1) {
      // Degenerate order: the multiplicity bound t-1 is zero, so there is no
      // nonzero power to test; report the vacuous case explicitly.
      std::ostringstream os;
      os << kReportHeader << "PASS\trou-nilpotency\tgamma-power:1\tvacuous-degenerate-order\n";
      *failures = 0;
      *report = dup_string(os.str());
      return QSH_OK;
    }
    return emit_report("rou-nilpotency", qsh::nilpotency_check(t, kmax, mmax), report,
                       failures);
  });
}

qsh_status qsh_run_rou_independence(int t, int nmax, int mmax, int lo, int hi, char** report,
                                    int* failures) {
  return guarded([&]() -> qsh_status {
    if (t < 1) return fail(QSH_ERR_INVALID, "order parameter must be positive");
    return emit_report("rou-independence", qsh::rou_independence_check(t, nmax, mmax, lo, hi),
                       report, failures);
  });
}

qsh_status qsh_run_rou_toy(int t, char** report, int* failures) {
  return guarded([&]() -> qsh_status {
    if (t < 1) return fail(QSH_ERR_INVALID, "order parameter must be positive");
    return emit_report("rou-generators", qsh::toy_check(t), report, failures);
  });
}

qsh_status qsh_run_rou_wheeldim(int t, int n, int m, int dmax, int lo, char** report,
                                int* failures) {
  return guarded([&]() -> qsh_status {
    if (t < 1) return fail(QSH_ERR_INVALID, "order parameter must be positive");
    if (n < 0 || m < 0 || dmax < 0) return fail(QSH_ERR_INVALID, "negative grading or degree");
    if (!report || !failures) return fail(QSH_ERR_INVALID, "null output pointer");
    qsh::RouContext ctx = qsh::rou_context(t);
    struct Row {
      int adm = 0, wheel = 0, span = 0;
    };
    auto rows = ordered_map(dmax + 1, [&](int D) {
      Row r;
      r.adm = static_cast<int>(qsh::admissible_h_of_degree(ctx, n, m, D, lo).size());
      r.wheel = qsh::lambda_wheel_dimension(ctx, n, m, D);
      r.span = qsh::lambda_zeta_dimension(ctx, n, m, D, lo);
      return r;
    });
    std::ostringstream os;
    os << kReportHeader;
    *failures = 0;
    for (int D = 0; D <= dmax; ++D) {
      bool ok = rows[D].wheel == rows[D].span;
      if (!ok) ++*failures;
      os << (ok ? "PASS" : "FAIL") << "\trou-wheel-dim\t"
         << "t=" << t << ";g=" << n << "," << m << ";D=" << D << '\t'
         << "admissible=" << rows[D].adm << " wheel-dim=" << rows[D].wheel
         << " span-dim=" << rows[D].span << (ok ? " EQUAL" : " MISMATCH") << '\n';
    }
    *report = dup_string(os.str());
    return QSH_OK;
  });
}

qsh_status qsh_run_sym_basis(int t, int n, int dmax, char** report, int* failures) {
  return guarded([&]() -> qsh_status {
    if (t < 1) return fail(QSH_ERR_INVALID, "order parameter must be positive");
    return emit_report("sym-basis", qsh::boris_check(t, n, dmax), report, failures);
  });
}

}  // extern "C"
