// Batch driver for the shuffle-algebra library. Every verification suite and
// computation is exposed as a subcommand with line-oriented, machine-readable
// output (schema header "qshuffle-report\t1", one "STATUS\tsuite\tid\tdetail"
// line per instance). Exit codes: 0 all checks pass, 1 verification failure
// or decomposition miss, 2 configuration error. The QSHUFFLE_WORKERS
// environment variable sets the worker-thread count for independent
// instances; output is canonically ordered regardless.
#include <CLI11.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qshuffle.h"

namespace {

struct DatumDeleter {
  void operator()(qsh_datum* d) const { qsh_datum_free(d); }
};
struct ElemDeleter {
  void operator()(qsh_elem* e) const { qsh_elem_free(e); }
};
using DatumPtr = std::unique_ptr<qsh_datum, DatumDeleter>;
using ElemPtr = std::unique_ptr<qsh_elem, ElemDeleter>;

[[noreturn]] void config_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(2);
}

DatumPtr open_datum(const std::string& id) {
  qsh_datum* d = nullptr;
  if (qsh_datum_create(id.c_str(), &d) != QSH_OK) config_error(qsh_last_error());
  return DatumPtr(d);
}

std::pair<int, int> parse_window(const std::string& w) {
  auto dots = w.find("..");
  if (dots == std::string::npos) config_error("window must be of the form a..b: " + w);
  try {
    int lo = std::stoi(w.substr(0, dots));
    int hi = std::stoi(w.substr(dots + 2));
    if (lo > hi) config_error("empty window: " + w);
    return {lo, hi};
  } catch (const std::exception&) {
    config_error("window must be of the form a..b: " + w);
  }
}

std::vector<int> parse_grading(const std::string& g) {
  std::vector<int> out;
  size_t pos = 0;
  try {
    while (pos <= g.size()) {
      size_t comma = g.find(',', pos);
      std::string part = g.substr(pos, comma == std::string::npos ? comma : comma - pos);
      out.push_back(std::stoi(part));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } catch (const std::exception&) {
    config_error("grading must be comma-separated integers: " + g);
  }
  for (int x : out)
    if (x < 0) config_error("grading must be non-negative: " + g);
  return out;
}

/// Emit a suite report and fold its failure count into the process result.
struct Reporter {
  std::ostream* out = &std::cout;
  std::ofstream file;
  int failures = 0;
  bool wrote_header = false;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) config_error("cannot open output file: " + path);
    out = &file;
  }

  /// Runs one suite; reports from the library each start with the schema
  /// header, printed once and stripped from subsequent chunks.
  template <class Fn>
  void run(Fn&& suite) {
    char* report = nullptr;
    int fail_count = 0;
    if (suite(&report, &fail_count) != QSH_OK) config_error(qsh_last_error());
    std::string text(report);
    qsh_string_free(report);
    const std::string header = "qshuffle-report\t1\n";
    if (text.rfind(header, 0) == 0) {
      if (wrote_header) text.erase(0, header.size());
      wrote_header = true;
    }
    *out << text;
    failures += fail_count;
  }

  int exit_code() const { return failures == 0 ? 0 : 1; }
};

/// ---------------------------------------------------------------------------
/// Expression parsing for eval/decompose. Grammar:
///   expr    := product (' + ' product)*
///   product := factor (' * ' factor)*
///   factor  := generator | root vector | scalar
/// A generator is e<i> with an optional mode, written e1:3 or e1 (mode 0);
/// the rank-2 presentation also accepts p/q for e1/e2 and r for the composite
/// root vector (p1 = p:1 etc.). A root-vector factor is a positive-root name
/// with optional :mode (e.g. gamma:2, alpha123). Any other token is read as a
/// coefficient-field scalar (e.g. 1/2, v^-1).
ElemPtr parse_expression(const qsh_datum* d, const std::string& id, const std::string& text);

std::vector<std::string> split_trim(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t next = s.find(sep, pos);
    std::string part = s.substr(pos, next == std::string::npos ? next : next - pos);
    size_t a = part.find_first_not_of(" \t");
    size_t b = part.find_last_not_of(" \t");
    out.push_back(a == std::string::npos ? "" : part.substr(a, b - a + 1));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

/// Splits "name:mode" / "name<digits>" into the name and the mode (default 0).
std::pair<std::string, int> split_mode(const std::string& tok) {
  auto colon = tok.find(':');
  if (colon != std::string::npos) {
    try {
      return {tok.substr(0, colon), std::stoi(tok.substr(colon + 1))};
    } catch (const std::exception&) {
      config_error("bad mode in factor: " + tok);
    }
  }
  size_t tail = tok.size();
  while (tail > 0 && std::isdigit(static_cast<unsigned char>(tok[tail - 1]))) --tail;
  if (tail == tok.size() || tail == 0) return {tok, 0};
  return {tok.substr(0, tail), std::stoi(tok.substr(tail))};
}

std::optional<ElemPtr> make_factor(const qsh_datum* d, const std::string& id,
                                   const std::string& tok) {
  if (tok.empty() || !std::isalpha(static_cast<unsigned char>(tok[0]))) return std::nullopt;
  auto [name, mode] = split_mode(tok);
  qsh_elem* e = nullptr;
  if (name.size() == 2 && name[0] == 'e' && std::isdigit(static_cast<unsigned char>(name[1]))) {
    if (qsh_generator(d, name[1] - '1', mode, &e) != QSH_OK) config_error(qsh_last_error());
    return ElemPtr(e);
  }
  if (id == "sl21" && (name == "p" || name == "q")) {
    if (qsh_generator(d, name == "p" ? 0 : 1, mode, &e) != QSH_OK)
      config_error(qsh_last_error());
    return ElemPtr(e);
  }
  std::string root = (id == "sl21" && name == "r") ? "gamma" : name;
  if (qsh_root_vector(d, root.c_str(), mode, &e) == QSH_OK) return ElemPtr(e);
  return std::nullopt;
}

ElemPtr parse_expression(const qsh_datum* d, const std::string& id, const std::string& text) {
  ElemPtr total;
  for (const std::string& summand : split_trim(text, '+')) {
    if (summand.empty()) config_error("empty summand in expression");
    ElemPtr term;
    std::vector<std::string> scalars;
    for (const std::string& tok : split_trim(summand, '*')) {
      if (tok.empty()) config_error("empty factor in expression");
      if (auto f = make_factor(d, id, tok)) {
        if (!term) {
          term = std::move(*f);
        } else {
          qsh_elem* p = nullptr;
          if (qsh_shuffle(term.get(), f->get(), &p) != QSH_OK) config_error(qsh_last_error());
          term.reset(p);
        }
      } else {
        scalars.push_back(tok);  // applied once the term has a shape
      }
    }
    if (!term) config_error("summand has no generator factor: " + summand);
    for (const std::string& s : scalars) {
      qsh_elem* scaled = nullptr;
      if (qsh_scale(term.get(), s.c_str(), &scaled) != QSH_OK)
        config_error("bad factor '" + s + "': " + qsh_last_error());
      term.reset(scaled);
    }
    if (!total) {
      total = std::move(term);
    } else {
      qsh_elem* sum = nullptr;
      if (qsh_add(total.get(), term.get(), &sum) != QSH_OK) config_error(qsh_last_error());
      total.reset(sum);
    }
  }
  if (!total) config_error("empty expression");
  return total;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) config_error("cannot open output file: " + path);
  f << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact shuffle-algebra computations and verification suites"};
  app.require_subcommand(1);

  std::string presentation = "sl21", window = "-1..1", grading_str, expr, out_path;
  int t = 2, degree = -1, lo_flag = -2, sym_n = -1, nilp_kmax = 2, nilp_mmax = -1;
  bool with_nilpotency = false, with_toy = false, with_independence = false;

  auto* rel = app.add_subcommand("verify-relations",
                                 "check every defining relation (plus the commutation "
                                 "identities for sl21) over a mode window");
  rel->add_option("--presentation", presentation, "sl21 | d21f | d21o");
  rel->add_option("--window", window, "mode window a..b");
  rel->add_option("--out", out_path, "write the report to a file");

  auto* pbw = app.add_subcommand("pbw",
                                 "candidate count vs exact rank of ordered root-vector "
                                 "products at one grading, plus specialization checks");
  pbw->add_option("--presentation", presentation, "sl21 | d21f | d21o");
  pbw->add_option("--grading", grading_str, "comma-separated grading, e.g. 1,1")->required();
  pbw->add_option("--window", window, "mode window a..b");
  pbw->add_option("--out", out_path, "write the report to a file");

  auto* rou = app.add_subcommand("rou", "root-of-unity suites for order parameter t");
  rou->add_option("--t", t, "order parameter (>= 1)")->required();
  rou->add_flag("--nilpotency", with_nilpotency, "shuffle-power vanishing threshold");
  rou->add_flag("--toy", with_toy, "factor structures of the small generator products");
  rou->add_flag("--independence", with_independence,
                "admissible product independence at small gradings");
  rou->add_option("--grading", grading_str, "n,m for the wheel-dimension table");
  rou->add_option("--degree", degree, "max numerator degree for the table");
  rou->add_option("--lo", lo_flag, "mode lower bound for admissible products");
  rou->add_option("--sym-basis", sym_n,
                  "one-group algebra: admissible basis checks in n variables");
  rou->add_option("--kmax", nilp_kmax, "max generator mode for nilpotency");
  rou->add_option("--mmax", nilp_mmax, "max power for nilpotency (default t+1)");
  rou->add_option("--out", out_path, "write the report to a file");

  auto* eval = app.add_subcommand("eval", "evaluate a generator expression; prints JSON");
  eval->add_option("--presentation", presentation, "sl21 | d21f | d21o");
  eval->add_option("--expr", expr, "e.g. \"p1 * q0\" or \"e1:0 * e2:1 + v^-1 * gamma:0\"")
      ->required();
  eval->add_option("--out", out_path, "write the element to a file");

  auto* dec = app.add_subcommand("decompose",
                                 "decompose an expression over ordered root-vector "
                                 "products; prints the coefficient map as JSON");
  dec->add_option("--presentation", presentation, "sl21 | d21f | d21o");
  dec->add_option("--expr", expr, "expression, as for eval")->required();
  dec->add_option("--window", window, "mode window a..b");
  dec->add_option("--out", out_path, "write the coefficients to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (rel->parsed()) {
    auto [lo, hi] = parse_window(window);
    DatumPtr d = open_datum(presentation);
    Reporter rep;
    rep.open(out_path);
    rep.run([&](char** r, int* f) { return qsh_run_relations(d.get(), lo, hi, r, f); });
    if (presentation == "sl21")
      rep.run([&](char** r, int* f) { return qsh_run_comm_lemmas(d.get(), lo, hi, r, f); });
    return rep.exit_code();
  }

  if (pbw->parsed()) {
    auto [lo, hi] = parse_window(window);
    DatumPtr d = open_datum(presentation);
    std::vector<int> g = parse_grading(grading_str);
    Reporter rep;
    rep.open(out_path);
    int rank = static_cast<int>(g.size());
    rep.run([&](char** r, int* f) { return qsh_run_pbw(d.get(), g.data(), rank, lo, hi, r, f); });
    rep.run([&](char** r, int* f) {
      return qsh_run_specialization(d.get(), g.data(), rank, lo, hi, r, f);
    });
    return rep.exit_code();
  }

  if (rou->parsed()) {
    bool table = !grading_str.empty();
    bool sym = sym_n >= 0;
    // With no suite selected, run the quick ones.
    if (!with_nilpotency && !with_toy && !with_independence && !table && !sym)
      with_nilpotency = with_toy = true;
    Reporter rep;
    rep.open(out_path);
    if (with_nilpotency) {
      int mmax = nilp_mmax < 0 ? t + 1 : nilp_mmax;
      rep.run([&](char** r, int* f) { return qsh_run_rou_nilpotency(t, nilp_kmax, mmax, r, f); });
    }
    if (with_toy) rep.run([&](char** r, int* f) { return qsh_run_rou_toy(t, r, f); });
    if (with_independence)
      rep.run([&](char** r, int* f) {
        return qsh_run_rou_independence(t, t + 1, t + 1, 0, 1, r, f);
      });
    if (table) {
      std::vector<int> g = parse_grading(grading_str);
      if (g.size() != 2) config_error("the wheel-dimension table needs a grading n,m");
      int dmax = degree >= 0 ? degree : 2 * (g[0] + g[1]);
      rep.run([&](char** r, int* f) {
        return qsh_run_rou_wheeldim(t, g[0], g[1], dmax, lo_flag, r, f);
      });
    }
    if (sym) {
      int dmax = degree >= 0 ? degree : 2 * sym_n;
      rep.run([&](char** r, int* f) { return qsh_run_sym_basis(t, sym_n, dmax, r, f); });
    }
    return rep.exit_code();
  }

  if (eval->parsed()) {
    DatumPtr d = open_datum(presentation);
    ElemPtr e = parse_expression(d.get(), presentation, expr);
    char* json = nullptr;
    if (qsh_elem_to_json(e.get(), &json) != QSH_OK) config_error(qsh_last_error());
    std::string text(json);
    qsh_string_free(json);
    write_output(out_path, text);
    return 0;
  }

  if (dec->parsed()) {
    auto [lo, hi] = parse_window(window);
    DatumPtr d = open_datum(presentation);
    ElemPtr e = parse_expression(d.get(), presentation, expr);
    char* json = nullptr;
    qsh_status st = qsh_decompose(d.get(), e.get(), lo, hi, &json);
    if (st == QSH_ERR_NOT_IN_SPAN) {
      std::cerr << "error: " << qsh_last_error() << "\n";
      return 1;
    }
    if (st != QSH_OK) config_error(qsh_last_error());
    std::string text(json);
    qsh_string_free(json);
    write_output(out_path, text);
    return 0;
  }

  return 2;
}
