#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qshuffle/rational.hpp"

namespace qsh {

/// Exponent pair (v-exponent, u-exponent), lex-ordered with v > u.
struct Exp2 {
  int32_t v = 0;
  int32_t u = 0;
  friend bool operator<(const Exp2& a, const Exp2& b) {
    return a.v != b.v ? a.v < b.v : a.u < b.u;
  }
  friend bool operator==(const Exp2& a, const Exp2& b) { return a.v == b.v && a.u == b.u; }
};

/// Sparse bivariate Laurent polynomial in (v, u) with rational coefficients.
/// No zero coefficients are stored.
class BivPoly {
 public:
  std::map<Exp2, Rat> terms;

  BivPoly() = default;
  static BivPoly constant(const Rat& c) {
    BivPoly p;
    if (!qsh::is_zero(c)) p.terms[{0, 0}] = c;
    return p;
  }
  static BivPoly monomial(const Rat& c, int32_t a, int32_t b) {
    BivPoly p;
    if (!qsh::is_zero(c)) p.terms[{a, b}] = c;
    return p;
  }

  bool is_zero() const { return terms.empty(); }
  bool is_one() const {
    return terms.size() == 1 && terms.begin()->first == Exp2{0, 0} && terms.begin()->second == 1;
  }
  bool is_monomial() const { return terms.size() == 1; }

  void add_term(const Exp2& e, const Rat& c) {
    if (qsh::is_zero(c)) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, c);
    } else {
      it->second += c;
      if (qsh::is_zero(it->second)) terms.erase(it);
    }
  }

  friend BivPoly operator+(const BivPoly& a, const BivPoly& b) {
    BivPoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
  }
  friend BivPoly operator-(const BivPoly& a, const BivPoly& b) {
    BivPoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, -c);
    return r;
  }
  friend BivPoly operator-(const BivPoly& a) {
    BivPoly r;
    for (const auto& [e, c] : a.terms) r.terms.emplace(e, -c);
    return r;
  }
  friend BivPoly operator*(const BivPoly& a, const BivPoly& b) {
    BivPoly r;
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms)
        r.add_term({ea.v + eb.v, ea.u + eb.u}, ca * cb);
    return r;
  }
  BivPoly scaled(const Rat& c) const {
    BivPoly r;
    if (qsh::is_zero(c)) return r;
    for (const auto& [e, cc] : terms) r.terms.emplace(e, cc * c);
    return r;
  }
  BivPoly shifted(int32_t dv, int32_t du) const {
    BivPoly r;
    for (const auto& [e, c] : terms) r.terms.emplace(Exp2{e.v + dv, e.u + du}, c);
    return r;
  }

  friend bool operator==(const BivPoly& a, const BivPoly& b) { return a.terms == b.terms; }

  /// Leading term in lex order v > u.
  std::pair<Exp2, Rat> leading() const {
    if (terms.empty()) throw std::logic_error("leading term of zero polynomial");
    auto it = std::prev(terms.end());
    return {it->first, it->second};
  }

  int32_t min_vexp() const {
    int32_t m = INT32_MAX;
    for (const auto& [e, c] : terms) m = std::min(m, e.v);
    return m;
  }
  int32_t min_uexp() const {
    int32_t m = INT32_MAX;
    for (const auto& [e, c] : terms) m = std::min(m, e.u);
    return m;
  }
  int32_t max_vexp() const {
    int32_t m = INT32_MIN;
    for (const auto& [e, c] : terms) m = std::max(m, e.v);
    return m;
  }
  int32_t max_uexp() const {
    int32_t m = INT32_MIN;
    for (const auto& [e, c] : terms) m = std::max(m, e.u);
    return m;
  }

  /// Rational content: positive gcd of numerators over lcm of denominators.
  Rat content() const {
    if (terms.empty()) return Rat(0);
    mpz_class g = 0, l = 1;
    for (const auto& [e, c] : terms) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat r(g, l);
    r.canonicalize();
    return r;
  }

  Rat eval(const Rat& v0, const Rat& u0) const {
    Rat acc(0);
    for (const auto& [e, c] : terms) acc += c * rat_pow(v0, e.v) * rat_pow(u0, e.u);
    return acc;
  }
};

namespace detail {

/// Univariate rational polynomial, dense, for GCD work. coeffs[i] multiplies v^i.
using UniPoly = std::vector<Rat>;

inline void uni_trim(UniPoly& p) {
  while (!p.empty() && qsh::is_zero(p.back())) p.pop_back();
}

inline UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  uni_trim(r);
  return r;
}

/// Remainder of a by b; b nonzero.
inline UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat q = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
    uni_trim(a);
  }
  return a;
}

/// Exact quotient a / b; throws if not divisible.
inline UniPoly uni_div_exact(UniPoly a, const UniPoly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  UniPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rat c = a.back() / b.back();
    size_t off = a.size() - b.size();
    q[off] = c;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
    uni_trim(a);
  }
  if (!a.empty()) throw std::domain_error("inexact univariate division");
  uni_trim(q);
  return q;
}

/// Scale to a primitive integer polynomial (gcd of coefficients 1).
using IntPoly = std::vector<mpz_class>;

inline IntPoly uni_to_primitive_int(const UniPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  IntPoly z(p.size());
  mpz_class g = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    z[i] = p[i].get_num() * (l / p[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& c : z) c /= g;
  return z;
}

inline void int_trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline void int_primitive(IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : p) c /= g;
}

/// Fraction-free pseudo-remainder of a by b over Z.
inline IntPoly int_prem(IntPoly a, const IntPoly& b) {
  const mpz_class& lcb = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    mpz_class lca = a.back();
    size_t off = a.size() - b.size();
    for (auto& c : a) c *= lcb;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= lca * b[i];
    int_trim(a);
  }
  return a;
}

/// Monic gcd over Q[v], computed by a primitive PRS over Z to avoid
/// rational coefficient swell.
inline UniPoly uni_gcd(UniPoly a0, UniPoly b0) {
  uni_trim(a0);
  uni_trim(b0);
  if (a0.empty()) {
    if (!b0.empty()) {
      Rat lc = b0.back();
      for (auto& c : b0) c /= lc;
    }
    return b0;
  }
  if (b0.empty()) {
    Rat lc = a0.back();
    for (auto& c : a0) c /= lc;
    return a0;
  }
  IntPoly a = uni_to_primitive_int(a0), b = uni_to_primitive_int(b0);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = int_prem(a, b);
    int_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  UniPoly g(a.size());
  for (size_t i = 0; i < a.size(); ++i) g[i] = Rat(a[i]) / Rat(a.back());
  return g;
}

}  // namespace detail

/// Exact multivariate division f / g in Q[v,u] (ordinary exponents assumed
/// non-negative after shifting by the caller). Throws on inexact division.
inline BivPoly biv_div_exact(BivPoly f, const BivPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  BivPoly q;
  auto [lg, cg] = g.leading();
  while (!f.is_zero()) {
    auto [lf, cf] = f.leading();
    if (lf.v < lg.v || lf.u < lg.u) throw std::domain_error("inexact bivariate division");
    Exp2 e{lf.v - lg.v, lf.u - lg.u};
    Rat c = cf / cg;
    q.add_term(e, c);
    f = f - g * BivPoly::monomial(c, e.v, e.u);
  }
  return q;
}

/// GCD in Q[v,u] (non-negative exponents), normalized primitive with positive
/// leading coefficient in lex order v > u. Uses the Q[v][u] content/primitive
/// split with a primitive PRS on the primitive parts.
BivPoly biv_gcd(const BivPoly& a, const BivPoly& b);

}  // namespace qsh
