#include "qshuffle/bivpoly.hpp"

namespace qsh {
namespace {

using detail::IntPoly;
using detail::int_prem;
using detail::int_primitive;
using detail::int_trim;

IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

/// Primitive gcd over Z[v] via primitive PRS.
IntPoly int_gcd(IntPoly a, IntPoly b) {
  int_trim(a);
  int_trim(b);
  if (a.empty()) {
    int_primitive(b);
    if (!b.empty() && b.back() < 0)
      for (auto& c : b) c = -c;
    return b;
  }
  if (b.empty()) return int_gcd(b, a);
  int_primitive(a);
  int_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = int_prem(a, b);
    int_trim(r);
    int_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

/// Exact quotient over Z[v] (throws if not exactly divisible in Q[v];
/// the uses below guarantee the quotient has integer coefficients).
IntPoly int_div_exact(IntPoly a, const IntPoly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  int_trim(a);
  IntPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpz_class(0));
  while (a.size() >= b.size() && !a.empty()) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t()))
      throw std::domain_error("inexact integer polynomial division");
    mpz_class c = a.back() / b.back();
    size_t off = a.size() - b.size();
    q[off] = c;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
    int_trim(a);
  }
  if (!a.empty()) throw std::domain_error("inexact integer polynomial division");
  return q;
}

using ZBiv = std::vector<IntPoly>;  // index = u-degree, entries in Z[v]

void zbiv_trim(ZBiv& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

/// Clear denominators: view of p in Z[v][u] up to a positive rational factor.
ZBiv z_view(const BivPoly& p) {
  mpz_class l = 1;
  for (const auto& [e, c] : p.terms)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  ZBiv view;
  for (const auto& [e, c] : p.terms) {
    if (e.v < 0 || e.u < 0) throw std::logic_error("biv_gcd expects ordinary exponents");
    if (view.size() <= static_cast<size_t>(e.u)) view.resize(e.u + 1);
    auto& coef = view[e.u];
    if (coef.size() <= static_cast<size_t>(e.v)) coef.resize(e.v + 1, mpz_class(0));
    coef[e.v] = c.get_num() * (l / c.get_den());
  }
  for (auto& coef : view) int_trim(coef);
  zbiv_trim(view);
  return view;
}

BivPoly from_z_view(const ZBiv& view) {
  BivPoly p;
  for (size_t k = 0; k < view.size(); ++k)
    for (size_t i = 0; i < view[k].size(); ++i)
      if (view[k][i] != 0)
        p.terms[{static_cast<int32_t>(i), static_cast<int32_t>(k)}] = Rat(view[k][i]);
  return p;
}

IntPoly content_u(const ZBiv& a) {
  IntPoly g;
  for (const auto& c : a) g = int_gcd(g, c);
  return g;
}

ZBiv divide_coeffs(const ZBiv& a, const IntPoly& d) {
  ZBiv r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].empty()) r[i] = int_div_exact(a[i], d);
  return r;
}

/// Pseudo-remainder of a by b in Z[v][u]; the degree is the u-degree.
ZBiv pseudo_rem(ZBiv a, const ZBiv& b) {
  const IntPoly& lcb = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    IntPoly lca = a.back();
    size_t off = a.size() - b.size();
    // a := lcb*a - lca*u^off*b, dropping the u-degree of a.
    ZBiv next(a.size());
    for (size_t i = 0; i + 1 < a.size(); ++i) next[i] = int_mul(lcb, a[i]);
    for (size_t i = 0; i < b.size(); ++i) {
      IntPoly t = int_mul(lca, b[i]);
      IntPoly& dst = next[off + i];
      if (dst.size() < t.size()) dst.resize(t.size(), mpz_class(0));
      for (size_t j = 0; j < t.size(); ++j) dst[j] -= t[j];
      int_trim(dst);
    }
    next.pop_back();
    zbiv_trim(next);
    a = std::move(next);
  }
  return a;
}

ZBiv primitive_part(ZBiv a) {
  zbiv_trim(a);
  IntPoly c = content_u(a);
  if (c.empty() || (c.size() == 1 && c[0] == 1)) return a;
  return divide_coeffs(a, c);
}

// --- Heuristic gcd (integer evaluation + balanced-digit reconstruction,
// verified by exact trial division; falls back to the PRS on failure). ---

mpz_class int_eval(const IntPoly& p, const mpz_class& xi) {
  mpz_class acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * xi + p[i];
  return acc;
}

mpz_class maxnorm(const IntPoly& p) {
  mpz_class m = 0;
  for (const auto& c : p)
    if (abs(c) > m) m = abs(c);
  return m;
}

mpz_class maxnorm(const ZBiv& p) {
  mpz_class m = 0;
  for (const auto& c : p) {
    mpz_class n = maxnorm(c);
    if (n > m) m = n;
  }
  return m;
}

// Balanced remainder in (-xi/2, xi/2]; also updates n := (n - r) / xi.
mpz_class balanced_digit(mpz_class& n, const mpz_class& xi) {
  mpz_class r = n % xi;  // GMP: sign follows n
  if (2 * r > xi) r -= xi;
  if (2 * r <= -xi) r += xi;
  n = (n - r) / xi;
  return r;
}

bool int_divides(const IntPoly& a, const IntPoly& b) {
  try {
    int_div_exact(a, b);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

// Heuristic gcd over Z[v]; primitive result, or empty-optional on failure.
bool heugcd_uni(const IntPoly& a, const IntPoly& b, IntPoly& out) {
  mpz_class na = maxnorm(a), nb = maxnorm(b);
  mpz_class xi = 2 * (na < nb ? na : nb) + 2;
  if (xi < 4) xi = 4;
  for (int attempt = 0; attempt < 6; ++attempt, xi = xi * 73794 / 27011) {
    mpz_class ea = int_eval(a, xi), eb = int_eval(b, xi);
    if (ea == 0 || eb == 0) continue;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ea.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), eb.get_mpz_t());
    IntPoly cand;
    while (g != 0) cand.push_back(balanced_digit(g, xi));
    int_trim(cand);
    if (cand.empty()) continue;
    // The integer content of cand is meaningful to recursive callers (it is
    // the evaluation of the outer variable's part), so verify divisibility
    // against a primitive copy but return cand intact.
    IntPoly pcand = cand;
    int_primitive(pcand);
    if (int_divides(a, pcand) && int_divides(b, pcand)) {
      out = std::move(cand);
      return true;
    }
  }
  return false;
}

bool zbiv_divides(const ZBiv& a, const ZBiv& b) {
  try {
    biv_div_exact(from_z_view(a), from_z_view(b));
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

// Heuristic gcd over Z[v][u]: evaluate v at a big integer, recurse to the
// univariate (in u) integer gcd, reconstruct the v-digits.
bool heugcd_biv(const ZBiv& a, const ZBiv& b, ZBiv& out) {
  mpz_class na = maxnorm(a), nb = maxnorm(b);
  mpz_class xi = 2 * (na < nb ? na : nb) + 2;
  if (xi < 4) xi = 4;
  for (int attempt = 0; attempt < 6; ++attempt, xi = xi * 73794 / 27011) {
    IntPoly ea(a.size()), eb(b.size());  // polynomials in u
    for (size_t k = 0; k < a.size(); ++k) ea[k] = int_eval(a[k], xi);
    for (size_t k = 0; k < b.size(); ++k) eb[k] = int_eval(b[k], xi);
    int_trim(ea);
    int_trim(eb);
    if (ea.empty() || eb.empty()) continue;
    IntPoly g;
    if (!heugcd_uni(ea, eb, g)) continue;
    // Reconstruct: the v^i digit of each u-coefficient.
    ZBiv cand;  // u-indexed, coefficients in Z[v]
    cand.resize(g.size());
    bool more = true;
    while (more) {
      more = false;
      for (size_t k = 0; k < g.size(); ++k) {
        mpz_class d = balanced_digit(g[k], xi);
        cand[k].push_back(d);
        if (g[k] != 0) more = true;
      }
    }
    for (auto& c : cand) int_trim(c);
    zbiv_trim(cand);
    if (cand.empty()) continue;
    // Primitive over Z (full integer content).
    mpz_class cont = 0;
    for (const auto& c : cand)
      for (const auto& x : c) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), x.get_mpz_t());
    if (cont > 1)
      for (auto& c : cand)
        for (auto& x : c) x /= cont;
    if (zbiv_divides(a, cand) && zbiv_divides(b, cand)) {
      out = std::move(cand);
      return true;
    }
  }
  return false;
}

}  // namespace

BivPoly biv_gcd(const BivPoly& a, const BivPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;

  ZBiv va = z_view(a);
  ZBiv vb = z_view(b);

  if (ZBiv h; heugcd_biv(va, vb, h)) {
    BivPoly result = from_z_view(h);
    Rat cont = result.content();
    if (result.leading().second < 0) cont = -cont;
    BivPoly norm;
    for (const auto& [e, c] : result.terms) norm.terms.emplace(e, c / cont);
    return norm;
  }
  IntPoly ca = content_u(va);
  IntPoly cb = content_u(vb);
  IntPoly cg = int_gcd(ca, cb);

  ZBiv pa = divide_coeffs(va, ca);
  ZBiv pb = divide_coeffs(vb, cb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  // Primitive PRS in u over Z[v].
  while (!pb.empty()) {
    ZBiv r = primitive_part(pseudo_rem(pa, pb));
    pa = std::move(pb);
    pb = std::move(r);
  }
  pa = primitive_part(std::move(pa));

  // Recombine with the content gcd.
  ZBiv g(pa.size());
  for (size_t i = 0; i < pa.size(); ++i) g[i] = int_mul(pa[i], cg);
  BivPoly result = from_z_view(g);

  // Normalize: primitive with positive leading coefficient.
  Rat cont = result.content();
  if (result.leading().second < 0) cont = -cont;
  BivPoly norm;
  for (const auto& [e, c] : result.terms) norm.terms.emplace(e, c / cont);
  return norm;
}

}  // namespace qsh
