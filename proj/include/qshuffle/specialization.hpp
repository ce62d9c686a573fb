#pragma once

#include <numeric>

#include "qshuffle/pbw.hpp"
#include "qshuffle/presentations.hpp"

namespace qsh {

/// ---------------------------------------------------------------------------
/// Specialization maps phi_d.
///
/// A degree vector d assigns a multiplicity d_beta to each positive root; its
/// grading is sum d_beta * beta. phi_d sends the numerator of an element of
/// grading gr(d) to a Laurent polynomial in one variable w_{beta,s} per copy:
/// each group-g slot of a copy of beta is mapped to (coefficient) * w_{beta,s}
/// with presentation-specific coefficients. Different slot assignments only
/// change the overall sign, so a fixed canonical assignment is used
/// throughout: roots in order, copies ascending, copy-internal slots in the
/// written order of the root.
/// ---------------------------------------------------------------------------

template <class K>
std::vector<int> degree_grading(const RootDatum<K>& rd, const std::vector<int>& d) {
  std::vector<int> g(rd.rank(), 0);
  for (size_t b = 0; b < d.size(); ++b)
    for (int i = 0; i < rd.rank(); ++i) g[i] += d[b] * rd.roots[b].comp[i];
  return g;
}

/// All degree vectors with the given grading, ascending in the lex order used
/// for the specialization filtration.
template <class K>
std::vector<std::vector<int>> degree_vectors(const RootDatum<K>& rd,
                                             const std::vector<int>& grading) {
  const int nr = static_cast<int>(rd.roots.size());
  std::vector<std::vector<int>> out;
  std::vector<int> cur(nr, 0), rem = grading;
  std::function<void(int)> rec = [&](int b) {
    if (b == nr) {
      for (int x : rem)
        if (x != 0) return;
      out.push_back(cur);
      return;
    }
    const auto& comp = rd.roots[b].comp;
    int dmax = INT32_MAX;
    for (int i = 0; i < rd.rank(); ++i)
      if (comp[i] > 0) dmax = std::min(dmax, rem[i] / comp[i]);
    if (dmax == INT32_MAX) dmax = 0;
    for (int dv = 0; dv <= dmax; ++dv) {
      cur[b] = dv;
      for (int i = 0; i < rd.rank(); ++i) rem[i] -= dv * comp[i];
      rec(b + 1);
      for (int i = 0; i < rd.rank(); ++i) rem[i] += dv * comp[i];
    }
    cur[b] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Lex comparison matching the filtration order (earlier roots dominate).
inline bool degree_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace spec_detail {

template <class K>
FamilyId datum_kind(const RootDatum<K>& rd) {
  return rd.family->id;
}

/// Coefficient of the image of the `internal`-th group-`g` slot of one copy
/// of roots[b]: slot -> coeff * w_{b,s}.
template <class K>
K spec_coeff(const RootDatum<K>& rd, int b, int g, int internal) {
  const std::string& name = rd.roots[b].name;
  switch (datum_kind(rd)) {
    case FamilyId::Lambda:
      // x -> z, y -> -v z.
      return g == 0 ? K(1) : K(0) - rd.v;
    case FamilyId::OmegaFerm:
      if (g == 0) return K(1);
      if (g == 1) return rd.v;
      // group 3: v^theta for roots through alpha13/alpha123, else v^-theta.
      return (name == "alpha13" || name == "alpha123") ? rd.u : K(1) / rd.u;
    case FamilyId::OmegaOneFerm:
      if (g == 0) return K(1);
      if (g == 2) return K(1) / (rd.v * rd.u);
      if (name == "gamma" && internal == 1) return K(1) / (rd.v * rd.u * rd.u);
      return K(1) / rd.v;
    default:
      throw std::invalid_argument("no specialization for this family");
  }
}

inline std::vector<int> w_offsets(const std::vector<int>& d) {
  std::vector<int> off(d.size(), 0);
  for (size_t b = 1; b < d.size(); ++b) off[b] = off[b - 1] + d[b - 1];
  return off;
}

}  // namespace spec_detail

/// phi_d applied to the numerator of F (grading of F must equal gr(d)).
template <class K>
LaurentPoly<K> phi_d(const RootDatum<K>& rd, const std::vector<int>& d,
                     const ShuffleElem<K>& F) {
  if (degree_grading(rd, d) != F.grading()) throw GradingMismatch();
  const int total = std::accumulate(d.begin(), d.end(), 0);
  std::vector<std::pair<K, int>> plan(F.arity(), {K(0), 0});
  auto off = spec_detail::w_offsets(d);
  for (int g = 0; g < rd.family->group_count(); ++g) {
    int slot = 0;
    for (size_t b = 0; b < d.size(); ++b) {
      int copies_per = rd.roots[b].comp[g];
      for (int s = 0; s < d[b]; ++s)
        for (int internal = 0; internal < copies_per; ++internal) {
          plan[F.var_index(g, slot++)] = {spec_detail::spec_coeff(rd, static_cast<int>(b), g, internal),
                                          off[b] + s};
        }
    }
  }
  return F.num().substitute(plan, total);
}

/// One filtration step for the two-group presentation: re-specialize the
/// image at degree d = (d1, d2, d3) to degree (d1-1, d2+1, d3-1) by merging
/// the last z1 variable with the first z3 variable into a new z2 variable.
/// The factor (-1)^{d2} reconciles the canonical slot assignments of the two
/// degrees: the merged copy enters after the d2 existing middle copies in
/// the first variable group but in place in the second.
template <class K>
LaurentPoly<K> rho_step(const std::vector<int>& d, const LaurentPoly<K>& P) {
  int d1 = d[0], d2 = d[1], d3 = d[2];
  if (d1 < 1 || d3 < 1) throw std::invalid_argument("rho_step needs d1, d3 >= 1");
  const int src = d1 + d2 + d3, tgt = src - 1;
  std::vector<std::pair<K, int>> plan(src, {K(1), 0});
  for (int i = 0; i < d1 - 1; ++i) plan[i] = {K(1), i};                    // z1,i
  plan[d1 - 1] = {K(1), (d1 - 1) + d2};                                    // z1,d1 -> new z2
  for (int i = 0; i < d2; ++i) plan[d1 + i] = {K(1), (d1 - 1) + i};        // z2,i
  plan[d1 + d2] = {K(1), (d1 - 1) + d2};                                   // z3,1 -> new z2
  for (int i = 1; i < d3; ++i) plan[d1 + d2 + i] = {K(1), d1 + d2 + i - 1};
  LaurentPoly<K> out = P.substitute(plan, tgt);
  return (d2 % 2 == 1) ? out.scaled(K(0) - K(1)) : out;
}

/// ---------------------------------------------------------------------------
/// Closed forms of the specialized images.
/// ---------------------------------------------------------------------------

/// Skew-symmetrization of x^{e_1}...x^{e_n} over all variables (with 1/n!).
template <class K>
LaurentPoly<K> asym_monomial(int arity, const std::vector<int>& exps) {
  LaurentPoly<K> mono = LaurentPoly<K>::monomial(arity, ExpVec(exps.begin(), exps.end()), K(1));
  SymGroup grp;
  grp.skew = true;
  grp.vars.resize(arity);
  std::iota(grp.vars.begin(), grp.vars.end(), 0);
  return mono.group_symmetrize({grp});
}

/// Vandermonde prod_{i<j} (x_i - x_j) on the given variable indices.
template <class K>
LaurentPoly<K> vandermonde(int arity, const std::vector<int>& vars) {
  LaurentPoly<K> acc = LaurentPoly<K>::constant(arity, K(1));
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      acc = acc * (LaurentPoly<K>::variable(arity, vars[i]) -
                   LaurentPoly<K>::variable(arity, vars[j]));
  return acc;
}

/// Hall-Littlewood-type symmetric Laurent polynomial with kernel parameter p:
///   Sym( x^{lambda} prod_{i<j} (x_i - p x_j) / (x_i - x_j) )
/// computed as ASym( x^{lambda} prod_{i<j} (x_i - p x_j) ) / Vandermonde.
template <class K>
LaurentPoly<K> hall_littlewood(int n, const std::vector<int>& lambda, const K& p) {
  LaurentPoly<K> f = LaurentPoly<K>::monomial(n, ExpVec(lambda.begin(), lambda.end()), K(1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      f = f * (LaurentPoly<K>::variable(n, i) -
               LaurentPoly<K>::variable(n, j).scaled(p));
  SymGroup grp;
  grp.skew = true;
  grp.vars.resize(n);
  std::iota(grp.vars.begin(), grp.vars.end(), 0);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  return divide_exact(f.group_symmetrize({grp}), vandermonde<K>(n, all));
}

namespace spec_detail {

/// prod over copies s of b1 and r of b2 of (w_{b1,s} - c * w_{b2,r}).
template <class K>
LaurentPoly<K> cross_factor(int arity, int off1, int d1, int off2, int d2, const K& c) {
  LaurentPoly<K> acc = LaurentPoly<K>::constant(arity, K(1));
  for (int s = 0; s < d1; ++s)
    for (int r = 0; r < d2; ++r)
      acc = acc * (LaurentPoly<K>::variable(arity, off1 + s) -
                   LaurentPoly<K>::variable(arity, off2 + r).scaled(c));
  return acc;
}

/// Kernel constants c such that (w_{b,s} - c w_{b',r}) divides the
/// specialized image, for the pair of roots b < b' (as v,u exponent pairs).
template <class K>
std::vector<std::array<int, 2>> pair_constants(const RootDatum<K>& rd, int b1, int b2) {
  const std::string n1 = rd.roots[b1].name, n2 = rd.roots[b2].name;
  if (datum_kind(rd) == FamilyId::OmegaFerm) {
    // Factors indexed by (variable group of b, variable group of b'):
    //   (1,2): 1          (2,1): v^-2
    //   (1,3): 1 if b' goes through v^theta, else v^-2theta
    //   (2,3): v^2theta if b' goes through v^theta, else 1
    //   (3,1): v^-2theta  (3,2): v^2        (i,i): none
    auto through_u = [](const std::string& n) { return n == "alpha13" || n == "alpha123"; };
    std::vector<int> g1, g2;
    for (int i = 0; i < 3; ++i) {
      if (rd.roots[b1].comp[i]) g1.push_back(i + 1);
      if (rd.roots[b2].comp[i]) g2.push_back(i + 1);
    }
    std::vector<std::array<int, 2>> out;
    for (int i : g1)
      for (int j : g2) {
        if (i == j) continue;
        if (i == 1 && j == 2) out.push_back({0, 0});
        if (i == 2 && j == 1) out.push_back({-2, 0});
        if (i == 1 && j == 3) out.push_back(through_u(n2) ? std::array<int, 2>{0, 0}
                                                          : std::array<int, 2>{0, -2});
        if (i == 2 && j == 3) out.push_back(through_u(n2) ? std::array<int, 2>{0, 2}
                                                          : std::array<int, 2>{0, 0});
        if (i == 3 && j == 1) out.push_back({0, -2});
        if (i == 3 && j == 2) out.push_back({2, 0});
      }
    return out;
  }
  if (datum_kind(rd) == FamilyId::OmegaOneFerm) {
    using P = std::pair<std::string, std::string>;
    static const std::map<P, std::vector<std::array<int, 2>>> table = {
        {{"alpha1", "alpha12"}, {{-2, 0}}},
        {{"alpha1", "alpha123"}, {{-2, 0}}},
        {{"alpha1", "gamma"}, {{-2, 0}, {0, -2}}},
        {{"alpha1", "alpha2"}, {{0, 0}}},
        {{"alpha1", "alpha23"}, {{0, 0}}},
        {{"alpha1", "alpha3"}, {}},
        {{"alpha12", "alpha123"}, {{0, 0}, {-2, 0}, {2, 0}}},
        {{"alpha12", "gamma"}, {{0, 0}, {-2, 0}, {2, 0}, {0, -2}}},
        {{"alpha12", "alpha2"}, {{0, 0}}},
        {{"alpha12", "alpha23"}, {{0, 0}, {0, 0}}},
        {{"alpha12", "alpha3"}, {{0, 0}}},
        {{"alpha123", "gamma"}, {{0, 0}, {-2, 0}, {2, 0}, {0, -2}, {0, -2}, {0, 2}}},
        {{"alpha123", "alpha2"}, {{0, 0}, {0, 2}}},
        {{"alpha123", "alpha23"}, {{0, 0}, {0, 2}, {0, -2}}},
        {{"alpha123", "alpha3"}, {{0, -2}}},
        {{"gamma", "alpha2"}, {{0, 0}, {0, 2}}},
        {{"gamma", "alpha23"}, {{0, 0}, {0, 2}, {0, 2}, {0, -2}}},
        {{"gamma", "alpha3"}, {{0, -2}, {0, 2}}},
        {{"alpha2", "alpha23"}, {{0, 0}}},
        {{"alpha2", "alpha3"}, {{0, 0}}},
        {{"alpha23", "alpha3"}, {{0, -2}}},
    };
    return table.at({n1, n2});
  }
  throw std::invalid_argument("no pair table for this family");
}

}  // namespace spec_detail

/// Single-root ordered monomial h restricted to roots[b] with the given modes.
template <class K>
HFunction single_root_h(const RootDatum<K>& rd, int b, const std::vector<int>& modes) {
  HFunction h;
  h.modes.resize(rd.roots.size());
  h.modes[b] = modes;
  return h;
}

/// The specialized image of the single-root monomial on roots[b], as a
/// polynomial in its own d_b variables.
template <class K>
LaurentPoly<K> root_block(const RootDatum<K>& rd, int b, const std::vector<int>& modes) {
  std::vector<int> d(rd.roots.size(), 0);
  d[b] = static_cast<int>(modes.size());
  return phi_d(rd, d, pbw_image(rd, single_root_h(rd, b, modes)));
}

/// Expected specialized image of E_h at its own degree, up to one overall
/// nonzero constant:
///  - two-group presentation: the fully explicit closed form;
///  - three-group presentations: product of the pairwise kernel factors and
///    of the single-root blocks (each computed by the same specialization).
template <class K>
LaurentPoly<K> expected_phi(const RootDatum<K>& rd, const HFunction& h) {
  std::vector<int> d = h.degree();
  auto off = spec_detail::w_offsets(d);
  const int total = std::accumulate(d.begin(), d.end(), 0);

  if (spec_detail::datum_kind(rd) == FamilyId::Lambda) {
    int d1 = d[0], d2 = d[1], d3 = d[2];
    // Z * ASym(z1^a) * ASym(z3^c) * HL_{v^2}(z2^{b+1}).
    LaurentPoly<K> Z = LaurentPoly<K>::constant(total, K(1));
    K one(1);
    Z = Z * spec_detail::cross_factor(total, off[0], d1, off[1], d2, one);
    Z = Z * spec_detail::cross_factor(total, off[0], d1, off[2], d3, one);
    Z = Z * spec_detail::cross_factor(total, off[1], d2, off[2], d3, one);
    std::vector<int> z2(d2);
    std::iota(z2.begin(), z2.end(), off[1]);
    LaurentPoly<K> v2 = vandermonde<K>(total, z2);
    Z = Z * v2 * v2;

    auto embed = [&](const LaurentPoly<K>& p, int offset) {
      std::vector<std::pair<K, int>> plan(p.arity());
      for (int i = 0; i < p.arity(); ++i) plan[i] = {K(1), offset + i};
      return p.substitute(plan, total);
    };
    LaurentPoly<K> a1 = embed(asym_monomial<K>(d1, h.modes[0]), off[0]);
    LaurentPoly<K> a3 = embed(asym_monomial<K>(d3, h.modes[2]), off[2]);
    std::vector<int> bp1 = h.modes[1];
    for (int& x : bp1) x += 1;
    LaurentPoly<K> hl = embed(hall_littlewood<K>(d2, bp1, rd.v * rd.v), off[1]);
    return Z * a1 * a3 * hl;
  }

  LaurentPoly<K> acc = LaurentPoly<K>::constant(total, K(1));
  for (size_t b1 = 0; b1 < d.size(); ++b1) {
    if (d[b1] == 0) continue;
    for (size_t b2 = b1 + 1; b2 < d.size(); ++b2) {
      if (d[b2] == 0) continue;
      for (auto [a, b] : spec_detail::pair_constants(rd, static_cast<int>(b1),
                                                     static_cast<int>(b2)))
        acc = acc * spec_detail::cross_factor(total, off[b1], d[b1], off[b2], d[b2],
                                              rd.vpow(a, b));
    }
  }
  for (size_t b = 0; b < d.size(); ++b) {
    if (d[b] == 0) continue;
    LaurentPoly<K> block = root_block(rd, static_cast<int>(b), h.modes[b]);
    std::vector<std::pair<K, int>> plan(d[b]);
    for (int i = 0; i < d[b]; ++i) plan[i] = {K(1), off[b] + i};
    acc = acc * block.substitute(plan, total);
  }
  return acc;
}

/// True when q = f / g exists and is a single nonzero constant term.
template <class K>
bool equal_up_to_unit(const LaurentPoly<K>& f, const LaurentPoly<K>& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  try {
    LaurentPoly<K> q = divide_exact(f, g);
    return q.terms().size() == 1 && q.terms().begin()->first == ExpVec(f.arity(), 0);
  } catch (const NotDivisible&) {
    return false;
  }
}

/// Declared structure of one single-root specialized block: the kernel
/// constants c (as v,u exponent pairs) such that prod_{s != r} (w_s - c w_r)
/// divides the block, and — for even roots with a calibrated parameter — the
/// Hall-Littlewood kernel parameter of the quotient.
struct RootBlockSpec {
  std::vector<std::array<int, 2>> kern;
  bool even = false;
  bool has_param = false;
  std::array<int, 2> param{0, 0};
};

template <class K>
RootBlockSpec root_block_spec(const RootDatum<K>& rd, int b) {
  const std::string& n = rd.roots[b].name;
  switch (spec_detail::datum_kind(rd)) {
    case FamilyId::Lambda:
      if (n == "gamma") return {{{0, 0}}, true, true, {2, 0}};
      return {};
    case FamilyId::OmegaFerm:
      if (n == "alpha12") return {{{0, 0}}, true, true, {2, 0}};
      if (n == "alpha13") return {{{0, 0}}, true, true, {0, 2}};
      if (n == "alpha23") return {{{0, 0}}, true, true, {-2, -2}};
      if (n == "alpha123") return {{{0, 0}, {-2, 0}, {0, -2}}, false};
      return {};
    case FamilyId::OmegaOneFerm:
      if (n == "alpha1") return {{}, true, true, {2, 0}};
      if (n == "alpha3") return {{}, true, true, {0, 2}};
      if (n == "alpha12") return {{{2, 0}}, false};
      if (n == "alpha23") return {{{0, 2}}, false};
      if (n == "alpha123") return {{{-2, 0}, {0, 2}}, false};
      if (n == "gamma") return {{{0, 0}, {-2, 0}, {0, 2}}, true, false};
      return {};
    default:
      throw std::invalid_argument("no block table for this family");
  }
}

/// Verify that the specialized single-root block factors as
///   unit * prod_{s != r} (w_s - c w_r) * B(modes + D)
/// where D is the one-copy exponent shift and B is the skew monomial (odd
/// roots), the calibrated Hall-Littlewood element (even roots with a known
/// parameter), or at least a symmetric polynomial.
template <class K>
CheckLog check_root_block_structure(const RootDatum<K>& rd, int b,
                                    const std::vector<int>& modes) {
  CheckLog log;
  const std::string tag = rd.roots[b].name + ":" + single_root_h(rd, b, modes).str();
  const int n = static_cast<int>(modes.size());
  RootBlockSpec spec = root_block_spec(rd, b);

  // One-copy exponent shift.
  LaurentPoly<K> one = root_block(rd, b, {0});
  if (one.terms().size() != 1) {
    log.emplace_back("block-shift:" + tag, false);
    return log;
  }
  const int D = one.terms().begin()->first[0];

  LaurentPoly<K> block = root_block(rd, b, modes);
  LaurentPoly<K> kern = LaurentPoly<K>::constant(n, K(1));
  for (int s = 0; s < n; ++s)
    for (int r = 0; r < n; ++r) {
      if (s == r) continue;
      for (auto [a, bb] : spec.kern)
        kern = kern * (LaurentPoly<K>::variable(n, s) -
                       LaurentPoly<K>::variable(n, r).scaled(rd.vpow(a, bb)));
    }
  LaurentPoly<K> q(n);
  bool divides = true;
  try {
    q = divide_exact(block, kern);
  } catch (const NotDivisible&) {
    divides = false;
  }
  log.emplace_back("block-kernel:" + tag, divides);
  if (!divides) return log;

  std::vector<int> shifted = modes;
  for (int& x : shifted) x += D;
  if (!spec.even) {
    log.emplace_back("block-skew-monomial:" + tag,
                     equal_up_to_unit(q, asym_monomial<K>(n, shifted)));
  } else if (spec.has_param) {
    std::vector<int> lam(shifted.rbegin(), shifted.rend());  // descending
    log.emplace_back("block-hall-littlewood:" + tag,
                     equal_up_to_unit(q, hall_littlewood<K>(
                                             n, lam, rd.vpow(spec.param[0], spec.param[1]))));
  } else {
    bool sym = true;
    for (int i = 0; i + 1 < n && sym; ++i) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[i], perm[i + 1]);
      sym = (q.permuted(perm) == q);
    }
    log.emplace_back("block-symmetric:" + tag, sym);
  }
  return log;
}

/// ---------------------------------------------------------------------------
/// Wheel conditions for the three-group families.
/// ---------------------------------------------------------------------------

/// True when the numerator of F vanishes on every wheel locus of its family;
/// vacuously true when the grading is too small to build a wheel. The chain
/// is substituted at the first variables of each group, which suffices by
/// the group symmetry.
template <class K>
bool wheel_check(const RootDatum<K>& rd, const ShuffleElem<K>& F) {
  const auto& g = F.grading();
  // Each locus: list of (group, slot-within-group, coefficient); the pinned
  // variables are set to coeff * t0, everything else stays free.
  std::vector<std::vector<std::tuple<int, int, K>>> loci;
  if (spec_detail::datum_kind(rd) == FamilyId::OmegaFerm) {
    if (g[0] >= 1 && g[1] >= 1 && g[2] >= 1) {
      // x1 = v^-1 x2 = v^theta x3  and  x1 = v x2 = v^-theta x3.
      loci.push_back({{0, 0, K(1)}, {1, 0, rd.v}, {2, 0, K(1) / rd.u}});
      loci.push_back({{0, 0, K(1)}, {1, 0, K(1) / rd.v}, {2, 0, rd.u}});
    }
  } else if (spec_detail::datum_kind(rd) == FamilyId::OmegaOneFerm) {
    if (g[0] >= 2 && g[1] >= 1)
      // x_{1,r1} = v^2 x_{1,r2} = v x_{2,s}.
      loci.push_back({{0, 0, K(1)}, {0, 1, K(1) / (rd.v * rd.v)}, {1, 0, K(1) / rd.v}});
    if (g[2] >= 2 && g[1] >= 1)
      // x_{3,t1} = v^2theta x_{3,t2} = v^theta x_{2,s}.
      loci.push_back({{2, 0, K(1)}, {2, 1, K(1) / (rd.u * rd.u)}, {1, 0, K(1) / rd.u}});
  } else {
    throw std::invalid_argument("no wheel condition for this family");
  }
  for (const auto& locus : loci) {
    // Pinned variables -> t0 (target var 0); free variables keep their own slot.
    std::vector<std::pair<K, int>> plan(F.arity(), {K(0), -1});
    for (auto [grp, slot, c] : locus) plan[F.var_index(grp, slot)] = {c, 0};
    int next = 1;
    for (int i = 0; i < F.arity(); ++i)
      if (plan[i].second < 0) plan[i] = {K(1), next++};
    if (!F.num().substitute(plan, next).is_zero()) return false;
  }
  return true;
}

/// ---------------------------------------------------------------------------
/// Filtration / vanishing checks.
/// ---------------------------------------------------------------------------

/// phi_{d'}(phi(E_h)) must vanish for every degree vector d' < deg(h) with
/// the same grading, and must match the closed form at d' = deg(h).
template <class K>
CheckLog check_specialization_of(const RootDatum<K>& rd, const HFunction& h) {
  CheckLog log;
  ShuffleElem<K> img = pbw_image(rd, h);
  std::vector<int> dh = h.degree();
  for (const auto& dp : degree_vectors(rd, h_grading(rd, h))) {
    if (dp == dh) {
      log.emplace_back("match:" + h.str(),
                       equal_up_to_unit(phi_d(rd, dp, img), expected_phi(rd, h)));
    } else if (degree_less(dp, dh)) {
      log.emplace_back("vanish:" + h.str(), phi_d(rd, dp, img).is_zero());
    }
  }
  return log;
}

/// ---------------------------------------------------------------------------
/// Staircase products of the two-group presentation.
/// ---------------------------------------------------------------------------

/// Closed form of the staircase products
///   P_{n,k} = (1/(x-y))^{*n} * y^0 * y^1 * ... * y^{k-1},
///   Q_{n,k} = x^0 * x^1 * ... * x^{k-1} * (1/(x-y))^{*n}:
/// the numerator equals
///   c * v^{e} * prod_{i=1}^{n} (1 - v^{-2i}) / (1 - v^{-2}) * V(x) V(y)
/// with V the per-group Vandermondes and c a nonzero rational constant
/// (certified by exact division and a rationality check of the quotient).
/// The power is e = -kn for P and e = 0 for Q (measured exactly; the
/// mirrored product does not carry the v^{-kn} twist).
inline CheckLog elementary_product_check(const RootDatum<ParamScalar>& rd, int nmax, int kmax) {
  using presentation_detail::inst;
  using PS = ParamScalar;
  if (rd.family->id != FamilyId::Lambda)
    throw std::invalid_argument("staircase products live in the two-group presentation");
  CheckLog log;
  ShuffleElem<PS> one(rd.family, {1, 1}, LaurentPoly<PS>::constant(2, PS(1l)), false);
  for (int n = 1; n <= nmax; ++n) {
    for (int k = 0; k <= kmax; ++k) {
      PS vf(1l);
      for (int i = 1; i <= n; ++i)
        vf *= (PS(1l) - PS::vu(-2 * i, 0)) / (PS(1l) - PS::vu(-2, 0));

      auto check_one = [&](const ShuffleElem<PS>& E, const PS& unit, const char* name) {
        int dx = E.grading()[0], dy = E.grading()[1];
        std::vector<int> xv(dx), yv(dy);
        std::iota(xv.begin(), xv.end(), 0);
        std::iota(yv.begin(), yv.end(), dx);
        LaurentPoly<PS> V =
            vandermonde<PS>(dx + dy, xv) * vandermonde<PS>(dx + dy, yv);
        bool ok = false;
        try {
          LaurentPoly<PS> q = divide_exact(E.num(), V);
          if (q.terms().size() == 1 && q.terms().begin()->first == ExpVec(dx + dy, 0)) {
            PS c = q.terms().begin()->second / (vf * unit);
            ok = !c.is_zero() && c.is_rational();
          }
        } catch (const NotDivisible&) {
        }
        log.emplace_back(inst(name, {n, k}), ok);
      };

      ShuffleElem<PS> P = ShuffleElem<PS>::unit(rd.family);
      for (int i = 0; i < n; ++i) P = shuffle(P, one);
      for (int i = 0; i < k; ++i) P = shuffle(P, generator_image(rd, 1, i));
      check_one(P, PS::vu(-k * n, 0), "staircase-p");

      ShuffleElem<PS> Q = ShuffleElem<PS>::unit(rd.family);
      for (int i = 0; i < k; ++i) Q = shuffle(Q, generator_image(rd, 0, i));
      for (int i = 0; i < n; ++i) Q = shuffle(Q, one);
      check_one(Q, PS(1l), "staircase-q");
    }
  }
  return log;
}

}  // namespace qsh
