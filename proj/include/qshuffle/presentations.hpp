#pragma once

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "qshuffle/families.hpp"

namespace qsh {

/// A positive root of the presentation. `comp` gives its coordinates in the
/// simple roots. `chain` encodes the quantum affine root vector as a
/// left-nested twisted bracket of previously defined root vectors:
///   E(k) = [[...[E_{chain[0]}(k), E_{chain[1]}(0)]_{t1}, ...], E_{chain[m]}(0)]_{tm}
/// with each twist t_j = v^{-<partial sum, chain[j]>} from the symmetrized
/// bilinear form. Simple roots have chain = {own index}.
struct PosRoot {
  std::string name;
  std::vector<int> comp;
  std::vector<int> chain;
};

/// Root data of one presentation: the shuffle family carrying its image,
/// parities of the simple roots, the symmetrized bilinear form <a_i, a_j>
/// stored as integer pairs (a, b) meaning a + b*theta, and the positive
/// roots in their fixed convex (PBW) order.
template <class K>
struct RootDatum {
  FamilyPtr<K> family;
  K v, u;  // u plays the role of v^theta
  std::vector<int> parity;                                // of simple roots
  std::vector<std::vector<std::array<int, 2>>> pairing;   // (a, b): a + b*theta
  std::vector<PosRoot> roots;                             // PBW order
  std::vector<int> simple_index;                          // simple i -> roots index

  int rank() const { return static_cast<int>(parity.size()); }

  /// v^a * u^b.
  K vpow(int a, int b) const { return scalar_pow(v, a) * scalar_pow(u, b); }

  /// Bilinear form of two root coordinate vectors, as an (a, b) pair.
  std::array<int, 2> form(const std::vector<int>& x, const std::vector<int>& y) const {
    std::array<int, 2> r{0, 0};
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) {
        r[0] += x[i] * y[j] * pairing[i][j][0];
        r[1] += x[i] * y[j] * pairing[i][j][1];
      }
    return r;
  }

  int parity_of(const std::vector<int>& comp) const {
    int p = 0;
    for (int i = 0; i < rank(); ++i) p += comp[i] * parity[i];
    return p & 1;
  }

  int root_index(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(roots.size()); ++i)
      if (roots[i].name == name) return i;
    throw std::invalid_argument("unknown root: " + name);
  }
};

/// Parity of a shuffle element, read off its grading.
template <class K>
int elem_parity(const RootDatum<K>& rd, const ShuffleElem<K>& F) {
  return rd.parity_of(F.grading());
}

/// Super bracket [F, G]_c = F*G - (-1)^{p(F)p(G)} c * (G*F); parities are
/// determined by the gradings.
template <class K>
ShuffleElem<K> super_bracket(const RootDatum<K>& rd, const ShuffleElem<K>& F,
                             const ShuffleElem<K>& G, const K& c) {
  ShuffleElem<K> right = shuffle(G, F).scaled(c);
  if (elem_parity(rd, F) * elem_parity(rd, G) != 0)
    return shuffle(F, G) + right;
  return shuffle(F, G) - right;
}

/// Image of the degree-one generator e_{i,k} (0-based simple root i).
template <class K>
ShuffleElem<K> generator_image(const RootDatum<K>& rd, int i, int k) {
  return ShuffleElem<K>::generator(rd.family, i, k);
}

/// Image of the quantum affine root vector E_beta(k) for roots[idx].
template <class K>
ShuffleElem<K> root_vector_image(const RootDatum<K>& rd, int idx, int k) {
  const PosRoot& root = rd.roots[idx];
  if (root.chain.size() == 1 && root.chain[0] == idx) {
    int simple = -1;
    for (int i = 0; i < rd.rank(); ++i)
      if (rd.simple_index[i] == idx) simple = i;
    return generator_image(rd, simple, k);
  }
  ShuffleElem<K> acc = root_vector_image(rd, root.chain[0], k);
  std::vector<int> comp = rd.roots[root.chain[0]].comp;
  for (size_t j = 1; j < root.chain.size(); ++j) {
    const PosRoot& next = rd.roots[root.chain[j]];
    auto [a, b] = rd.form(comp, next.comp);
    acc = super_bracket(rd, acc, root_vector_image(rd, root.chain[j], 0),
                        rd.vpow(-a, -b));
    for (int i = 0; i < rd.rank(); ++i) comp[i] += next.comp[i];
  }
  return acc;
}

/// Two odd simple roots, Cartan (0 1 / 1 0); positive roots a1 < gamma < a2
/// with gamma = a1 + a2 (even).
template <class K>
RootDatum<K> lambda_root_datum(const K& v) {
  RootDatum<K> rd;
  rd.family = lambda_family(v);
  rd.v = v;
  rd.u = K(1);
  rd.parity = {1, 1};
  rd.pairing = {{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}};
  rd.roots = {{"alpha1", {1, 0}, {0}},
              {"gamma", {1, 1}, {0, 2}},
              {"alpha2", {0, 1}, {2}}};
  rd.simple_index = {0, 2};
  return rd;
}

/// Three odd simple roots, Cartan (0 1 t / 1 0 -t-1 / t -t-1 0) with
/// t = theta; positive roots a1 < a13 < a12 < a123 < a2 < a23 < a3.
template <class K>
RootDatum<K> omega_root_datum(const K& v, const K& u) {
  RootDatum<K> rd;
  rd.family = omega_family(v, u);
  rd.v = v;
  rd.u = u;
  rd.parity = {1, 1, 1};
  rd.pairing = {{{0, 0}, {1, 0}, {0, 1}},
                {{1, 0}, {0, 0}, {-1, -1}},
                {{0, 1}, {-1, -1}, {0, 0}}};
  rd.roots = {{"alpha1", {1, 0, 0}, {0}},
              {"alpha13", {1, 0, 1}, {0, 6}},
              {"alpha12", {1, 1, 0}, {0, 4}},
              {"alpha123", {1, 1, 1}, {0, 4, 6}},
              {"alpha2", {0, 1, 0}, {4}},
              {"alpha23", {0, 1, 1}, {4, 6}},
              {"alpha3", {0, 0, 1}, {6}}};
  rd.simple_index = {0, 4, 6};
  return rd;
}

/// One odd simple root in the middle, Cartan (2 -1 0 / -1 0 -t / 0 -1 2),
/// d = (1, 1, t); positive roots a1 < a12 < a123 < gamma < a2 < a23 < a3,
/// gamma = a1 + 2 a2 + a3 (even), built as [E_{a123}(k), E_{a2}(0)]_{v^{1+t}}.
template <class K>
RootDatum<K> omega_prime_root_datum(const K& v, const K& u) {
  RootDatum<K> rd;
  rd.family = omega_prime_family(v, u);
  rd.v = v;
  rd.u = u;
  rd.parity = {0, 1, 0};
  // d_i a_ij: (2 -1 0 / -1 0 -t / 0 -t 2t).
  rd.pairing = {{{2, 0}, {-1, 0}, {0, 0}},
                {{-1, 0}, {0, 0}, {0, -1}},
                {{0, 0}, {0, -1}, {0, 2}}};
  rd.roots = {{"alpha1", {1, 0, 0}, {0}},
              {"alpha12", {1, 1, 0}, {0, 4}},
              {"alpha123", {1, 1, 1}, {0, 4, 6}},
              {"gamma", {1, 2, 1}, {2, 4}},
              {"alpha2", {0, 1, 0}, {4}},
              {"alpha23", {0, 1, 1}, {4, 6}},
              {"alpha3", {0, 0, 1}, {6}}};
  rd.simple_index = {0, 4, 6};
  return rd;
}

/// One (result id, passed) entry per relation instance.
using CheckLog = std::vector<std::pair<std::string, bool>>;

namespace presentation_detail {

inline std::string inst(const std::string& rel, std::initializer_list<int> args) {
  std::ostringstream os;
  os << rel;
  char sep = ':';
  for (int a : args) {
    os << sep << a;
    sep = ',';
  }
  return os.str();
}

}  // namespace presentation_detail

/// Verify the defining relations of the presentation inside the shuffle
/// algebra, with all integer generator indices in [kmin, kmax].
template <class K>
CheckLog check_defining_relations(const RootDatum<K>& rd, int kmin, int kmax) {
  using presentation_detail::inst;
  CheckLog log;
  const K& v = rd.v;
  const K& u = rd.u;
  auto gen = [&](int i, int k) { return generator_image(rd, i, k); };

  switch (rd.family->id) {
    case FamilyId::Lambda: {
      for (int i = kmin; i <= kmax; ++i)
        for (int j = kmin; j <= kmax; ++j) {
          ShuffleElem<K> pp = shuffle(gen(0, i), gen(0, j)) + shuffle(gen(0, j), gen(0, i));
          log.emplace_back(inst("anticommute-p", {i, j}), pp.is_zero());
          ShuffleElem<K> qq = shuffle(gen(1, i), gen(1, j)) + shuffle(gen(1, j), gen(1, i));
          log.emplace_back(inst("anticommute-q", {i, j}), qq.is_zero());
          // p_{i+1} q_j + v q_j p_{i+1} + v p_i q_{j+1} + q_{j+1} p_i = 0.
          ShuffleElem<K> r = shuffle(gen(0, i + 1), gen(1, j)) +
                             shuffle(gen(1, j), gen(0, i + 1)).scaled(v) +
                             shuffle(gen(0, i), gen(1, j + 1)).scaled(v) +
                             shuffle(gen(1, j + 1), gen(0, i));
          log.emplace_back(inst("mixed-pq", {i, j}), r.is_zero());
        }
      break;
    }
    case FamilyId::OmegaFerm: {
      for (int i = 0; i < 3; ++i)
        for (int k = kmin; k <= kmax; ++k)
          for (int l = kmin; l <= kmax; ++l) {
            ShuffleElem<K> s = shuffle(gen(i, k), gen(i, l)) + shuffle(gen(i, l), gen(i, k));
            log.emplace_back(inst("anticommute", {i, k, l}), s.is_zero());
          }
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;  // a_ij != 0 off the diagonal
          K va = rd.vpow(rd.pairing[i][j][0], rd.pairing[i][j][1]);  // v^{a_ij}
          for (int k = kmin; k <= kmax; ++k)
            for (int l = kmin; l <= kmax; ++l) {
              ShuffleElem<K> r = shuffle(gen(i, k + 1), gen(j, l)) +
                                 shuffle(gen(j, l), gen(i, k + 1)).scaled(va) -
                                 shuffle(gen(i, k), gen(j, l + 1)).scaled(va) -
                                 shuffle(gen(j, l + 1), gen(i, k));
              log.emplace_back(inst("quadratic", {i, j, k, l}), r.is_zero());
            }
        }
      // [t]_v [[e1,r e2,k]_{v^-1}, e3,l]_v = [[e1,r e3,l]_{v^-t}, e2,k]_{v^t}.
      K theta_v = (u - K(1) / u) / (v - K(1) / v);
      for (int r = kmin; r <= kmax; ++r)
        for (int k = kmin; k <= kmax; ++k)
          for (int l = kmin; l <= kmax; ++l) {
            ShuffleElem<K> lhs =
                super_bracket(rd, super_bracket(rd, gen(0, r), gen(1, k), K(1) / v),
                              gen(2, l), v)
                    .scaled(theta_v);
            ShuffleElem<K> rhs = super_bracket(
                rd, super_bracket(rd, gen(0, r), gen(2, l), K(1) / u), gen(1, k), u);
            log.emplace_back(inst("cubic", {r, k, l}), (lhs - rhs).is_zero());
          }
      break;
    }
    case FamilyId::OmegaOneFerm: {
      for (int k = kmin; k <= kmax; ++k)
        for (int l = kmin; l <= kmax; ++l) {
          // a_13 = 0: [e_{1,k}, e_{3,l}] = 0 (both even).
          ShuffleElem<K> c = shuffle(gen(0, k), gen(2, l)) - shuffle(gen(2, l), gen(0, k));
          log.emplace_back(inst("commute-13", {k, l}), c.is_zero());
        }
      const std::vector<std::pair<int, int>> quad = {{0, 0}, {0, 1}, {1, 0},
                                                     {1, 2}, {2, 1}, {2, 2}};
      for (auto [i, j] : quad) {
        K ti = rd.vpow(-rd.pairing[i][j][0], -rd.pairing[i][j][1]);  // v^{-d_i a_ij}
        K tj = rd.vpow(-rd.pairing[j][i][0], -rd.pairing[j][i][1]);  // v^{-d_j a_ji}
        for (int k = kmin; k <= kmax; ++k)
          for (int l = kmin; l <= kmax; ++l) {
            ShuffleElem<K> r = super_bracket(rd, gen(i, k), gen(j, l + 1), ti) +
                               super_bracket(rd, gen(j, l), gen(i, k + 1), tj);
            log.emplace_back(inst("quadratic", {i, j, k, l}), r.is_zero());
          }
      }
      // Serre: Sym_{k,l} [e_{i,k}, [e_{i,l}, e_{2,s}]_{v^{-d_i a_i2}}]_{v^{-d_i a_i2 - 2 d_i}} = 0.
      for (int i : {0, 2}) {
        int a = -rd.pairing[i][1][0], b = -rd.pairing[i][1][1];  // -d_i a_i2 as (a, b)
        K inner = rd.vpow(a, b);
        K outer = rd.vpow(a - rd.pairing[i][i][0], b - rd.pairing[i][i][1]);
        for (int k = kmin; k <= kmax; ++k)
          for (int l = kmin; l <= k; ++l)
            for (int s = kmin; s <= kmax; ++s) {
              ShuffleElem<K> t1 = super_bracket(
                  rd, gen(i, k), super_bracket(rd, gen(i, l), gen(1, s), inner), outer);
              ShuffleElem<K> t2 = super_bracket(
                  rd, gen(i, l), super_bracket(rd, gen(i, k), gen(1, s), inner), outer);
              log.emplace_back(inst("serre", {i, k, l, s}), (t1 + t2).is_zero());
            }
      }
      break;
    }
    default:
      throw std::invalid_argument("family carries no presentation");
  }
  return log;
}

/// Jacobi-type identities for the twisted super bracket, checked on concrete
/// elements X, Y, Z with arbitrary twists a, b, c:
///   [[X,Y]_a, Z]_b = [X, [Y,Z]_c]_{ab/c} + (-1)^{p(Y)p(Z)} c [[X,Z]_{b/c}, Y]_{a/c}
///   [X, [Y,Z]_a]_b = [[X,Y]_c, Z]_{ab/c} + (-1)^{p(X)p(Y)} c [Y, [X,Z]_{b/c}]_{a/c}.
template <class K>
CheckLog check_bracket_identities(const RootDatum<K>& rd, const ShuffleElem<K>& X,
                                  const ShuffleElem<K>& Y, const ShuffleElem<K>& Z,
                                  const K& a, const K& b, const K& c,
                                  const std::string& tag) {
  CheckLog log;
  auto br = [&](const ShuffleElem<K>& f, const ShuffleElem<K>& g, const K& t) {
    return super_bracket(rd, f, g, t);
  };
  K sYZ = elem_parity(rd, Y) * elem_parity(rd, Z) ? K(0) - c : c;
  ShuffleElem<K> lhs1 = br(br(X, Y, a), Z, b);
  ShuffleElem<K> rhs1 =
      br(X, br(Y, Z, c), a * b / c) + br(br(X, Z, b / c), Y, a / c).scaled(sYZ);
  log.emplace_back("bracket-identity-1:" + tag, (lhs1 - rhs1).is_zero());

  K sXY = elem_parity(rd, X) * elem_parity(rd, Y) ? K(0) - c : c;
  ShuffleElem<K> lhs2 = br(X, br(Y, Z, a), b);
  ShuffleElem<K> rhs2 =
      br(br(X, Y, c), Z, a * b / c) + br(Y, br(X, Z, b / c), a / c).scaled(sXY);
  log.emplace_back("bracket-identity-2:" + tag, (lhs2 - rhs2).is_zero());
  return log;
}

/// Commutation formulas between the root vectors p_k, q_s, r_i of the
/// two-odd-root presentation, verified inside the shuffle algebra.
template <class K>
CheckLog check_comm_lemmas(const RootDatum<K>& rd, int kmin, int kmax) {
  using presentation_detail::inst;
  if (rd.family->id != FamilyId::Lambda)
    throw std::invalid_argument("commutation lemmas apply to the rank-2 presentation");
  CheckLog log;
  const K& v = rd.v;
  K vinv = K(1) / v;
  auto p = [&](int k) { return generator_image(rd, 0, k); };
  auto q = [&](int s) { return generator_image(rd, 1, s); };
  auto br = [&](const ShuffleElem<K>& f, const ShuffleElem<K>& g, const K& t) {
    return super_bracket(rd, f, g, t);
  };
  auto r = [&](int i) { return br(p(i), q(0), vinv); };

  for (int k = kmin; k <= kmax; ++k)
    for (int s = kmin; s <= kmax; ++s) {
      // (1) q_s p_k = v [p_k, q_s]_{v^-1} - v p_k q_s.
      ShuffleElem<K> l1 = shuffle(q(s), p(k)) - br(p(k), q(s), vinv).scaled(v) +
                          shuffle(p(k), q(s)).scaled(v);
      log.emplace_back(inst("comm-1", {k, s}), l1.is_zero());
      // (2) [p_k, q_s]_{v^-1} + v [p_{k+1}, q_{s-1}]_{v^-1} = (v - v^-1) p_{k+1} q_{s-1}.
      ShuffleElem<K> l2 = br(p(k), q(s), vinv) + br(p(k + 1), q(s - 1), vinv).scaled(v) -
                          shuffle(p(k + 1), q(s - 1)).scaled(v - vinv);
      log.emplace_back(inst("comm-2", {k, s}), l2.is_zero());
      // (3) q_s [p_k, q_s]_{v^-1} = v [p_k, q_s]_{v^-1} q_s.
      ShuffleElem<K> l3 =
          shuffle(q(s), br(p(k), q(s), vinv)) - shuffle(br(p(k), q(s), vinv), q(s)).scaled(v);
      log.emplace_back(inst("comm-3", {k, s}), l3.is_zero());
      // (4) [p_k, q_s]_{v^-1} p_k = v p_k [p_k, q_s]_{v^-1}.
      ShuffleElem<K> l4 =
          shuffle(br(p(k), q(s), vinv), p(k)) - shuffle(p(k), br(p(k), q(s), vinv)).scaled(v);
      log.emplace_back(inst("comm-4", {k, s}), l4.is_zero());
    }

  // [p_i, q_j]_{v^-1} = (-v)^j r_{i+j} + (v - v^-1) sum_{k=1}^{j} (-v)^{k-1} p_{i+k} q_{j-k}.
  for (int i = kmin; i <= kmax; ++i)
    for (int j = 0; j <= kmax; ++j) {
      ShuffleElem<K> rhs = r(i + j).scaled(scalar_pow(K(0) - v, j));
      for (int k = 1; k <= j; ++k)
        rhs = rhs +
              shuffle(p(i + k), q(j - k)).scaled((v - vinv) * scalar_pow(K(0) - v, k - 1));
      log.emplace_back(inst("expand-pq", {i, j}), (br(p(i), q(j), vinv) - rhs).is_zero());
    }

  // [p_i, r_k]_{v^-1} = (v^-1 - v) sum_{l=1}^{i-k} (-v)^{l-1} p_{k+l} [p_i, q_{-l}]_{v^-1}.
  for (int i = 0; i <= kmax; ++i)
    for (int k = 0; k <= i; ++k) {
      ShuffleElem<K> rhs = br(p(i), r(k), vinv).scaled(K(0));  // zero of the right shape
      for (int l = 1; l <= i - k; ++l)
        rhs = rhs + shuffle(p(k + l), br(p(i), q(-l), vinv))
                        .scaled((vinv - v) * scalar_pow(K(0) - v, l - 1));
      log.emplace_back(inst("expand-pr", {i, k}), (br(p(i), r(k), vinv) - rhs).is_zero());
    }

  // [r_k, r_s]_{v^2} = -[r_{s+1}, r_{k-1}]_{v^2}
  //                  = v^2 [r_{k-1}, r_{s+1}]_{v^2} - (1 - v^4) r_{s+1} r_{k-1};
  // in particular [r_k, r_{k-1}]_{v^2} = 0.
  K v2 = v * v;
  for (int k = kmin + 1; k <= kmax; ++k)
    for (int s = kmin; s <= k; ++s) {
      ShuffleElem<K> lhs = br(r(k), r(s), v2);
      log.emplace_back(inst("rr-shift", {k, s}), (lhs + br(r(s + 1), r(k - 1), v2)).is_zero());
      ShuffleElem<K> rhs = shuffle(r(s + 1), r(k - 1)).scaled(K(1) - v2 * v2) -
                           br(r(k - 1), r(s + 1), v2).scaled(v2);
      log.emplace_back(inst("rr-expand", {k, s}), (lhs + rhs).is_zero());
    }
  for (int k = kmin + 1; k <= kmax; ++k)
    log.emplace_back(inst("rr-adjacent", {k}), br(r(k), r(k - 1), v2).is_zero());

  // r has even parity: [r_k, r_k]_{v^2} = (1 - v^2) r_k r_k.
  for (int k = kmin; k <= kmax; ++k) {
    ShuffleElem<K> d = br(r(k), r(k), v2) - shuffle(r(k), r(k)).scaled(K(1) - v2);
    log.emplace_back(inst("rr-diag", {k}), d.is_zero());
  }
  return log;
}

}  // namespace qsh
