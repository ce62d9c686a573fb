#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qshuffle/errors.hpp"

namespace qsh {

struct ArityMismatch : std::invalid_argument {
  ArityMismatch() : std::invalid_argument("polynomial arity mismatch") {}
};
struct NotDivisible : std::domain_error {
  NotDivisible() : std::domain_error("inexact polynomial division") {}
};

using ExpVec = std::vector<int32_t>;

/// x^e for a field scalar x and integer e (negative uses the inverse).
template <class K>
K scalar_pow(const K& x, long e) {
  K base = e < 0 ? x.inverse() : x;
  unsigned long k = e < 0 ? -e : e;
  K acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

/// Visit every permutation of {0..n-1} with its sign.
inline void for_each_permutation(int n,
                                 const std::function<void(const std::vector<int>&, int)>& fn) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // Plain lexicographic enumeration; sign by inversion count (n stays small).
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    fn(perm, inv % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

/// One variable group for symmetrization: the member variable indices and
/// whether the group is skew-symmetrized (alternating signs).
struct SymGroup {
  std::vector<int> vars;
  bool skew = false;
};

/// Sparse multivariate Laurent polynomial over a scalar field K.
template <class K>
class LaurentPoly {
 public:
  explicit LaurentPoly(int arity = 0) : arity_(arity) {}

  static LaurentPoly constant(int arity, const K& c) {
    LaurentPoly p(arity);
    if (!c.is_zero()) p.terms_.emplace(ExpVec(arity, 0), c);
    return p;
  }
  static LaurentPoly monomial(int arity, ExpVec e, const K& c) {
    if (static_cast<int>(e.size()) != arity) throw ArityMismatch();
    LaurentPoly p(arity);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
  }
  /// The single variable x_i^k.
  static LaurentPoly variable(int arity, int i, int k = 1) {
    ExpVec e(arity, 0);
    e.at(i) = k;
    return monomial(arity, std::move(e), K(1));
  }

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<ExpVec, K>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  void add_term(const ExpVec& e, const K& c) {
    if (static_cast<int>(e.size()) != arity_) throw ArityMismatch();
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.arity_ != b.arity_) throw ArityMismatch();
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.arity_ != b.arity_) throw ArityMismatch();
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, K(0) - c);
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r(a.arity_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, K(0) - c);
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.arity_ != b.arity_) throw ArityMismatch();
    LaurentPoly r(a.arity_);
    ExpVec e(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  LaurentPoly scaled(const K& c) const {
    LaurentPoly r(arity_);
    if (c.is_zero()) return r;
    for (const auto& [e, cc] : terms_) r.terms_.emplace(e, cc * c);
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Apply the variable relabeling x_i -> x_{perm[i]} (a bijection).
  LaurentPoly permuted(const std::vector<int>& perm) const {
    LaurentPoly r(arity_);
    ExpVec e(arity_);
    for (const auto& [ea, c] : terms_) {
      for (int i = 0; i < arity_; ++i) e[perm[i]] = ea[i];
      auto [it, fresh] = r.terms_.emplace(e, c);
      if (!fresh) throw std::logic_error("permuted: not a bijection");
    }
    return r;
  }

  /// Rewrite x_i -> coeff_i * w_{target_i}; the target arity may differ.
  /// Every source variable must be mapped; coefficients must be invertible
  /// when negative exponents occur.
  LaurentPoly substitute(const std::vector<std::pair<K, int>>& plan, int target_arity) const {
    if (static_cast<int>(plan.size()) != arity_) throw ArityMismatch();
    LaurentPoly r(target_arity);
    ExpVec e(target_arity);
    for (const auto& [ea, c] : terms_) {
      std::fill(e.begin(), e.end(), 0);
      K coeff = c;
      for (int i = 0; i < arity_; ++i) {
        if (ea[i] == 0) continue;
        e.at(plan[i].second) += ea[i];
        coeff *= scalar_pow(plan[i].first, ea[i]);
      }
      r.add_term(e, coeff);
    }
    return r;
  }

  /// (1/prod n_g!) * sum over per-group permutations, with sign factors for
  /// skew groups. The groups must partition {0..arity-1}.
  LaurentPoly group_symmetrize(const std::vector<SymGroup>& groups) const {
    std::vector<std::pair<std::vector<int>, int>> maps{{std::vector<int>(arity_), 1}};
    std::iota(maps[0].first.begin(), maps[0].first.end(), 0);
    long orbit = 1;
    for (const auto& g : groups) {
      int n = static_cast<int>(g.vars.size());
      for (long f = 2; f <= n; ++f) orbit *= f;
      std::vector<std::pair<std::vector<int>, int>> next;
      for_each_permutation(n, [&](const std::vector<int>& perm, int sign) {
        for (const auto& [base, bsign] : maps) {
          std::vector<int> m = base;
          for (int i = 0; i < n; ++i) m[g.vars[i]] = base[g.vars[perm[i]]];
          next.emplace_back(std::move(m), g.skew ? bsign * sign : bsign);
        }
      });
      maps = std::move(next);
    }
    LaurentPoly acc(arity_);
    K minus_one = K(0) - K(1);
    for (const auto& [m, sign] : maps) {
      LaurentPoly p = permuted(m);
      if (sign < 0) p = p.scaled(minus_one);
      acc = acc + p;
    }
    return acc.scaled(K(1) / K(orbit));
  }

  /// Smallest exponent of each variable over all terms (0 for the zero poly).
  ExpVec min_exps() const {
    ExpVec m(arity_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (int i = 0; i < arity_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  }
  ExpVec max_exps() const {
    ExpVec m(arity_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (int i = 0; i < arity_; ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
      first = false;
    }
    return m;
  }

  LaurentPoly shifted(const ExpVec& d) const {
    if (static_cast<int>(d.size()) != arity_) throw ArityMismatch();
    LaurentPoly r(arity_);
    ExpVec e(arity_);
    for (const auto& [ea, c] : terms_) {
      for (int i = 0; i < arity_; ++i) e[i] = ea[i] + d[i];
      r.terms_.emplace(e, c);
    }
    return r;
  }

  K eval(const std::vector<K>& point) const {
    if (static_cast<int>(point.size()) != arity_) throw ArityMismatch();
    K acc(0);
    for (const auto& [e, c] : terms_) {
      K term = c;
      for (int i = 0; i < arity_; ++i)
        if (e[i] != 0) term *= scalar_pow(point[i], e[i]);
      acc += term;
    }
    return acc;
  }

 private:
  int arity_;
  std::map<ExpVec, K> terms_;
};

/// Exact quotient f / g in the Laurent ring; throws NotDivisible if f is not
/// a multiple of g. Both are shifted to valuation zero first (per-variable
/// valuations are additive, so the shifted quotient is an ordinary
/// polynomial), then divided by lex leading terms.
template <class K>
LaurentPoly<K> divide_exact(const LaurentPoly<K>& f, const LaurentPoly<K>& g) {
  if (g.is_zero()) throw DivisionByZero();
  if (f.is_zero()) return LaurentPoly<K>(f.arity());
  if (f.arity() != g.arity()) throw ArityMismatch();
  const int n = f.arity();
  ExpVec mf = f.min_exps(), mg = g.min_exps();
  ExpVec neg_mf(n), neg_mg(n), qshift(n);
  for (int i = 0; i < n; ++i) {
    neg_mf[i] = -mf[i];
    neg_mg[i] = -mg[i];
    qshift[i] = mf[i] - mg[i];
  }
  LaurentPoly<K> rem = f.shifted(neg_mf);
  LaurentPoly<K> div = g.shifted(neg_mg);

  const auto& dterms = div.terms();
  auto dlead = std::prev(dterms.end());  // lex-max term of the divisor
  LaurentPoly<K> q(n);
  ExpVec e(n);
  while (!rem.is_zero()) {
    auto rlead = std::prev(rem.terms().end());
    for (int i = 0; i < n; ++i) {
      e[i] = rlead->first[i] - dlead->first[i];
      if (e[i] < 0) throw NotDivisible();
    }
    K c = rlead->second / dlead->second;
    q.add_term(e, c);
    rem = rem - div * LaurentPoly<K>::monomial(n, e, c);
  }
  return q.shifted(qshift);
}

}  // namespace qsh
