#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "qshuffle/param_scalar.hpp"
#include "qshuffle/presentations.hpp"

namespace qsh {

struct NotInSpan : std::runtime_error {
  NotInSpan() : std::runtime_error("element is not in the span of the candidate monomials") {}
};

/// An ordered monomial of root vectors: for each positive root (indexed as in
/// the RootDatum), the sorted list of modes. Odd roots carry strictly
/// increasing modes (multiplicity at most one); even roots weakly increasing.
struct HFunction {
  std::vector<std::vector<int>> modes;  // one list per positive root, ascending

  std::vector<int> degree() const {
    std::vector<int> d;
    d.reserve(modes.size());
    for (const auto& m : modes) d.push_back(static_cast<int>(m.size()));
    return d;
  }
  int total_modes() const {
    int t = 0;
    for (const auto& m : modes)
      for (int k : m) t += k;
    return t;
  }
  friend bool operator==(const HFunction& a, const HFunction& b) { return a.modes == b.modes; }
  friend bool operator<(const HFunction& a, const HFunction& b) {
    return std::make_pair(a.degree(), a.modes) < std::make_pair(b.degree(), b.modes);
  }
  std::string str() const {
    std::string s;
    for (size_t i = 0; i < modes.size(); ++i) {
      if (modes[i].empty()) continue;
      if (!s.empty()) s += " ";
      s += "b" + std::to_string(i) + "(";
      for (size_t j = 0; j < modes[i].size(); ++j)
        s += (j ? "," : "") + std::to_string(modes[i][j]);
      s += ")";
    }
    return s.empty() ? "1" : s;
  }
};

template <class K>
std::vector<int> h_grading(const RootDatum<K>& rd, const HFunction& h) {
  std::vector<int> g(rd.rank(), 0);
  for (size_t b = 0; b < h.modes.size(); ++b)
    for (int i = 0; i < rd.rank(); ++i)
      g[i] += static_cast<int>(h.modes[b].size()) * rd.roots[b].comp[i];
  return g;
}

namespace pbw_detail {

/// All ascending mode lists of length d with entries in [lo, hi]; strictly
/// ascending when `strict`.
inline void mode_lists(int d, int lo, int hi, bool strict, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  if (d == 0) {
    out.push_back(cur);
    return;
  }
  int start = cur.empty() ? lo : (strict ? cur.back() + 1 : cur.back());
  for (int k = start; k <= hi; ++k) {
    cur.push_back(k);
    mode_lists(d - 1, lo, hi, strict, cur, out);
    cur.pop_back();
  }
}

}  // namespace pbw_detail

/// All ordered monomials with the given grading and all modes in [lo, hi],
/// in a deterministic order (degree vector lex, then modes lex).
template <class K>
std::vector<HFunction> enumerate_h(const RootDatum<K>& rd, const std::vector<int>& grading,
                                   int lo, int hi) {
  const int nr = static_cast<int>(rd.roots.size());
  std::vector<HFunction> out;
  HFunction cur;
  cur.modes.resize(nr);
  std::vector<int> rem = grading;

  std::function<void(int)> rec = [&](int b) {
    if (b == nr) {
      for (int x : rem)
        if (x != 0) return;
      out.push_back(cur);
      return;
    }
    const auto& comp = rd.roots[b].comp;
    bool odd = rd.parity_of(comp) == 1;
    int dmax = INT32_MAX;
    for (int i = 0; i < rd.rank(); ++i)
      if (comp[i] > 0) dmax = std::min(dmax, rem[i] / comp[i]);
    if (dmax == INT32_MAX) dmax = 0;
    for (int d = 0; d <= dmax; ++d) {
      std::vector<std::vector<int>> lists;
      std::vector<int> scratch;
      pbw_detail::mode_lists(d, lo, hi, odd, scratch, lists);
      for (int i = 0; i < rd.rank(); ++i) rem[i] -= d * comp[i];
      for (auto& l : lists) {
        cur.modes[b] = l;
        rec(b + 1);
      }
      cur.modes[b].clear();
      for (int i = 0; i < rd.rank(); ++i) rem[i] += d * comp[i];
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Shuffle image of the ordered monomial: product of root vector images in
/// the fixed root order, modes ascending within each root.
template <class K>
ShuffleElem<K> pbw_image(const RootDatum<K>& rd, const HFunction& h) {
  ShuffleElem<K> acc = ShuffleElem<K>::unit(rd.family);
  for (size_t b = 0; b < h.modes.size(); ++b)
    for (int k : h.modes[b]) acc = shuffle(acc, root_vector_image(rd, static_cast<int>(b), k));
  return acc;
}

namespace pbw_detail {

/// Exact rank of sparse rows over a field K by Gaussian elimination.
template <class K>
int rank_sparse(std::vector<std::map<ExpVec, K>> rows) {
  int rank = 0;
  while (true) {
    // Find the row with the lexicographically smallest leading exponent.
    int best = -1;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i].empty()) continue;
      if (best < 0 || rows[i].begin()->first < rows[best].begin()->first) best = i;
    }
    if (best < 0) break;
    ++rank;
    std::map<ExpVec, K> pivot = std::move(rows[best]);
    rows.erase(rows.begin() + best);
    const ExpVec& pe = pivot.begin()->first;
    const K& pc = pivot.begin()->second;
    for (auto& row : rows) {
      auto it = row.find(pe);
      if (it == row.end()) continue;
      K factor = it->second / pc;
      for (const auto& [e, c] : pivot) {
        auto jt = row.find(e);
        K val = (jt == row.end() ? K(0) : jt->second) - factor * c;
        if (val.is_zero()) {
          if (jt != row.end()) row.erase(jt);
        } else if (jt == row.end()) {
          row.emplace(e, std::move(val));
        } else {
          jt->second = std::move(val);
        }
      }
    }
  }
  return rank;
}

/// Rank over Q of the rows evaluated at a random rational (v0, u0) point
/// (a certified lower bound for the rank over Q(v, u)).
inline int rank_numeric(const std::vector<std::map<ExpVec, ParamScalar>>& rows,
                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Rat v0 = random_rat(rng), u0 = random_rat(rng);
  std::vector<std::map<ExpVec, Rat>> num;
  for (const auto& row : rows) {
    std::map<ExpVec, Rat> r;
    for (const auto& [e, c] : row) {
      Rat val = c.eval(v0, u0);
      if (!is_zero(val)) r.emplace(e, val);
    }
    num.push_back(std::move(r));
  }
  // Same elimination specialized to Rat.
  int rank = 0;
  while (true) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(num.size()); ++i) {
      if (num[i].empty()) continue;
      if (best < 0 || num[i].begin()->first < num[best].begin()->first) best = i;
    }
    if (best < 0) break;
    ++rank;
    std::map<ExpVec, Rat> pivot = std::move(num[best]);
    num.erase(num.begin() + best);
    const ExpVec& pe = pivot.begin()->first;
    Rat pc = pivot.begin()->second;
    for (auto& row : num) {
      auto it = row.find(pe);
      if (it == row.end()) continue;
      Rat factor = it->second / pc;
      for (const auto& [e, c] : pivot) {
        auto jt = row.find(e);
        Rat val = (jt == row.end() ? Rat(0) : jt->second) - factor * c;
        if (is_zero(val)) {
          if (jt != row.end()) row.erase(jt);
        } else if (jt == row.end()) {
          row.emplace(e, val);
        } else {
          jt->second = val;
        }
      }
    }
  }
  return rank;
}

template <class K>
std::vector<std::map<ExpVec, K>> elem_rows(const std::vector<ShuffleElem<K>>& elems) {
  std::vector<std::map<ExpVec, K>> rows;
  for (const auto& e : elems) {
    if (!rows.empty() && (elems[0].grading() != e.grading() || elems[0].family() != e.family()))
      throw GradingMismatch();
    std::map<ExpVec, K> row;
    for (const auto& [ex, c] : e.num().terms()) row.emplace(ex, c);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace pbw_detail

/// Exact rank over the coefficient field of the numerator-coefficient matrix.
/// For the generic parameter field a random rational evaluation is tried
/// first: full numeric rank already certifies full symbolic rank.
template <class K>
int independence_rank(const std::vector<ShuffleElem<K>>& elems, std::uint64_t seed = 20260823) {
  auto rows = pbw_detail::elem_rows(elems);
  if constexpr (std::is_same_v<K, ParamScalar>) {
    int nr = pbw_detail::rank_numeric(rows, seed);
    if (nr == static_cast<int>(rows.size())) return nr;
  }
  return pbw_detail::rank_sparse(std::move(rows));
}

/// Solve F = sum c_h * images[h] exactly. Returns the coefficient vector or
/// nullopt when the system is inconsistent.
template <class K>
std::optional<std::vector<K>> solve_in_span(const std::vector<ShuffleElem<K>>& images,
                                            const ShuffleElem<K>& F) {
  const int n = static_cast<int>(images.size());
  std::set<ExpVec> exps;
  for (const auto& e : images)
    for (const auto& [ex, c] : e.num().terms()) exps.insert(ex);
  for (const auto& [ex, c] : F.num().terms()) exps.insert(ex);

  // Dense augmented rows: one per exponent vector.
  std::vector<std::vector<K>> rows;
  for (const auto& ex : exps) {
    std::vector<K> row(n + 1, K(0));
    for (int j = 0; j < n; ++j) {
      auto it = images[j].num().terms().find(ex);
      if (it != images[j].num().terms().end()) row[j] = it->second;
    }
    auto it = F.num().terms().find(ex);
    if (it != F.num().terms().end()) row[n] = it->second;
    rows.push_back(std::move(row));
  }

  int nrows = static_cast<int>(rows.size());
  std::vector<int> pivot_row_of_col(n, -1);
  int r = 0;
  for (int col = 0; col < n && r < nrows; ++col) {
    int sel = -1;
    for (int i = r; i < nrows; ++i)
      if (!rows[i][col].is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[sel], rows[r]);
    K inv = K(1) / rows[r][col];
    for (int j = col; j <= n; ++j) rows[r][j] = rows[r][j] * inv;
    for (int i = 0; i < nrows; ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      K f = rows[i][col];
      for (int j = col; j <= n; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    pivot_row_of_col[col] = r;
    ++r;
  }
  for (int i = r; i < nrows; ++i)
    if (!rows[i][n].is_zero()) return std::nullopt;  // inconsistent
  std::vector<K> sol(n, K(0));
  for (int col = 0; col < n; ++col)
    if (pivot_row_of_col[col] >= 0) sol[col] = rows[pivot_row_of_col[col]][n];
  return sol;
}

/// Decompose F into ordered monomials with modes in [lo, hi]. On failure the
/// window is widened symmetrically by `widen` once, then NotInSpan is thrown.
template <class K>
std::map<HFunction, K> pbw_decompose(const RootDatum<K>& rd, const ShuffleElem<K>& F,
                                     int lo, int hi, int widen = 0) {
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<HFunction> hs = enumerate_h(rd, F.grading(), lo, hi);
    std::vector<ShuffleElem<K>> images;
    images.reserve(hs.size());
    for (const auto& h : hs) images.push_back(pbw_image(rd, h));
    auto sol = solve_in_span(images, F);
    if (sol) {
      std::map<HFunction, K> out;
      for (size_t i = 0; i < hs.size(); ++i)
        if (!(*sol)[i].is_zero()) out.emplace(hs[i], (*sol)[i]);
      return out;
    }
    if (widen == 0) break;
    lo -= widen;
    hi += widen;
    widen = 0;
  }
  throw NotInSpan();
}

}  // namespace qsh
