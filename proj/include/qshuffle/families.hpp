#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qshuffle/laurent.hpp"

namespace qsh {

struct FamilyMismatch : std::invalid_argument {
  FamilyMismatch() : std::invalid_argument("elements belong to different families") {}
};
struct GradingMismatch : std::invalid_argument {
  GradingMismatch() : std::invalid_argument("grading mismatch") {}
};
struct SymmetryViolation : std::invalid_argument {
  SymmetryViolation() : std::invalid_argument("numerator violates the group symmetry") {}
};

enum class FamilyId { Lambda, OmegaFerm, OmegaOneFerm, Symmetric };

/// Kernel entry omega(z): 1 when trivial, else sign * (z - c) / (z - 1).
template <class K>
struct Kernel {
  bool trivial = true;
  K c = K(1);
  int sign = 1;
};

struct VarGroup {
  std::string name;
  bool skew = false;
};

/// Static description of one shuffle family: variable groups with their
/// symmetry type, the pole pairs (unordered, stored with g < h; the element
/// denominator is the product of all cross differences x_{g,r} - x_{h,s}),
/// and the kernel matrix indexed by ordered group pairs.
template <class K>
struct FamilySpec {
  FamilyId id;
  std::vector<VarGroup> groups;
  std::vector<std::pair<int, int>> poles;
  std::vector<std::vector<Kernel<K>>> kernel;

  int group_count() const { return static_cast<int>(groups.size()); }
  bool has_pole(int g, int h) const {
    for (auto [a, b] : poles)
      if ((a == g && b == h) || (a == h && b == g)) return true;
    return false;
  }
  bool has_diagonal_kernel(int g) const { return !kernel[g][g].trivial; }
};

template <class K>
using FamilyPtr = std::shared_ptr<const FamilySpec<K>>;

namespace family_detail {
template <class K>
Kernel<K> kern(const K& c, int sign = 1) {
  if (c == K(1)) return Kernel<K>{};  // (z-1)/(z-1) = 1
  return Kernel<K>{false, c, sign};
}
}  // namespace family_detail

/// Two skew groups x, y; kernel (z + v^{-1})/(z - 1) in both directions;
/// poles between the groups.
template <class K>
FamilyPtr<K> lambda_family(const K& v) {
  auto spec = std::make_shared<FamilySpec<K>>();
  spec->id = FamilyId::Lambda;
  spec->groups = {{"x", true}, {"y", true}};
  spec->poles = {{0, 1}};
  K mvinv = K(0) - K(1) / v;
  spec->kernel.assign(2, std::vector<Kernel<K>>(2));
  spec->kernel[0][1] = family_detail::kern(mvinv);
  spec->kernel[1][0] = family_detail::kern(mvinv);
  return spec;
}

/// All-fermionic presentation: three skew groups, poles between all pairs,
/// antisymmetric kernel matrix omega_{ij} = -omega_{ji} = (z - v^{-a_ij})/(z-1)
/// with a_12 = 1, a_13 = theta, a_23 = -theta-1 (u stands for v^theta).
template <class K>
FamilyPtr<K> omega_family(const K& v, const K& u) {
  auto spec = std::make_shared<FamilySpec<K>>();
  spec->id = FamilyId::OmegaFerm;
  spec->groups = {{"x1", true}, {"x2", true}, {"x3", true}};
  spec->poles = {{0, 1}, {0, 2}, {1, 2}};
  spec->kernel.assign(3, std::vector<Kernel<K>>(3));
  K c12 = K(1) / v;      // v^{-a_12}
  K c13 = K(1) / u;      // v^{-a_13} = v^{-theta}
  K c23 = v * u;         // v^{-a_23} = v^{theta+1}
  using family_detail::kern;
  spec->kernel[0][1] = kern(c12, 1);
  spec->kernel[1][0] = kern(c12, -1);
  spec->kernel[0][2] = kern(c13, 1);
  spec->kernel[2][0] = kern(c13, -1);
  spec->kernel[1][2] = kern(c23, 1);
  spec->kernel[2][1] = kern(c23, -1);
  return spec;
}

/// One-fermionic presentation: groups 1 and 3 symmetric, group 2 skew;
/// poles {1,2} and {2,3}; omega_{ij} = (z - v^{-d_i a_ij})/(z - 1) for all
/// ordered pairs, with Cartan rows (2,-1,0 / -1,0,-theta / 0,-1,2) and
/// d = (1, 1, theta).
template <class K>
FamilyPtr<K> omega_prime_family(const K& v, const K& u) {
  auto spec = std::make_shared<FamilySpec<K>>();
  spec->id = FamilyId::OmegaOneFerm;
  spec->groups = {{"x1", false}, {"x2", true}, {"x3", false}};
  spec->poles = {{0, 1}, {1, 2}};
  spec->kernel.assign(3, std::vector<Kernel<K>>(3));
  using family_detail::kern;
  spec->kernel[0][0] = kern(K(1) / (v * v));  // v^{-d_1 a_11} = v^{-2}
  spec->kernel[0][1] = kern(v);               // v^{-d_1 a_12} = v
  spec->kernel[1][0] = kern(v);               // v^{-d_2 a_21} = v
  spec->kernel[1][2] = kern(u);               // v^{-d_2 a_23} = v^{theta}
  spec->kernel[2][1] = kern(u);               // v^{-d_3 a_32} = v^{theta}
  spec->kernel[2][2] = kern(K(1) / (u * u));  // v^{-d_3 a_33} = v^{-2 theta}
  return spec;
}

/// Single symmetric group, kernel (z - v)/(z - 1), no poles (Hall-Littlewood).
template <class K>
FamilyPtr<K> symmetric_family(const K& v) {
  auto spec = std::make_shared<FamilySpec<K>>();
  spec->id = FamilyId::Symmetric;
  spec->groups = {{"x", false}};
  spec->kernel.assign(1, std::vector<Kernel<K>>(1));
  spec->kernel[0][0] = family_detail::kern(v);
  return spec;
}

/// Element of a shuffle family: the numerator Laurent polynomial in the
/// group-major variable layout; the denominator (product of pole-pair cross
/// differences) is implied by (family, grading).
template <class K>
class ShuffleElem {
 public:
  ShuffleElem(FamilyPtr<K> family, std::vector<int> grading, LaurentPoly<K> numerator,
              bool check_symmetry = true)
      : family_(std::move(family)), grading_(std::move(grading)), num_(std::move(numerator)) {
    if (static_cast<int>(grading_.size()) != family_->group_count())
      throw GradingMismatch();
    int total = 0;
    for (int g : grading_) total += g;
    if (num_.arity() != total) throw ArityMismatch();
    if (check_symmetry && !symmetry_ok()) throw SymmetryViolation();
  }

  static ShuffleElem unit(FamilyPtr<K> family) {
    int n = family->group_count();
    return ShuffleElem(std::move(family), std::vector<int>(n, 0),
                       LaurentPoly<K>::constant(0, K(1)), false);
  }
  /// Single variable x_{g,1}^k (grading = basis vector of group g).
  static ShuffleElem generator(FamilyPtr<K> family, int g, int k) {
    std::vector<int> grading(family->group_count(), 0);
    grading.at(g) = 1;
    return ShuffleElem(std::move(family), std::move(grading),
                       LaurentPoly<K>::variable(1, 0, k), false);
  }

  const FamilyPtr<K>& family() const { return family_; }
  const std::vector<int>& grading() const { return grading_; }
  const LaurentPoly<K>& num() const { return num_; }
  int arity() const { return num_.arity(); }
  bool is_zero() const { return num_.is_zero(); }

  /// Index of variable (group g, slot r) in the group-major layout.
  int var_index(int g, int r) const {
    int idx = r;
    for (int i = 0; i < g; ++i) idx += grading_[i];
    return idx;
  }

  bool same_shape(const ShuffleElem& o) const {
    return family_ == o.family_ && grading_ == o.grading_;
  }

  friend ShuffleElem operator+(const ShuffleElem& a, const ShuffleElem& b) {
    if (a.family_ != b.family_) throw FamilyMismatch();
    if (a.grading_ != b.grading_) throw GradingMismatch();
    return ShuffleElem(a.family_, a.grading_, a.num_ + b.num_, false);
  }
  friend ShuffleElem operator-(const ShuffleElem& a, const ShuffleElem& b) {
    if (a.family_ != b.family_) throw FamilyMismatch();
    if (a.grading_ != b.grading_) throw GradingMismatch();
    return ShuffleElem(a.family_, a.grading_, a.num_ - b.num_, false);
  }
  ShuffleElem scaled(const K& c) const {
    return ShuffleElem(family_, grading_, num_.scaled(c), false);
  }
  friend bool operator==(const ShuffleElem& a, const ShuffleElem& b) {
    return a.family_ == b.family_ && a.grading_ == b.grading_ && a.num_ == b.num_;
  }
  friend bool operator!=(const ShuffleElem& a, const ShuffleElem& b) { return !(a == b); }

  /// True when the numerator has the required per-group (skew-)symmetry.
  bool symmetry_ok() const {
    for (int g = 0; g < family_->group_count(); ++g) {
      for (int r = 0; r + 1 < grading_[g]; ++r) {
        std::vector<int> perm(num_.arity());
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[var_index(g, r)], perm[var_index(g, r + 1)]);
        LaurentPoly<K> p = num_.permuted(perm);
        if (family_->groups[g].skew) p = -p;
        if (p != num_) return false;
      }
    }
    return true;
  }

  /// Value of the element (numerator over pole product) at a point.
  K eval(const std::vector<K>& point) const {
    K den(1);
    for (auto [g, h] : family_->poles)
      for (int r = 0; r < grading_[g]; ++r)
        for (int s = 0; s < grading_[h]; ++s)
          den *= point[var_index(g, r)] - point[var_index(h, s)];
    if (den.is_zero()) throw PoleAtPoint();
    return num_.eval(point) / den;
  }

 private:
  FamilyPtr<K> family_;
  std::vector<int> grading_;
  LaurentPoly<K> num_;
};

/// The shuffle product. The returned numerator is
///   GroupSym[ num_F * num_G * (kernel numerators) * (unconsumed pole
///   factors) * (complement Vandermondes) ] / (full Vandermondes),
/// where the Vandermonde bookkeeping realizes the same-group kernel
/// denominators of symmetric groups, and the accumulated sign accounts for
/// kernel signs and pole-factor orientation flips.
template <class K>
ShuffleElem<K> shuffle(const ShuffleElem<K>& F, const ShuffleElem<K>& G) {
  if (F.family() != G.family()) throw FamilyMismatch();
  const auto& fam = *F.family();
  const int ng = fam.group_count();
  std::vector<int> grading(ng);
  int total = 0;
  for (int g = 0; g < ng; ++g) {
    grading[g] = F.grading()[g] + G.grading()[g];
    total += grading[g];
  }
  ShuffleElem<K> R(F.family(), grading, LaurentPoly<K>(total), false);
  // Combined slots: per group, F's variables first, then G's.
  auto cvar = [&](int g, int r, bool from_G) {
    return R.var_index(g, r + (from_G ? F.grading()[g] : 0));
  };

  // Embed both numerators.
  std::vector<int> permF, permG;
  for (int g = 0; g < ng; ++g)
    for (int r = 0; r < F.grading()[g]; ++r) permF.push_back(cvar(g, r, false));
  for (int g = 0; g < ng; ++g)
    for (int s = 0; s < G.grading()[g]; ++s) permG.push_back(cvar(g, s, true));
  auto embed = [&](const LaurentPoly<K>& p, const std::vector<int>& target) {
    std::vector<std::pair<K, int>> plan;
    for (int t : target) plan.emplace_back(K(1), t);
    return p.substitute(plan, total);
  };
  LaurentPoly<K> P = embed(F.num(), permF) * embed(G.num(), permG);

  bool negate = false;
  auto diff = [&](int i, const K& c, int j) {  // x_i - c * x_j
    return LaurentPoly<K>::variable(total, i) -
           LaurentPoly<K>::variable(total, j).scaled(c);
  };
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < ng; ++b) {
      const Kernel<K>& ker = fam.kernel[a][b];
      bool pole = a != b && fam.has_pole(a, b);
      if (ker.trivial && !pole) continue;
      for (int r = 0; r < F.grading()[a]; ++r)
        for (int s = 0; s < G.grading()[b]; ++s) {
          int X = cvar(a, r, false), Y = cvar(b, s, true);
          if (ker.trivial) {
            // Pole factor not consumed by any kernel; multiply it back in,
            // oriented canonically (smaller group first).
            P = P * (a < b ? diff(X, K(1), Y) : diff(Y, K(1), X));
          } else {
            P = P * diff(X, ker.c, Y);
            if (ker.sign < 0) negate = !negate;
            if (a != b) {
              if (!pole)
                throw std::logic_error("nontrivial cross kernel without pole pair");
              if (a > b) negate = !negate;  // (x_a - x_b) vs canonical (x_b - x_a)
            }
          }
        }
    }

  // Same-group kernel denominators: multiply by the complement Vandermondes,
  // skew-symmetrize those groups, then divide by the full Vandermondes.
  LaurentPoly<K> vfull = LaurentPoly<K>::constant(total, K(1));
  bool any_diag = false;
  std::vector<SymGroup> sym_groups(ng);
  for (int g = 0; g < ng; ++g) {
    for (int r = 0; r < grading[g]; ++r) sym_groups[g].vars.push_back(R.var_index(g, r));
    sym_groups[g].skew = fam.groups[g].skew;
    if (!fam.has_diagonal_kernel(g)) continue;
    any_diag = true;
    sym_groups[g].skew = true;
    int kf = F.grading()[g];
    auto block_vand = [&](int lo, int hi) {
      for (int r = lo; r < hi; ++r)
        for (int s = r + 1; s < hi; ++s)
          P = P * diff(R.var_index(g, r), K(1), R.var_index(g, s));
    };
    block_vand(0, kf);                // F-block pairs
    block_vand(kf, grading[g]);       // G-block pairs
    for (int r = 0; r < grading[g]; ++r)
      for (int s = r + 1; s < grading[g]; ++s)
        vfull = vfull * diff(R.var_index(g, r), K(1), R.var_index(g, s));
  }

  LaurentPoly<K> S = P.group_symmetrize(sym_groups);
  if (any_diag) S = divide_exact(S, vfull);
  if (negate) S = -S;
  return ShuffleElem<K>(F.family(), grading, std::move(S), false);
}

/// Direct permutation-sum evaluation of F ⋆ G at a numeric point — the
/// normative definition, used as the oracle for the numerator algorithm.
template <class K>
K shuffle_eval_direct(const ShuffleElem<K>& F, const ShuffleElem<K>& G,
                      const std::vector<K>& point) {
  if (F.family() != G.family()) throw FamilyMismatch();
  const auto& fam = *F.family();
  const int ng = fam.group_count();
  std::vector<int> grading(ng);
  int total = 0;
  for (int g = 0; g < ng; ++g) {
    grading[g] = F.grading()[g] + G.grading()[g];
    total += grading[g];
  }
  ShuffleElem<K> R(F.family(), grading, LaurentPoly<K>(total), false);

  // Per-group permutations of the combined slots.
  std::vector<std::vector<std::pair<std::vector<int>, int>>> perms(ng);
  for (int g = 0; g < ng; ++g)
    for_each_permutation(grading[g], [&](const std::vector<int>& p, int sign) {
      perms[g].emplace_back(p, fam.groups[g].skew ? sign : 1);
    });

  K acc(0);
  std::vector<int> choice(ng, 0);
  long norm = 1;
  for (int g = 0; g < ng; ++g)
    for (long f = 2; f <= grading[g]; ++f) norm *= f;
  while (true) {
    // Value of combined variable (g, slot r) under the current permutation.
    auto val = [&](int g, int r) { return point[R.var_index(g, perms[g][choice[g]].first[r])]; };
    int sign = 1;
    for (int g = 0; g < ng; ++g) sign *= perms[g][choice[g]].second;

    std::vector<K> ptF, ptG;
    for (int g = 0; g < ng; ++g)
      for (int r = 0; r < F.grading()[g]; ++r) ptF.push_back(val(g, r));
    for (int g = 0; g < ng; ++g)
      for (int s = 0; s < G.grading()[g]; ++s) ptG.push_back(val(g, F.grading()[g] + s));

    K term = F.eval(ptF) * G.eval(ptG);
    for (int a = 0; a < ng; ++a)
      for (int b = 0; b < ng; ++b) {
        const Kernel<K>& ker = fam.kernel[a][b];
        if (ker.trivial) continue;
        for (int r = 0; r < F.grading()[a]; ++r)
          for (int s = 0; s < G.grading()[b]; ++s) {
            K X = val(a, r), Y = val(b, F.grading()[b] + s);
            K num = X - ker.c * Y;
            if (ker.sign < 0) num = K(0) - num;
            term *= num / (X - Y);
          }
      }
    if (sign < 0) term = K(0) - term;
    acc += term;

    int g = 0;
    while (g < ng && ++choice[g] == static_cast<int>(perms[g].size())) choice[g++] = 0;
    if (g == ng) break;
  }
  return acc / K(norm);
}

}  // namespace qsh
