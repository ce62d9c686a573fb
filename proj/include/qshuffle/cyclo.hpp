#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qshuffle/bivpoly.hpp"
#include "qshuffle/errors.hpp"

namespace qsh {

/// n-th cyclotomic polynomial over Q, dense coefficients (index = degree).
const detail::UniPoly& cyclotomic(int n);

/// Element of the cyclotomic field Q(zeta_n), zeta_n a primitive n-th root
/// of unity, represented by its residue modulo the n-th cyclotomic
/// polynomial. Elements carry their order n; mixing orders is an error,
/// except that order-1 values (plain rationals) promote to any order.
class CycloScalar {
 public:
  CycloScalar() : n_(1) {}
  CycloScalar(long r) : n_(1) { set_const(Rat(r)); }
  explicit CycloScalar(const Rat& r) : n_(1) { set_const(r); }
  CycloScalar(int n, std::vector<Rat> coeffs);

  /// zeta_n^k (k may be negative).
  static CycloScalar zeta_pow(int n, long k);
  static CycloScalar zeta(int n) { return zeta_pow(n, 1); }

  int order() const { return n_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  friend CycloScalar operator+(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator-(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator-(const CycloScalar& a);
  friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) {
    return a * b.inverse();
  }
  CycloScalar& operator+=(const CycloScalar& o) { return *this = *this + o; }
  CycloScalar& operator-=(const CycloScalar& o) { return *this = *this - o; }
  CycloScalar& operator*=(const CycloScalar& o) { return *this = *this * o; }
  CycloScalar& operator/=(const CycloScalar& o) { return *this = *this / o; }

  CycloScalar inverse() const;

  friend bool operator==(const CycloScalar& a, const CycloScalar& b);
  friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

  std::string str() const;

 private:
  int n_;                    // order of the root of unity
  std::vector<Rat> coeffs_;  // residue mod cyclotomic(n_), coeffs_[i] * zeta^i

  void set_const(const Rat& r) {
    coeffs_.clear();
    if (!qsh::is_zero(r)) coeffs_.push_back(r);
  }
  void reduce();
  /// Lift both operands to a common order (only 1 -> n promotion allowed).
  static void align(CycloScalar& a, CycloScalar& b);
};

/// Residue of a univariate rational polynomial (coeffs[i] * z^i) modulo the
/// 2t-th cyclotomic polynomial, i.e. in Q(zeta_{2t}).
inline CycloScalar cyclo_reduce(std::vector<Rat> coeffs, int t) {
  return CycloScalar(2 * t, std::move(coeffs));
}

}  // namespace qsh
