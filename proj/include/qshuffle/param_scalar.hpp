#pragma once

#include <stdexcept>
#include <string>

#include "qshuffle/bivpoly.hpp"
#include "qshuffle/errors.hpp"

namespace qsh {

/// Element of Q(v, u), where u stands for v^theta with theta generic.
///
/// Representation: num / den with num a Laurent polynomial and den an
/// ordinary polynomial. Canonical form: num and den share no polynomial
/// factor, den has no monomial factor, den is primitive with positive
/// leading coefficient (lex v > u). The rational content lives in num.
/// Equal values have identical representations.
class ParamScalar {
 public:
  ParamScalar() : num_(), den_(BivPoly::constant(Rat(1))) {}
  ParamScalar(long n) : num_(BivPoly::constant(Rat(n))), den_(BivPoly::constant(Rat(1))) {}
  explicit ParamScalar(const Rat& r)
      : num_(BivPoly::constant(r)), den_(BivPoly::constant(Rat(1))) {}
  ParamScalar(BivPoly num, BivPoly den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
  }

  /// The monomial v^a u^b, i.e. v^{a + b*theta}.
  static ParamScalar vu(int a, int b) {
    ParamScalar s;
    s.num_ = BivPoly::monomial(Rat(1), a, b);
    return s;
  }
  /// [a + b*theta]_v = (v^a u^b - v^{-a} u^{-b}) / (v - v^{-1}).
  static ParamScalar quantum_number(int a, int b) {
    return (vu(a, b) - vu(-a, -b)) / (vu(1, 0) - vu(-1, 0));
  }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True when the value is c * v^a * u^b with c rational.
  bool is_monomial_unit() const { return num_.is_monomial() && den_.is_monomial(); }
  /// True when the value is a rational constant.
  bool is_rational() const {
    return num_.is_zero() ||
           (num_.is_monomial() && num_.leading().first == Exp2{0, 0} && den_.is_one());
  }

  const BivPoly& num() const { return num_; }
  const BivPoly& den() const { return den_; }

  friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) {
    ParamScalar r;
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
    r.reduce();
    return r;
  }
  friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) {
    ParamScalar r;
    r.num_ = a.num_ * b.den_ - b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
    r.reduce();
    return r;
  }
  friend ParamScalar operator-(const ParamScalar& a) {
    ParamScalar r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
    // a and b are each reduced, so only cross pairs can cancel; cancelling
    // them first keeps the gcd inputs small.
    auto cancel = [](BivPoly n, BivPoly d) {
      int32_t mv = std::min(n.min_vexp(), 0), mu = std::min(n.min_uexp(), 0);
      BivPoly n0 = n.shifted(-mv, -mu);
      BivPoly g = biv_gcd(n0, d);
      if (!g.is_one() && !g.is_monomial()) {
        n = biv_div_exact(n0, g).shifted(mv, mu);
        d = biv_div_exact(d, g);
      }
      return std::pair{n, d};
    };
    if (a.is_zero() || b.is_zero()) return ParamScalar();
    auto [n1, d2] = cancel(a.num_, b.den_);
    auto [n2, d1] = cancel(b.num_, a.den_);
    ParamScalar r;
    r.num_ = n1 * n2;
    r.den_ = d1 * d2;
    r.normalize(/*with_gcd=*/false);
    return r;
  }
  friend ParamScalar operator/(const ParamScalar& a, const ParamScalar& b) {
    return a * b.inverse();
  }
  ParamScalar& operator+=(const ParamScalar& o) { return *this = *this + o; }
  ParamScalar& operator-=(const ParamScalar& o) { return *this = *this - o; }
  ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }
  ParamScalar& operator/=(const ParamScalar& o) { return *this = *this / o; }

  ParamScalar inverse() const {
    if (is_zero()) throw DivisionByZero();
    ParamScalar r;
    r.num_ = den_;
    r.den_ = num_;
    r.reduce();
    return r;
  }

  friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const ParamScalar& a, const ParamScalar& b) { return !(a == b); }

  /// Exact value at a rational point (v0, u0); both must be nonzero.
  Rat eval(const Rat& v0, const Rat& u0) const {
    Rat d = den_.eval(v0, u0);
    if (qsh::is_zero(d)) throw PoleAtPoint();
    return num_.eval(v0, u0) / d;
  }

  /// Canonical text form: `num-poly / den-poly`, terms written c*v^a*u^b.
  std::string str() const;
  static ParamScalar parse(const std::string& text);

 private:
  BivPoly num_;
  BivPoly den_;

  void reduce() { normalize(/*with_gcd=*/true); }

  void normalize(bool with_gcd) {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
      den_ = BivPoly::constant(Rat(1));
      return;
    }
    // Move any monomial factor of den into num.
    int32_t dmv = den_.min_vexp(), dmu = den_.min_uexp();
    if (dmv != 0 || dmu != 0) {
      den_ = den_.shifted(-dmv, -dmu);
      num_ = num_.shifted(-dmv, -dmu);
    }
    if (with_gcd && !den_.is_one()) {
      int32_t nmv = num_.min_vexp(), nmu = num_.min_uexp();
      BivPoly n0 = num_.shifted(-std::min(nmv, 0), -std::min(nmu, 0));
      BivPoly g = biv_gcd(n0, den_);
      if (!g.is_one() && !g.is_monomial()) {
        n0 = biv_div_exact(n0, g);
        den_ = biv_div_exact(den_, g);
        num_ = n0.shifted(std::min(nmv, 0), std::min(nmu, 0));
        int32_t dv = den_.min_vexp(), du = den_.min_uexp();
        if (dv != 0 || du != 0) {
          den_ = den_.shifted(-dv, -du);
          num_ = num_.shifted(-dv, -du);
        }
      }
    }
    // Scale den to primitive with positive leading coefficient.
    Rat c = den_.content();
    if (den_.leading().second < 0) c = -c;
    if (c != 1) {
      BivPoly d2, n2;
      for (const auto& [e, cc] : den_.terms) d2.terms.emplace(e, cc / c);
      for (const auto& [e, cc] : num_.terms) n2.terms.emplace(e, cc / c);
      den_ = std::move(d2);
      num_ = std::move(n2);
    }
  }
};

}  // namespace qsh
