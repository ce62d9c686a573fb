#include "qshuffle/cyclo.hpp"

#include <map>
#include <sstream>

namespace qsh {
namespace {

using detail::UniPoly;
using detail::uni_div_exact;
using detail::uni_mul;
using detail::uni_rem;
using detail::uni_trim;

UniPoly compute_cyclotomic(int n) {
  // z^n - 1 divided by Phi_d for every proper divisor d of n.
  UniPoly p(n + 1, Rat(0));
  p[0] = Rat(-1);
  p[n] = Rat(1);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = uni_div_exact(p, cyclotomic(d));
  return p;
}

}  // namespace

const UniPoly& cyclotomic(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::map<int, UniPoly> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_cyclotomic(n)).first;
  return it->second;
}

CycloScalar::CycloScalar(int n, std::vector<Rat> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  reduce();
}

CycloScalar CycloScalar::zeta_pow(int n, long k) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  long r = k % n;
  if (r < 0) r += n;
  std::vector<Rat> c(r + 1, Rat(0));
  c[r] = Rat(1);
  return CycloScalar(n, std::move(c));
}

void CycloScalar::reduce() {
  uni_trim(coeffs_);
  if (n_ == 1) {
    // Phi_1 = z - 1, so the residue is the value at z = 1.
    Rat acc(0);
    for (const auto& c : coeffs_) acc += c;
    set_const(acc);
    return;
  }
  const UniPoly& phi = cyclotomic(n_);
  if (coeffs_.size() >= phi.size()) coeffs_ = uni_rem(std::move(coeffs_), phi);
}

void CycloScalar::align(CycloScalar& a, CycloScalar& b) {
  if (a.n_ == b.n_) return;
  if (a.n_ == 1) {
    a.n_ = b.n_;
    a.reduce();
  } else if (b.n_ == 1) {
    b.n_ = a.n_;
    b.reduce();
  } else {
    throw std::invalid_argument("mixed cyclotomic orders");
  }
}

CycloScalar operator+(const CycloScalar& a, const CycloScalar& b) {
  CycloScalar x = a, y = b;
  CycloScalar::align(x, y);
  if (x.coeffs_.size() < y.coeffs_.size()) x.coeffs_.resize(y.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < y.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  x.reduce();
  return x;
}

CycloScalar operator-(const CycloScalar& a, const CycloScalar& b) { return a + (-b); }

CycloScalar operator-(const CycloScalar& a) {
  CycloScalar r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
  CycloScalar x = a, y = b;
  CycloScalar::align(x, y);
  x.coeffs_ = uni_mul(x.coeffs_, y.coeffs_);
  x.reduce();
  return x;
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (n_ == 1) {
    CycloScalar r;
    r.set_const(Rat(1) / coeffs_[0]);
    return r;
  }
  // Extended Euclid: s*coeffs + t*phi = gcd = 1 (phi irreducible over Q).
  UniPoly r0 = cyclotomic(n_), r1 = coeffs_;
  UniPoly s0 = {}, s1 = {Rat(1)};
  while (!r1.empty()) {
    // Quotient of r0 by r1.
    UniPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
    UniPoly rem = r0;
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rat c = rem.back() / r1.back();
      size_t off = rem.size() - r1.size();
      q[off] = c;
      for (size_t i = 0; i < r1.size(); ++i) rem[off + i] -= c * r1[i];
      uni_trim(rem);
    }
    uni_trim(q);
    UniPoly qs = uni_mul(q, s1);
    UniPoly s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    uni_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw std::logic_error("cyclotomic polynomial not coprime to element");
  CycloScalar out;
  out.n_ = n_;
  out.coeffs_ = std::move(s0);
  for (auto& c : out.coeffs_) c /= r0[0];
  out.reduce();
  return out;
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
  CycloScalar x = a, y = b;
  CycloScalar::align(x, y);
  return x.coeffs_ == y.coeffs_;
}

std::string CycloScalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (qsh::is_zero(coeffs_[i])) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i].get_str();
    if (i > 0) os << "*z^" << i;
  }
  return os.str();
}

}  // namespace qsh
