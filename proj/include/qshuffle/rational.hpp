#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

namespace qsh {

/// Arbitrary-precision rational, canonical form maintained by GMP.
using Rat = mpq_class;

inline Rat rat_of(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

/// r^e for integer e (e may be negative; r must be nonzero then).
inline Rat rat_pow(const Rat& r, long e) {
  if (e == 0) return Rat(1);
  Rat base = r;
  bool inv = e < 0;
  unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rat acc(1);
  Rat b = base;
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  if (inv) return Rat(1) / acc;
  return acc;
}

/// Small nonzero rational from a seeded generator, for evaluation points.
inline Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  int n = num(rng);
  if (n == 0) n = 2;
  return rat_of(n, den(rng));
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace qsh
