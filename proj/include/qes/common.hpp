#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qes {

// Arbitrary-precision rational, canonical form (gcd=1, denominator>0)
// maintained by mpq_class itself after canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Serialization as "p/q" (plain "p" when q == 1).
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Exact square root of a nonnegative rational, if it is a perfect square.
inline std::optional<Rational> rat_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  Integer num = r.get_num(), den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  Rational out(sn, sd);
  out.canonicalize();
  return out;
}

inline Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

// Exponent vector order: graded first, then lexicographic. Used as the
// canonical term order everywhere (deterministic serialization depends on it).
struct GradedLex {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

// Seeded rational draws with numerator/denominator bounded by 97; keeps
// exact arithmetic cheap while giving proof-strength identity testing.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  Rational rational(long bound = 97) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return rat(num(gen_), den(gen_));
  }

  Rational nonzero_rational(long bound = 97) {
    for (;;) {
      Rational r = rational(bound);
      if (r != 0) return r;
    }
  }

  long integer(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(gen_);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace qes
