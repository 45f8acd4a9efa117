#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "quivmod/errors.hpp"

namespace quivmod {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// binomial(n, k) with the convention binom(n, k) = 0 for 0 <= n < k
inline Int binomial(const Int& n, unsigned long k) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw ZeroDenominatorError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& q) {
  return mpz_cmp_ui(mpq_denref(q.get_mpq_t()), 1) == 0;
}

inline Int to_integer(const Rat& q, const char* what = "value") {
  if (!is_integer(q))
    throw NonIntegerResultError(std::string(what) + " is not an integer: " + q.get_str());
  return q.get_num();
}

// ln of a positive big integer, via mantissa/exponent split (no overflow).
inline double log_mpz(const Int& z) {
  if (z <= 0) throw DomainError("log_mpz requires a positive argument");
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace quivmod
