#pragma once

#include <cstdint>

#include "quivmod/laurent.hpp"
#include "quivmod/reineke.hpp"

namespace quivmod {

/// Weist's closed form:
///   chi(K^m(a,a+1)) = m / ((a+1)((m-1)a+m)) * binom((m-1)^2 a + (m-1) m, a)
/// Exact big-integer evaluation; the division must be exact.
Int weist_chi(int a, std::int64_t m);

/// The same closed form rebuilt as an exact polynomial in formal m
/// (degree 2a), via polynomial arithmetic and one exact linear division.
LaurentPolynomial weist_polynomial_in_m(int a);

/// chi(Q^1(a,a+1)) = (a+1)! * (a+1)^{a-2}  (rational intermediate at a=1).
Int chi_q1_staircase(int a);

/// chi(Q^1(2,2a+1)) = (2a+1)! / a!^2.
Int chi_q1_two_row(int a);

/// a! b! chi(K^m(a,b)) / (m^{a+b-1} chi(Q^1(a,b))), exact; chi(K^m(a,b))
/// evaluated through euler_polynomial_in_m.
Rat asymptotic_ratio(int a, int b, const Int& m, ReinekeEngine& engine);

/// ln(chi(K^m(a,b))) / ((a+b-1) ln m); both logarithms via the big-integer
/// mantissa/exponent split. Requires m >= 2 and chi > 0.
double log_ratio(int a, int b, const Int& m, ReinekeEngine& engine);

/// ln(chi(Q^1(a,b)) / (a! b!)) / (a+b-1).
double douglas_estimate(int a, int b, ReinekeEngine& engine);

struct AsymptoticSample {
  int a = 0;
  int b = 0;
  Int m;
  Rat ratio;             // exact
  double log_ratio = 0;  // the only floating-point field
};

AsymptoticSample asymptotic_sample(int a, int b, const Int& m, ReinekeEngine& engine);

}  // namespace quivmod
