#pragma once

#include <cstdint>

#include "quivmod/partition.hpp"
#include "quivmod/ratfun.hpp"
#include "quivmod/reineke.hpp"

namespace quivmod {

/// Per-partition weight at the Poincare level, as an exact rational function
/// in y:  prod_l (1/a_l!) * ((y - y^-1) / (l (y^l - y^-l)) * (-1)^{l-1})^{a_l}
RationalFunction mps_weight_poincare(const Partition& p);

/// Its y -> 1 limit:  prod_l (1/a_l!) * (-1)^{a_l (l-1)} / l^{2 a_l}
Rat mps_weight_euler(const Partition& p);

/// Poincare-level MPS evaluation for K^m(a,b), gcd(a,b) = 1:
///
///   y^{-<(a,b),(a,b)>_{K^m}} * sum over partition pairs of
///   y^{<1,1>_{Q^m(ab,bb)}} * P(Q^m(ab,bb), y) * weight(ab) * weight(bb)
///
/// with each P computed by the Reineke engine in q and mapped q -> y^2.
/// The rational-function sum must collapse to a Laurent polynomial in y.
LaurentPolynomial mps_poincare(int a, int b, std::int64_t m, ReinekeEngine& engine);

enum class ChiPath {
  scaling,  // chi(Q^m) = m^{S_a + S_b - 1} * chi(Q^1), the default
  direct,   // chi(Q^m) evaluated by the Reineke engine at m; scaling-law oracle
};

/// Euler-level MPS sum; the rational intermediate must land on an integer.
Int mps_euler(int a, int b, std::int64_t m, ReinekeEngine& engine,
              ChiPath path = ChiPath::scaling);

/// chi(K^m(a,b)) as an exact polynomial in formal m: sum over partition pairs
/// of m^{S_a + S_b - 1} * chi(Q^1(ab,bb)) * weight(ab) * weight(bb).
/// Degree a+b-1; leading coefficient chi(Q^1(a,b)) / (a! b!).
LaurentPolynomial euler_polynomial_in_m(int a, int b, ReinekeEngine& engine);

/// Side-by-side Poincare-level comparison. `shift` is the single monomial
/// exponent k with mps == y^k * reineke(q -> y^2), measured, not assumed.
struct MpsComparison {
  LaurentPolynomial mps;        // in y
  LaurentPolynomial reineke;    // in y (q -> y^2)
  bool agree = false;
  std::int64_t shift = 0;
};

MpsComparison compare_mps_reineke(int a, int b, std::int64_t m, ReinekeEngine& engine);

}  // namespace quivmod
