#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "quivmod/laurent.hpp"
#include "quivmod/quiver.hpp"

namespace quivmod {

class ResultCache;

/// Ordered decomposition d^1 + ... + d^s = d whose proper prefix sums all
/// pair strictly positively with d under the symplectic form.
struct AdmissibleDecomposition {
  std::vector<DimensionVector> parts;

  bool operator==(const AdmissibleDecomposition& o) const { return parts == o.parts; }
};

/// Cached result tuple for one moduli computation. The Poincare polynomial is
/// in q; euler is its value at 1.
struct InvariantRecord {
  std::string descriptor;
  DimensionVector dim;
  LaurentPolynomial poincare;
  Int euler;

  /// Enforces: euler == poincare(1); and for nonzero poincare, nonnegative
  /// integer coefficients, constant term 1, degree == expected_degree.
  /// The zero polynomial (empty moduli) is allowed as-is.
  void validate(std::int64_t expected_degree) const;

  static std::string cache_key(const std::string& descriptor, const DimensionVector& dim);
};

/// All ordered admissible decompositions of d, parts generated in ascending
/// lexicographic order at each depth (deterministic); the trivial
/// decomposition [d] is always present.
std::vector<AdmissibleDecomposition> admissible_decompositions(const Quiver& q,
                                                               const DimensionVector& d);

/// Throws CoprimalityViolationError if some nonzero proper sub-vector e <= d
/// has {e, d} = 0 (the moduli problem would not be of coprime type).
void check_coprime_type(const Quiver& q, const DimensionVector& d);

/// Evaluates the Harder-Narasimhan recursion over admissible decompositions:
///
///   P(q) = (q-1) * sum_{d^1..d^s admissible} (-1)^{s-1}
///          * q^{-sum_{k<=l} <d^l,d^k>}
///          * prod_k prod_v prod_{j=1}^{d^k_v} (1 - q^{-j})^{-1}
///
/// summed exactly over a common denominator and collapsed by one exact
/// division. Results are memoized in-process and, when a ResultCache is
/// attached, persisted across runs.
class ReinekeEngine {
 public:
  explicit ReinekeEngine(ResultCache* cache = nullptr, int jobs = 1);

  InvariantRecord invariant(const Quiver& q, const DimensionVector& d);
  LaurentPolynomial poincare_polynomial(const Quiver& q, const DimensionVector& d);
  Int euler_characteristic(const Quiver& q, const DimensionVector& d);

  int jobs() const { return jobs_; }
  void set_jobs(int jobs) { jobs_ = jobs < 1 ? 1 : jobs; }

  /// Snapshot of every record this engine has produced, sorted by cache key.
  std::vector<InvariantRecord> computed_records() const;

 private:
  InvariantRecord compute(const Quiver& q, const DimensionVector& d) const;

  mutable std::mutex mu_;
  std::map<std::string, InvariantRecord> memo_;
  ResultCache* cache_;
  int jobs_;
};

}  // namespace quivmod
