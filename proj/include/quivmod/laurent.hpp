#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "quivmod/intmath.hpp"

namespace quivmod {

/// Exact Laurent polynomial in one formal variable with arbitrary-precision
/// rational coefficients. Sparse exponent map; the zero polynomial is the
/// empty map and no stored coefficient is ever zero.
class LaurentPolynomial {
 public:
  using TermMap = std::map<std::int64_t, Rat>;

  LaurentPolynomial() = default;  // zero

  static LaurentPolynomial constant(const Rat& c);
  static LaurentPolynomial monomial(std::int64_t exponent, const Rat& coeff = Rat(1));
  static LaurentPolynomial variable();  // x^1

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }

  // Lowest/highest exponent with a nonzero coefficient; throws on zero.
  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;

  Rat coefficient(std::int64_t exponent) const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(std::int64_t exponent, const Rat& coeff);

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    a += b;
    return a;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    a -= b;
    return a;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator*=(const Rat& c);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rat& c) {
    a *= c;
    return a;
  }

  bool operator==(const LaurentPolynomial& o) const { return terms_ == o.terms_; }

  /// Sum of all coefficients (the value at 1).
  Rat evaluate_at_one() const;

  /// Value at x; x must be nonzero if negative exponents are present.
  Rat evaluate(const Rat& x) const;

  /// Every exponent multiplied by k (k >= 1), coefficients unchanged.
  LaurentPolynomial substitute_power(std::int64_t k) const;

  /// Multiply by x^delta.
  LaurentPolynomial shifted(std::int64_t delta) const;

  /// Exact quotient *this / divisor, or nullopt if the division leaves a
  /// remainder (or the divisor is zero).
  std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& divisor) const;

  bool has_integer_coefficients() const;

  /// Positive rational c such that (*this)/c has integer coefficients with
  /// collective gcd 1. Zero for the zero polynomial.
  Rat content() const;

  /// Canonical text form: terms by ascending exponent, e.g. "1 + 2*q + q^2".
  std::string to_string(std::string_view var = "q") const;
  static LaurentPolynomial parse(std::string_view text, std::string_view var = "q");

 private:
  TermMap terms_;
};

}  // namespace quivmod
