#pragma once

#include <string>
#include <string_view>

#include "quivmod/laurent.hpp"

namespace quivmod {

/// Quotient of two Laurent polynomials, kept normalized: if the denominator
/// divides the numerator exactly the quotient collapses to denominator 1;
/// the common content of the pair is removed; the denominator's
/// lowest-exponent coefficient is positive.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(LaurentPolynomial::constant(Rat(1))) {}
  /*implicit*/ RationalFunction(LaurentPolynomial numerator)
      : num_(std::move(numerator)), den_(LaurentPolynomial::constant(Rat(1))) {
    normalize();
  }
  RationalFunction(LaurentPolynomial numerator, LaurentPolynomial denominator);

  static RationalFunction constant(const Rat& c) {
    return RationalFunction(LaurentPolynomial::constant(c));
  }

  const LaurentPolynomial& numerator() const { return num_; }
  const LaurentPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  RationalFunction& operator*=(const Rat& c);

  // Value equality (cross-multiplied); representations of equal values may differ.
  bool operator==(const RationalFunction& o) const;

  /// Collapse to a Laurent polynomial; throws NotPolynomialError if the
  /// division leaves a remainder.
  LaurentPolynomial to_laurent() const;

  /// Value at 1, cancelling any shared (x - 1) factors symbolically first.
  /// Throws DomainError on a genuine pole.
  Rat evaluate_at_one() const;

  std::string to_string(std::string_view var = "q") const;

 private:
  void normalize();

  LaurentPolynomial num_, den_;
};

}  // namespace quivmod
