#include "quivmod/ratfun.hpp"

namespace quivmod {

RationalFunction::RationalFunction(LaurentPolynomial numerator, LaurentPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw ZeroDenominatorError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPolynomial::constant(Rat(1));
    return;
  }
  if (auto q = num_.divide_exact(den_)) {
    num_ = *q;
    den_ = LaurentPolynomial::constant(Rat(1));
  }
  // remove the common content of the pair
  Rat cn = num_.content(), cd = den_.content();
  Int g = gcd(Int(cn.get_num()), Int(cd.get_num()));
  Int l = lcm(Int(cn.get_den()), Int(cd.get_den()));
  Rat common = make_rat(g, l);
  if (common != 1) {
    Rat inv = make_rat(common.get_den(), common.get_num());
    num_ *= inv;
    den_ *= inv;
  }
  if (den_.terms().begin()->second < 0) {
    num_ *= Rat(-1);
    den_ *= Rat(-1);
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ *= Rat(-1);
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw ZeroDenominatorError("division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction& RationalFunction::operator*=(const Rat& c) {
  num_ *= c;
  normalize();
  return *this;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

LaurentPolynomial RationalFunction::to_laurent() const {
  auto q = num_.divide_exact(den_);
  if (!q)
    throw NotPolynomialError("rational function is not a Laurent polynomial: " + to_string());
  return *q;
}

Rat RationalFunction::evaluate_at_one() const {
  LaurentPolynomial n = num_, d = den_;
  const LaurentPolynomial x_minus_1 =
      LaurentPolynomial::variable() - LaurentPolynomial::constant(Rat(1));
  Rat dv = d.evaluate_at_one();
  while (dv == 0) {
    if (n.evaluate_at_one() != 0) throw DomainError("rational function has a pole at 1");
    auto nq = n.divide_exact(x_minus_1);
    auto dq = d.divide_exact(x_minus_1);
    if (!nq || !dq) throw DomainError("rational function has a pole at 1");
    n = *nq;
    d = *dq;
    dv = d.evaluate_at_one();
  }
  return n.evaluate_at_one() / dv;
}

std::string RationalFunction::to_string(std::string_view var) const {
  if (den_.is_one()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

}  // namespace quivmod
