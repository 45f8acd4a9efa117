#include "quivmod/closed_forms.hpp"

#include "quivmod/mps.hpp"

namespace quivmod {

Int weist_chi(int a, std::int64_t m) {
  if (a < 1 || m < 1) throw DomainError("weist_chi requires a >= 1, m >= 1");
  Int mm(static_cast<long>(m));
  Int upper = (mm - 1) * (mm - 1) * a + (mm - 1) * mm;
  Int num = mm * binomial(upper, static_cast<unsigned long>(a));
  Int den = Int(a + 1) * ((mm - 1) * a + mm);
  Int quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0)
    throw NonIntegerResultError("Weist closed form did not divide exactly at a=" +
                                std::to_string(a) + ", m=" + std::to_string(m));
  return quot;
}

LaurentPolynomial weist_polynomial_in_m(int a) {
  if (a < 1) throw DomainError("weist_polynomial_in_m requires a >= 1");
  const LaurentPolynomial x = LaurentPolynomial::variable();
  const LaurentPolynomial one = LaurentPolynomial::constant(Rat(1));
  // N = (m-1)((m-1)a + m), the binomial's upper index
  LaurentPolynomial upper = (x - one) * ((x - one) * Rat(a) + x);
  LaurentPolynomial binom = one;
  for (int i = 0; i < a; ++i) binom *= (upper - LaurentPolynomial::constant(Rat(i)));
  binom *= make_rat(1, factorial(static_cast<unsigned long>(a)));
  LaurentPolynomial num = x * binom;
  LaurentPolynomial den = ((x - one) * Rat(a) + x) * Rat(a + 1);
  auto quot = num.divide_exact(den);
  if (!quot)
    throw NonIntegerResultError("Weist closed form is not polynomial in m at a=" +
                                std::to_string(a));
  return *quot;
}

Int chi_q1_staircase(int a) {
  if (a < 1) throw DomainError("chi_q1_staircase requires a >= 1");
  // (a+1)! (a+1)^{a-2}; the a=1 case passes through a rational intermediate
  Rat value(factorial(static_cast<unsigned long>(a) + 1));
  if (a >= 2)
    value *= Rat(pow_int(Int(a + 1), static_cast<unsigned long>(a - 2)));
  else
    value /= Rat(pow_int(Int(a + 1), static_cast<unsigned long>(2 - a)));
  return to_integer(value, "chi(Q^1(a,a+1))");
}

Int chi_q1_two_row(int a) {
  if (a < 1) throw DomainError("chi_q1_two_row requires a >= 1");
  Int fa = factorial(static_cast<unsigned long>(a));
  return to_integer(make_rat(factorial(2ul * a + 1), fa * fa), "chi(Q^1(2,2a+1))");
}

namespace {

Int chi_kronecker_via_polynomial(int a, int b, const Int& m, ReinekeEngine& engine) {
  LaurentPolynomial poly = euler_polynomial_in_m(a, b, engine);
  return to_integer(poly.evaluate(Rat(m)), "chi(K^m(a,b))");
}

Int chi_q1_complete_bipartite(int a, int b, ReinekeEngine& engine) {
  Quiver q1 = Quiver::bipartite(Partition::trivial(a), Partition::trivial(b), 1);
  return engine.euler_characteristic(q1, DimensionVector::ones(q1.vertex_count()));
}

}  // namespace

Rat asymptotic_ratio(int a, int b, const Int& m, ReinekeEngine& engine) {
  if (a < 1 || b < 1 || a + b < 2) throw DomainError("asymptotic_ratio requires a, b >= 1");
  if (m < 1) throw DomainError("asymptotic_ratio requires m >= 1");
  Int chi_q1 = chi_q1_complete_bipartite(a, b, engine);
  if (chi_q1 == 0) throw ZeroDenominatorError("chi(Q^1(a,b)) = 0");
  Int chi_km = chi_kronecker_via_polynomial(a, b, m, engine);
  Int num = factorial(static_cast<unsigned long>(a)) * factorial(static_cast<unsigned long>(b)) *
            chi_km;
  Int den = pow_int(m, static_cast<unsigned long>(a + b - 1)) * chi_q1;
  return make_rat(num, den);
}

double log_ratio(int a, int b, const Int& m, ReinekeEngine& engine) {
  if (a + b < 2) throw DomainError("log_ratio requires a + b >= 2");
  if (m < 2) throw DomainError("log_ratio requires m >= 2");
  Int chi = chi_kronecker_via_polynomial(a, b, m, engine);
  if (chi <= 0)
    throw DomainError("log_ratio requires chi(K^m(a,b)) > 0; got " + chi.get_str());
  return log_mpz(chi) / (static_cast<double>(a + b - 1) * log_mpz(m));
}

double douglas_estimate(int a, int b, ReinekeEngine& engine) {
  if (a + b < 2) throw DomainError("douglas_estimate requires a + b >= 2");
  Int chi = chi_q1_complete_bipartite(a, b, engine);
  if (chi <= 0) throw DomainError("douglas_estimate requires chi(Q^1(a,b)) > 0");
  Rat value = make_rat(chi, factorial(static_cast<unsigned long>(a)) *
                                factorial(static_cast<unsigned long>(b)));
  double ln = log_mpz(value.get_num()) - log_mpz(value.get_den());
  return ln / static_cast<double>(a + b - 1);
}

AsymptoticSample asymptotic_sample(int a, int b, const Int& m, ReinekeEngine& engine) {
  AsymptoticSample s;
  s.a = a;
  s.b = b;
  s.m = m;
  s.ratio = asymptotic_ratio(a, b, m, engine);
  s.log_ratio = m >= 2 ? log_ratio(a, b, m, engine) : 0.0;
  return s;
}

}  // namespace quivmod
