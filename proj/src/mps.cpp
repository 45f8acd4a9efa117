#include "quivmod/mps.hpp"

#include <numeric>

namespace quivmod {

namespace {

void require_coprime(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("MPS formula requires a, b >= 1");
  if (std::gcd(a, b) != 1)
    throw DomainError("MPS formula requires gcd(a,b) = 1; got (" + std::to_string(a) + "," +
                      std::to_string(b) + ")");
}

}  // namespace

RationalFunction mps_weight_poincare(const Partition& p) {
  RationalFunction w = RationalFunction::constant(Rat(1));
  for (const auto& [l, count] : p.multiplicities()) {
    // (y - y^-1) / (l (y^l - y^-l)), sign (-1)^{l-1}
    LaurentPolynomial num = LaurentPolynomial::monomial(1) - LaurentPolynomial::monomial(-1);
    LaurentPolynomial den =
        (LaurentPolynomial::monomial(l) - LaurentPolynomial::monomial(-l)) * Rat(l);
    RationalFunction base(l % 2 == 0 ? -num : num, den);
    for (int i = 0; i < count; ++i) w *= base;
    w *= make_rat(1, factorial(static_cast<unsigned long>(count)));
  }
  return w;
}

Rat mps_weight_euler(const Partition& p) {
  Rat w(1);
  for (const auto& [l, count] : p.multiplicities()) {
    Rat factor = make_rat(1, pow_int(Int(l), 2ul * static_cast<unsigned long>(count)));
    if (l % 2 == 0 && count % 2 == 1) factor = -factor;  // (-1)^{count (l-1)}
    w *= factor * make_rat(1, factorial(static_cast<unsigned long>(count)));
  }
  return w;
}

LaurentPolynomial mps_poincare(int a, int b, std::int64_t m, ReinekeEngine& engine) {
  require_coprime(a, b);
  if (m < 1) throw DomainError("MPS formula requires m >= 1");

  RationalFunction total;
  for (const PartitionPair& pair : partition_pairs(a, b)) {
    Quiver q = Quiver::bipartite(pair.source, pair.sink, m);
    DimensionVector ones = DimensionVector::ones(q.vertex_count());
    InvariantRecord rec = engine.invariant(q, ones);
    LaurentPolynomial p_y = rec.poincare.substitute_power(2);  // q -> y^2
    std::int64_t self_pairing = euler_form(q, ones, ones);
    RationalFunction term(p_y.shifted(self_pairing));
    term *= mps_weight_poincare(pair.source);
    term *= mps_weight_poincare(pair.sink);
    total += term;
  }
  std::int64_t kron_pairing =
      static_cast<std::int64_t>(a) * a + static_cast<std::int64_t>(b) * b - m * a * b;
  total *= RationalFunction(LaurentPolynomial::monomial(-kron_pairing));
  return total.to_laurent();
}

Int mps_euler(int a, int b, std::int64_t m, ReinekeEngine& engine, ChiPath path) {
  require_coprime(a, b);
  if (m < 1) throw DomainError("MPS formula requires m >= 1");

  Rat total(0);
  for (const PartitionPair& pair : partition_pairs(a, b)) {
    Int chi;
    if (path == ChiPath::direct) {
      Quiver q = Quiver::bipartite(pair.source, pair.sink, m);
      chi = engine.euler_characteristic(q, DimensionVector::ones(q.vertex_count()));
    } else {
      Quiver q1 = Quiver::bipartite(pair.source, pair.sink, 1);
      Int chi1 = engine.euler_characteristic(q1, DimensionVector::ones(q1.vertex_count()));
      unsigned long s =
          static_cast<unsigned long>(pair.source.part_count() + pair.sink.part_count() - 1);
      chi = pow_int(Int(m), s) * chi1;
    }
    total += Rat(chi) * mps_weight_euler(pair.source) * mps_weight_euler(pair.sink);
  }
  return to_integer(total, "MPS Euler sum");
}

LaurentPolynomial euler_polynomial_in_m(int a, int b, ReinekeEngine& engine) {
  require_coprime(a, b);
  LaurentPolynomial poly;
  for (const PartitionPair& pair : partition_pairs(a, b)) {
    Quiver q1 = Quiver::bipartite(pair.source, pair.sink, 1);
    Int chi1 = engine.euler_characteristic(q1, DimensionVector::ones(q1.vertex_count()));
    std::int64_t degree = pair.source.part_count() + pair.sink.part_count() - 1;
    poly.add_term(degree, Rat(chi1) * mps_weight_euler(pair.source) * mps_weight_euler(pair.sink));
  }
  return poly;
}

MpsComparison compare_mps_reineke(int a, int b, std::int64_t m, ReinekeEngine& engine) {
  MpsComparison cmp;
  cmp.mps = mps_poincare(a, b, m, engine);
  cmp.reineke =
      engine.poincare_polynomial(Quiver::kronecker(m), DimensionVector{a, b}).substitute_power(2);
  if (cmp.reineke.is_zero() || cmp.mps.is_zero()) {
    cmp.shift = 0;
    cmp.agree = cmp.reineke.is_zero() && cmp.mps.is_zero();
    return cmp;
  }
  cmp.shift = cmp.mps.min_exponent() - cmp.reineke.min_exponent();
  cmp.agree = (cmp.mps == cmp.reineke.shifted(cmp.shift));
  return cmp;
}

}  // namespace quivmod
