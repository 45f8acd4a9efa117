#include "quivmod/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "quivmod/closed_forms.hpp"
#include "quivmod/mps.hpp"

namespace quivmod {

namespace {

void add_check(SuiteReport& report, std::string name, bool pass, std::string detail) {
  report.checks.push_back({std::move(name), pass, std::move(detail)});
}

LaurentPolynomial q_power_line(std::int64_t m) {
  LaurentPolynomial p;
  for (std::int64_t i = 0; i < m; ++i) p.add_term(i, Rat(1));
  return p;
}

// Criterion: Kronecker sanity family P(K^m(1,1)) = 1 + q + ... + q^{m-1},
// chi = m, and the point moduli P(K^m(1,0)) = 1.
SuiteReport suite_reineke(ReinekeEngine& engine) {
  SuiteReport report{"reineke", {}};
  for (std::int64_t m = 1; m <= 6; ++m) {
    InvariantRecord rec = engine.invariant(Quiver::kronecker(m), DimensionVector{1, 1});
    bool ok = rec.poincare == q_power_line(m) && rec.euler == m;
    add_check(report, "kronecker-line/m=" + std::to_string(m), ok,
              ok ? "P = " + rec.poincare.to_string() : "got P = " + rec.poincare.to_string());
  }
  for (std::int64_t m = 1; m <= 6; ++m) {
    InvariantRecord rec = engine.invariant(Quiver::kronecker(m), DimensionVector{1, 0});
    bool ok = rec.poincare.is_one() && rec.euler == 1;
    add_check(report, "point/m=" + std::to_string(m), ok, "P = " + rec.poincare.to_string());
  }
  return report;
}

// Criteria: Weist closed form against the engine, the staircase and two-row
// closed forms with their frozen values, the shared Q^1(2,3) case, and the
// exact limit identity via leading coefficients of the Weist polynomial.
SuiteReport suite_closed_forms(ReinekeEngine& engine) {
  SuiteReport report{"closed-forms", {}};
  for (int a = 1; a <= 3; ++a) {
    for (std::int64_t m = 1; m <= 4; ++m) {
      Int expect = weist_chi(a, m);
      Int got = engine.euler_characteristic(Quiver::kronecker(m), DimensionVector{a, a + 1});
      add_check(report, "weist/a=" + std::to_string(a) + ",m=" + std::to_string(m), got == expect,
                "closed form " + expect.get_str() + ", engine " + got.get_str());
    }
  }

  const Int staircase_expect[] = {Int(1), Int(6), Int(96)};
  for (int a = 1; a <= 3; ++a) {
    Quiver q1 = Quiver::bipartite(Partition::trivial(a), Partition::trivial(a + 1), 1);
    Int direct = engine.euler_characteristic(q1, DimensionVector::ones(q1.vertex_count()));
    Int closed = chi_q1_staircase(a);
    bool ok = direct == closed && closed == staircase_expect[a - 1];
    add_check(report, "staircase/a=" + std::to_string(a), ok,
              "closed form " + closed.get_str() + ", engine " + direct.get_str());
  }
  {
    Quiver q1 = Quiver::bipartite(Partition::trivial(2), Partition::trivial(5), 1);
    Int direct = engine.euler_characteristic(q1, DimensionVector::ones(q1.vertex_count()));
    Int closed = chi_q1_two_row(2);
    bool ok = direct == closed && closed == 30;
    add_check(report, "two-row/a=2", ok,
              "closed form " + closed.get_str() + ", engine " + direct.get_str());
  }
  add_check(report, "shared/q1(2,3)", chi_q1_staircase(2) == 6 && chi_q1_two_row(1) == 6,
            "both closed forms give 6");

  for (int a = 1; a <= 3; ++a) {
    LaurentPolynomial poly = weist_polynomial_in_m(a);
    bool deg_ok = !poly.is_zero() && poly.max_exponent() == 2 * a;
    Rat lead = deg_ok ? poly.coefficient(2 * a) : Rat(0);
    Rat scaled = lead * Rat(factorial(static_cast<unsigned long>(a))) *
                 Rat(factorial(static_cast<unsigned long>(a) + 1));
    bool ok = deg_ok && scaled == Rat(chi_q1_staircase(a));
    add_check(report, "weist-limit/a=" + std::to_string(a), ok,
              "a!(a+1)! * leading = " + scaled.get_str());
  }
  return report;
}

// Criteria: Poincare-level MPS agreement up to one overall monomial, its
// y -> 1 limit against the Euler-level sum, the Euler-level grid against the
// engine, and the symbolic (1,2) polynomial.
SuiteReport suite_mps(ReinekeEngine& engine) {
  SuiteReport report{"mps", {}};
  struct Case {
    int a, b;
    std::int64_t m;
  };
  const Case poincare_cases[] = {{1, 1, 1}, {1, 1, 3}, {1, 2, 2}, {2, 3, 2}};
  for (const auto& c : poincare_cases) {
    std::string label = "(" + std::to_string(c.a) + "," + std::to_string(c.b) + "," +
                        std::to_string(c.m) + ")";
    MpsComparison cmp = compare_mps_reineke(c.a, c.b, c.m, engine);
    add_check(report, "poincare/" + label, cmp.agree, "shift=" + std::to_string(cmp.shift));
    Rat limit = cmp.mps.evaluate_at_one();
    Int euler = mps_euler(c.a, c.b, c.m, engine);
    add_check(report, "limit/" + label, limit == Rat(euler),
              "P(1) = " + limit.get_str() + ", chi = " + euler.get_str());
  }

  const std::pair<int, int> euler_cases[] = {{1, 1}, {1, 2}, {1, 3}, {2, 3}};
  for (const auto& [a, b] : euler_cases) {
    for (std::int64_t m = 1; m <= 4; ++m) {
      Int mps = mps_euler(a, b, m, engine);
      Int reineke = engine.euler_characteristic(Quiver::kronecker(m), DimensionVector{a, b});
      add_check(report,
                "euler/(" + std::to_string(a) + "," + std::to_string(b) + "),m=" +
                    std::to_string(m),
                mps == reineke, "mps " + mps.get_str() + ", reineke " + reineke.get_str());
    }
  }

  {
    LaurentPolynomial poly = euler_polynomial_in_m(1, 2, engine);
    LaurentPolynomial expect;
    expect.add_term(2, make_rat(1, 2));
    expect.add_term(1, make_rat(-1, 2));
    add_check(report, "euler-poly/(1,2)", poly == expect, "poly = " + poly.to_string("m"));
  }
  return report;
}

// Criterion: chi(Q^m(ab,bb)) = m^{S_a + S_b - 1} chi(Q^1(ab,bb)), both sides
// computed independently, over every partition pair of coprime (a,b) with
// a + b <= 5 and m in {2,3,4}.
SuiteReport suite_scaling(ReinekeEngine& engine) {
  SuiteReport report{"scaling", {}};
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; a + b <= 5; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (const PartitionPair& pair : partition_pairs(a, b)) {
        Quiver q1 = Quiver::bipartite(pair.source, pair.sink, 1);
        Int chi1 = engine.euler_characteristic(q1, DimensionVector::ones(q1.vertex_count()));
        unsigned long s =
            static_cast<unsigned long>(pair.source.part_count() + pair.sink.part_count() - 1);
        for (std::int64_t m = 2; m <= 4; ++m) {
          Quiver qm = Quiver::bipartite(pair.source, pair.sink, m);
          Int direct = engine.euler_characteristic(qm, DimensionVector::ones(qm.vertex_count()));
          Int scaled = pow_int(Int(static_cast<long>(m)), s) * chi1;
          add_check(report,
                    "scale/src=" + pair.source.to_string() + ";snk=" + pair.sink.to_string() +
                        ",m=" + std::to_string(m),
                    direct == scaled,
                    "direct " + direct.get_str() + ", scaled " + scaled.get_str());
        }
      }
    }
  }
  return report;
}

// Criteria: exact degree/leading-coefficient structure of the polynomial
// expansion in m, ratio convergence at m = 50 and 100, the exact log-ratio
// identity at (1,1), log-ratio at (2,3) and m = 10^6, and the pinned
// douglas_estimate values.
SuiteReport suite_asymptotics(ReinekeEngine& engine) {
  SuiteReport report{"asymptotics", {}};
  const std::pair<int, int> cases[] = {{1, 2}, {2, 3}, {3, 4}};
  for (const auto& [a, b] : cases) {
    std::string label = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    LaurentPolynomial poly = euler_polynomial_in_m(a, b, engine);
    bool deg_ok = !poly.is_zero() && poly.max_exponent() == a + b - 1 && poly.min_exponent() >= 0;
    add_check(report, "poly/" + label + "-degree", deg_ok, "poly = " + poly.to_string("m"));

    Quiver q1 = Quiver::bipartite(Partition::trivial(a), Partition::trivial(b), 1);
    Int chi1 = engine.euler_characteristic(q1, DimensionVector::ones(q1.vertex_count()));
    Rat expect_lead = make_rat(chi1, factorial(static_cast<unsigned long>(a)) *
                                         factorial(static_cast<unsigned long>(b)));
    Rat lead = deg_ok ? poly.coefficient(a + b - 1) : Rat(0);
    add_check(report, "poly/" + label + "-leading", lead == expect_lead,
              "leading " + lead.get_str() + ", chi(Q^1)/(a!b!) = " + expect_lead.get_str());

    Rat r100 = asymptotic_ratio(a, b, Int(100), engine);
    Rat r50 = asymptotic_ratio(a, b, Int(50), engine);
    Rat d100 = abs(r100 - 1), d50 = abs(r50 - 1);
    add_check(report, "ratio/" + label + "@100", d100 < make_rat(1, 10),
              "ratio = " + r100.get_str());
    add_check(report, "ratio-monotone/" + label, d100 < d50,
              "|ratio-1| " + d50.get_str() + " -> " + d100.get_str());
  }

  {
    bool ok = true;
    for (long m : {2L, 3L, 10L, 1000L}) ok = ok && log_ratio(1, 1, Int(m), engine) == 1.0;
    add_check(report, "log/(1,1)", ok, "exactly 1 for m in {2,3,10,1000}");
  }
  {
    double lr = log_ratio(2, 3, Int(1000000), engine);
    std::ostringstream os;
    os.precision(12);
    os << lr;
    add_check(report, "log/(2,3)@1e6", std::abs(lr - 1.0) < 0.05, "log_ratio = " + os.str());
  }
  {
    struct Pinned {
      int a, b;
      double value;
    };
    const Pinned pinned[] = {{1, 2, -0.3466}, {2, 3, -0.1733}, {3, 4, -0.0676}};
    for (const auto& p : pinned) {
      double got = douglas_estimate(p.a, p.b, engine);
      std::ostringstream os;
      os.precision(12);
      os << got;
      add_check(report,
                "douglas/(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")",
                std::abs(got - p.value) <= 5e-5, "estimate = " + os.str());
    }
  }
  return report;
}

bool palindromic(const LaurentPolynomial& p, std::int64_t top) {
  for (const auto& [e, c] : p.terms())
    if (c != p.coefficient(top - e)) return false;
  return true;
}

// Criterion: structural invariants on every moduli computed anywhere in the
// run. Empty moduli (P = 0) are exempt by convention.
SuiteReport suite_structure(ReinekeEngine& engine) {
  SuiteReport report{"structure", {}};
  std::vector<InvariantRecord> records = engine.computed_records();
  for (const InvariantRecord& rec : records) {
    std::string key = InvariantRecord::cache_key(rec.descriptor, rec.dim);
    Quiver q = Quiver::from_descriptor(rec.descriptor);
    std::int64_t degree = 1 - euler_form(q, rec.dim, rec.dim);
    bool ok = true;
    std::string why = "ok";
    try {
      rec.validate(degree);
    } catch (const Error& e) {
      ok = false;
      why = e.what();
    }
    if (ok && !rec.poincare.is_zero() && !palindromic(rec.poincare, degree)) {
      ok = false;
      why = "coefficients are not palindromic";
    }
    add_check(report, "record/" + key, ok, why);
  }
  add_check(report, "record-count", !records.empty(),
            std::to_string(records.size()) + " records checked");
  return report;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"reineke", "mps", "scaling", "closed-forms", "asymptotics"};
}

SuiteReport run_verify_suite(const std::string& name, ReinekeEngine& engine) {
  if (name == "reineke") return suite_reineke(engine);
  if (name == "mps") return suite_mps(engine);
  if (name == "scaling") return suite_scaling(engine);
  if (name == "closed-forms") return suite_closed_forms(engine);
  if (name == "asymptotics") return suite_asymptotics(engine);
  if (name == "structure") return suite_structure(engine);
  throw UsageError("unknown verify suite: '" + name + "'");
}

std::vector<SuiteReport> run_verify(const std::vector<std::string>& names, ReinekeEngine& engine) {
  std::vector<std::string> expanded;
  for (const std::string& n : names) {
    if (n == "all") {
      auto all = verify_suite_names();
      expanded.insert(expanded.end(), all.begin(), all.end());
    } else {
      expanded.push_back(n);
    }
  }
  std::vector<SuiteReport> reports;
  for (const std::string& n : expanded) reports.push_back(run_verify_suite(n, engine));
  reports.push_back(run_verify_suite("structure", engine));
  return reports;
}

}  // namespace quivmod
