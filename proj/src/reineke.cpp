#include "quivmod/reineke.hpp"

#include <algorithm>

#include "quivmod/cache.hpp"
#include "quivmod/parallel.hpp"

namespace quivmod {

void InvariantRecord::validate(std::int64_t expected_degree) const {
  const std::string where = cache_key(descriptor, dim);
  if (poincare.evaluate_at_one() != Rat(euler))
    throw Error("invariant record " + where + ": euler != poincare(1)");
  if (poincare.is_zero()) return;  // empty moduli
  for (const auto& [e, c] : poincare.terms())
    if (!is_integer(c) || c < 0)
      throw Error("invariant record " + where + ": coefficients must be nonnegative integers");
  if (poincare.min_exponent() != 0 || poincare.coefficient(0) != 1)
    throw Error("invariant record " + where + ": constant term must be 1");
  if (poincare.max_exponent() != expected_degree)
    throw Error("invariant record " + where + ": degree != 1 - <d,d>");
}

std::string InvariantRecord::cache_key(const std::string& descriptor, const DimensionVector& dim) {
  return descriptor + "|" + dim.to_string();
}

namespace {

// {unit_v, d} per vertex; {e, d} = sum_v e_v * symw[v] by bilinearity.
std::vector<std::int64_t> symplectic_weights(const Quiver& q, const DimensionVector& d) {
  std::vector<std::int64_t> symw(d.size());
  DimensionVector unit = DimensionVector::zeros(d.size());
  for (std::size_t v = 0; v < d.size(); ++v) {
    unit[v] = 1;
    symw[v] = symplectic_form(q, unit, d);
    unit[v] = 0;
  }
  return symw;
}

// Lexicographic successor of u within the componentwise bound rem, keeping
// su = sum_v u_v * symw[v] in step. The all-zero vector seeds the scan and is
// never yielded.
bool next_candidate(std::vector<int>& u, const std::vector<int>& rem,
                    const std::vector<std::int64_t>& symw, std::int64_t& su) {
  for (std::size_t i = u.size(); i-- > 0;) {
    if (u[i] < rem[i]) {
      ++u[i];
      su += symw[i];
      return true;
    }
    su -= static_cast<std::int64_t>(u[i]) * symw[i];
    u[i] = 0;
  }
  return false;
}

std::int64_t euler_form_raw(const Quiver& q, const std::vector<int>& d,
                            const std::vector<int>& e) {
  std::int64_t value = 0;
  const std::size_t n = d.size();
  for (std::size_t v = 0; v < n; ++v) value += static_cast<std::int64_t>(d[v]) * e[v];
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t mult = q.arrow_count(i, j);
      if (mult) value -= mult * d[i] * e[j];
    }
  }
  return value;
}

struct ReinekeSum {
  const Quiver& q;
  const DimensionVector& d;
  std::vector<std::int64_t> symw;
  int max_entry;
  std::vector<int> factor_cap;  // M_j = sum_v floor(d_v / j), index 1..max_entry
  // pow_cache[j][i] = (1 - q^{-j})^i for i <= M_j; read-only once built
  std::vector<std::vector<LaurentPolynomial>> pow_cache;

  ReinekeSum(const Quiver& quiver, const DimensionVector& dim) : q(quiver), d(dim) {
    symw = symplectic_weights(q, d);
    max_entry = *std::max_element(d.entries().begin(), d.entries().end());
    factor_cap.assign(static_cast<std::size_t>(max_entry) + 1, 0);
    for (int j = 1; j <= max_entry; ++j)
      for (std::size_t v = 0; v < d.size(); ++v) factor_cap[static_cast<std::size_t>(j)] += d[v] / j;
    pow_cache.resize(static_cast<std::size_t>(max_entry) + 1);
    for (int j = 1; j <= max_entry; ++j) {
      LaurentPolynomial base =
          LaurentPolynomial::constant(Rat(1)) - LaurentPolynomial::monomial(-j);
      auto& row = pow_cache[static_cast<std::size_t>(j)];
      row.push_back(LaurentPolynomial::constant(Rat(1)));
      for (int i = 1; i <= factor_cap[static_cast<std::size_t>(j)]; ++i)
        row.push_back(row.back() * base);
    }
  }

  // full common denominator prod_j (1 - q^{-j})^{M_j}
  LaurentPolynomial common_denominator() const {
    LaurentPolynomial den = LaurentPolynomial::constant(Rat(1));
    for (int j = 1; j <= max_entry; ++j)
      den *= pow_cache[static_cast<std::size_t>(j)][static_cast<std::size_t>(
          factor_cap[static_cast<std::size_t>(j)])];
    return den;
  }

  void apply_part(const std::vector<int>& u, std::vector<int>& cj, int sign) const {
    for (std::size_t v = 0; v < u.size(); ++v)
      for (int j = 1; j <= u[v]; ++j) cj[static_cast<std::size_t>(j)] += sign;
  }

  // sign * q^{-exp_sum} * prod_j (1 - q^{-j})^{M_j - c_j}
  void add_leaf_term(LaurentPolynomial& accum, std::int64_t exp_sum, const std::vector<int>& cj,
                     bool positive) const {
    LaurentPolynomial term = LaurentPolynomial::monomial(-exp_sum, Rat(positive ? 1 : -1));
    for (int j = 1; j <= max_entry; ++j) {
      int deficit = factor_cap[static_cast<std::size_t>(j)] - cj[static_cast<std::size_t>(j)];
      if (deficit > 0)
        term *= pow_cache[static_cast<std::size_t>(j)][static_cast<std::size_t>(deficit)];
    }
    accum += term;
  }

  // DFS over admissible prefixes below a fixed first part. prefix = d - rem.
  void walk(std::vector<int>& rem, std::vector<int>& prefix, std::int64_t sym_prefix,
            std::int64_t exp_sum, std::vector<int>& cj, int depth,
            LaurentPolynomial& accum) const {
    std::vector<int> u(rem.size(), 0);
    std::int64_t su = 0;
    while (next_candidate(u, rem, symw, su)) {
      bool complete = (u == rem);
      if (!complete && sym_prefix + su <= 0) continue;
      for (std::size_t v = 0; v < rem.size(); ++v) {
        rem[v] -= u[v];
        prefix[v] += u[v];
      }
      std::int64_t exp2 = exp_sum + euler_form_raw(q, u, prefix);
      apply_part(u, cj, +1);
      if (complete) {
        add_leaf_term(accum, exp2, cj, depth % 2 == 0);  // depth parts before u: s = depth+1
      } else {
        walk(rem, prefix, sym_prefix + su, exp2, cj, depth + 1, accum);
      }
      apply_part(u, cj, -1);
      for (std::size_t v = 0; v < rem.size(); ++v) {
        rem[v] += u[v];
        prefix[v] -= u[v];
      }
    }
  }

  // numerator of the sum over the common denominator, split across first parts
  LaurentPolynomial numerator(int jobs) const {
    std::vector<std::vector<int>> first_parts;
    {
      std::vector<int> u(d.size(), 0);
      std::int64_t su = 0;
      const std::vector<int>& rem = d.entries();
      while (next_candidate(u, rem, symw, su)) {
        if (u == rem || su > 0) first_parts.push_back(u);
      }
    }
    auto branch = [&](std::size_t i) {
      LaurentPolynomial accum;
      const std::vector<int>& u = first_parts[i];
      std::vector<int> rem = d.entries();
      std::vector<int> prefix(d.size(), 0);
      std::vector<int> cj(static_cast<std::size_t>(max_entry) + 1, 0);
      for (std::size_t v = 0; v < rem.size(); ++v) {
        rem[v] -= u[v];
        prefix[v] += u[v];
      }
      std::int64_t exp0 = euler_form_raw(q, u, prefix);
      apply_part(u, cj, +1);
      bool complete = true;
      for (int r : rem)
        if (r != 0) complete = false;
      if (complete) {
        add_leaf_term(accum, exp0, cj, true);  // s = 1
      } else {
        std::int64_t su = 0;
        for (std::size_t v = 0; v < u.size(); ++v) su += static_cast<std::int64_t>(u[v]) * symw[v];
        walk(rem, prefix, su, exp0, cj, 1, accum);
      }
      return accum;
    };
    std::vector<LaurentPolynomial> sums = parallel_map(first_parts.size(), jobs, branch);
    LaurentPolynomial total;
    for (const auto& s : sums) total += s;
    return total;
  }
};

template <typename Visitor>
void walk_decompositions(const Quiver& q, const DimensionVector& d,
                         const std::vector<std::int64_t>& symw, std::vector<int>& rem,
                         std::int64_t sym_prefix, std::vector<DimensionVector>& parts,
                         Visitor&& visit) {
  std::vector<int> u(rem.size(), 0);
  std::int64_t su = 0;
  while (next_candidate(u, rem, symw, su)) {
    bool complete = (u == rem);
    if (!complete && sym_prefix + su <= 0) continue;
    for (std::size_t v = 0; v < rem.size(); ++v) rem[v] -= u[v];
    parts.push_back(DimensionVector(u));
    if (complete) {
      visit(parts);
    } else {
      walk_decompositions(q, d, symw, rem, sym_prefix + su, parts, visit);
    }
    parts.pop_back();
    for (std::size_t v = 0; v < rem.size(); ++v) rem[v] += u[v];
  }
}

}  // namespace

std::vector<AdmissibleDecomposition> admissible_decompositions(const Quiver& q,
                                                               const DimensionVector& d) {
  if (d.size() != q.vertex_count()) throw DomainError("dimension vector length mismatch");
  if (d.is_zero()) throw DomainError("zero dimension vector");
  std::vector<AdmissibleDecomposition> out;
  std::vector<std::int64_t> symw = symplectic_weights(q, d);
  std::vector<int> rem = d.entries();
  std::vector<DimensionVector> parts;
  walk_decompositions(q, d, symw, rem, 0, parts,
                      [&](const std::vector<DimensionVector>& p) { out.push_back({p}); });
  return out;
}

void check_coprime_type(const Quiver& q, const DimensionVector& d) {
  if (d.size() != q.vertex_count()) throw DomainError("dimension vector length mismatch");
  if (d.is_zero()) throw DomainError("zero dimension vector");
  std::vector<std::int64_t> symw = symplectic_weights(q, d);
  std::vector<int> e(d.size(), 0);
  std::int64_t se = 0;
  while (next_candidate(e, d.entries(), symw, se)) {
    if (e == d.entries()) continue;
    if (se == 0)
      throw CoprimalityViolationError(
          "sub-dimension-vector (" + DimensionVector(e).to_string() + ") pairs to zero with (" +
          d.to_string() + ") on " + q.descriptor());
  }
}

ReinekeEngine::ReinekeEngine(ResultCache* cache, int jobs)
    : cache_(cache), jobs_(jobs < 1 ? 1 : jobs) {}

InvariantRecord ReinekeEngine::compute(const Quiver& q, const DimensionVector& d) const {
  check_coprime_type(q, d);
  ReinekeSum sum(q, d);
  LaurentPolynomial numer = sum.numerator(jobs_);
  const LaurentPolynomial q_minus_1 =
      LaurentPolynomial::variable() - LaurentPolynomial::constant(Rat(1));
  numer *= q_minus_1;
  auto p = numer.divide_exact(sum.common_denominator());
  if (!p)
    throw NotPolynomialError("Reineke sum did not collapse to a polynomial for " +
                             InvariantRecord::cache_key(q.descriptor(), d));
  InvariantRecord rec{q.descriptor(), d, *p, to_integer(p->evaluate_at_one(), "Euler characteristic")};
  rec.validate(1 - euler_form(q, d, d));
  return rec;
}

InvariantRecord ReinekeEngine::invariant(const Quiver& q, const DimensionVector& d) {
  const std::string key = InvariantRecord::cache_key(q.descriptor(), d);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  if (cache_) {
    if (auto rec = cache_->get(key)) {
      std::lock_guard<std::mutex> lock(mu_);
      memo_.emplace(key, *rec);
      return *rec;
    }
  }
  InvariantRecord rec = compute(q, d);
  {
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(key, rec);
  }
  if (cache_) cache_->put(key, rec);
  return rec;
}

LaurentPolynomial ReinekeEngine::poincare_polynomial(const Quiver& q, const DimensionVector& d) {
  return invariant(q, d).poincare;
}

Int ReinekeEngine::euler_characteristic(const Quiver& q, const DimensionVector& d) {
  return invariant(q, d).euler;
}

std::vector<InvariantRecord> ReinekeEngine::computed_records() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<InvariantRecord> out;
  out.reserve(memo_.size());
  for (const auto& [key, rec] : memo_)
    out.push_back(rec);
  return out;
}

}  // namespace quivmod
