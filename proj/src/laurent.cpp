#include "quivmod/laurent.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace quivmod {

LaurentPolynomial LaurentPolynomial::constant(const Rat& c) { return monomial(0, c); }

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t exponent, const Rat& coeff) {
  LaurentPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable() { return monomial(1); }

bool LaurentPolynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

std::int64_t LaurentPolynomial::min_exponent() const {
  if (is_zero()) throw DomainError("min_exponent of the zero polynomial");
  return terms_.begin()->first;
}

std::int64_t LaurentPolynomial::max_exponent() const {
  if (is_zero()) throw DomainError("max_exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

Rat LaurentPolynomial::coefficient(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPolynomial::add_term(std::int64_t exponent, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  *this = *this * o;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Rat LaurentPolynomial::evaluate_at_one() const {
  Rat sum(0);
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

Rat LaurentPolynomial::evaluate(const Rat& x) const {
  Rat sum(0);
  for (const auto& [e, c] : terms_) {
    if (e >= 0) {
      Rat p = make_rat(pow_int(x.get_num(), static_cast<unsigned long>(e)),
                       pow_int(x.get_den(), static_cast<unsigned long>(e)));
      sum += c * p;
    } else {
      if (x == 0) throw DomainError("evaluate at 0 with negative exponents");
      Rat p = make_rat(pow_int(x.get_den(), static_cast<unsigned long>(-e)),
                       pow_int(x.get_num(), static_cast<unsigned long>(-e)));
      sum += c * p;
    }
  }
  return sum;
}

LaurentPolynomial LaurentPolynomial::substitute_power(std::int64_t k) const {
  if (k < 1) throw DomainError("substitute_power requires k >= 1");
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e * k, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(std::int64_t delta) const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + delta, c);
  return r;
}

std::optional<LaurentPolynomial> LaurentPolynomial::divide_exact(
    const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentPolynomial{};
  const std::int64_t pl = min_exponent(), ph = max_exponent();
  const std::int64_t ql = divisor.min_exponent(), qh = divisor.max_exponent();
  const std::int64_t n = ph - pl, m = qh - ql;
  if (n < m) return std::nullopt;

  // Shift both to ordinary polynomials with nonzero constant term and long-divide.
  std::vector<Rat> rem(static_cast<std::size_t>(n) + 1, Rat(0));
  std::vector<Rat> div(static_cast<std::size_t>(m) + 1, Rat(0));
  for (const auto& [e, c] : terms_) rem[static_cast<std::size_t>(e - pl)] = c;
  for (const auto& [e, c] : divisor.terms_) div[static_cast<std::size_t>(e - ql)] = c;

  std::vector<Rat> quot(static_cast<std::size_t>(n - m) + 1, Rat(0));
  for (std::int64_t i = n; i >= m; --i) {
    Rat c = rem[static_cast<std::size_t>(i)] / div[static_cast<std::size_t>(m)];
    quot[static_cast<std::size_t>(i - m)] = c;
    if (c != 0)
      for (std::int64_t j = 0; j <= m; ++j)
        rem[static_cast<std::size_t>(i - m + j)] -= c * div[static_cast<std::size_t>(j)];
  }
  for (std::int64_t j = 0; j < m; ++j)
    if (rem[static_cast<std::size_t>(j)] != 0) return std::nullopt;

  LaurentPolynomial q;
  for (std::size_t i = 0; i < quot.size(); ++i)
    if (quot[i] != 0) q.terms_.emplace(static_cast<std::int64_t>(i) + pl - ql, quot[i]);
  return q;
}

bool LaurentPolynomial::has_integer_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (!is_integer(c)) return false;
  return true;
}

Rat LaurentPolynomial::content() const {
  if (is_zero()) return Rat(0);
  Int num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : terms_) {
    num_gcd = gcd(num_gcd, Int(c.get_num()));
    den_lcm = lcm(den_lcm, Int(c.get_den()));
  }
  return make_rat(abs(num_gcd), den_lcm);
}

namespace {

std::string coeff_magnitude(const Rat& c) {
  Rat a = abs(c);
  return a.get_str();
}

std::string render_term(std::int64_t e, const Rat& c, std::string_view var) {
  std::string mag = coeff_magnitude(c);
  std::string s;
  if (e == 0) return mag;
  if (mag != "1") s = mag + "*";
  s += var;
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

std::string LaurentPolynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += render_term(e, c, var);
  }
  return out;
}

namespace {

Rat parse_coefficient(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    return make_rat(num, den);
  } catch (const std::invalid_argument&) {
    throw DomainError("bad coefficient in polynomial text: '" + text + "'");
  }
}

}  // namespace

LaurentPolynomial LaurentPolynomial::parse(std::string_view text, std::string_view var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw DomainError("empty polynomial text");

  LaurentPolynomial out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+') {
      ++i;
    } else if (s[i] == '-') {
      sign = -1;
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && !((s[j] == '+' || s[j] == '-') && s[j - 1] != '^')) ++j;
    std::string term = s.substr(i, j - i);
    if (term.empty()) throw DomainError("malformed polynomial text: '" + std::string(text) + "'");

    std::size_t vpos = term.find(var);
    Rat coeff(1);
    std::int64_t exponent = 0;
    if (vpos == std::string::npos) {
      coeff = parse_coefficient(term);
    } else {
      std::string chead = term.substr(0, vpos);
      if (!chead.empty() && chead.back() == '*') chead.pop_back();
      if (!chead.empty()) coeff = parse_coefficient(chead);
      std::size_t after = vpos + var.size();
      if (after < term.size()) {
        if (term[after] != '^')
          throw DomainError("malformed polynomial term: '" + term + "'");
        std::string etext = term.substr(after + 1);
        try {
          std::size_t used = 0;
          exponent = std::stoll(etext, &used);
          if (used != etext.size()) throw std::invalid_argument(etext);
        } catch (const std::exception&) {
          throw DomainError("bad exponent in polynomial term: '" + term + "'");
        }
      } else {
        exponent = 1;
      }
    }
    out.add_term(exponent, sign < 0 ? Rat(-coeff) : coeff);
    i = j;
  }
  return out;
}

}  // namespace quivmod
