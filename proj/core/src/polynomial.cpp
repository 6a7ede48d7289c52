#include "pncalc/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pncalc {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) { trim(); }

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
  std::vector<std::uint32_t> e(index + 1, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  degree_ = 0;
  for (auto e : exps_) degree_ += e;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.exps_.resize(std::max(exps_.size(), other.exps_.size()), 0);
  for (std::size_t i = 0; i < out.exps_.size(); ++i) out.exps_[i] = exponent(i) + other.exponent(i);
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (exps_.size() > other.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  std::vector<std::uint32_t> e(exps_);
  for (std::size_t i = 0; i < divisor.exps_.size(); ++i) e[i] -= divisor.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::meet(const Monomial& other) const {
  std::vector<std::uint32_t> e(std::min(exps_.size(), other.exps_.size()));
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::with_exponent(std::size_t index, std::uint32_t power) const {
  std::vector<std::uint32_t> e(exps_);
  if (e.size() <= index) e.resize(index + 1, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

int compare_grlex(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto ea = a.exponent(i);
    const auto eb = b.exponent(i);
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Rational& constant) {
  if (sgn(constant) != 0) terms_.push_back({Monomial(), constant});
}

Polynomial Polynomial::variable(std::size_t index) {
  return monomial(Monomial::variable(index), Rational(1));
}

Polynomial Polynomial::monomial(Monomial m, const Rational& coeff) {
  Polynomial p;
  if (sgn(coeff) != 0) p.terms_.push_back({std::move(m), coeff});
  return p;
}

Polynomial Polynomial::from_unsorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare_grlex(a.monomial, b.monomial) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  return Polynomial(std::move(out));
}

bool Polynomial::is_one() const {
  return is_constant() && !is_zero() && terms_.front().coeff == 1;
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value of a non-constant polynomial");
  return terms_.empty() ? Rational(0) : terms_.front().coeff;
}

std::uint64_t Polynomial::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

std::uint32_t Polynomial::degree_in(std::size_t var) const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(var));
  return d;
}

std::size_t Polynomial::variable_span() const noexcept {
  std::size_t s = 0;
  for (const auto& t : terms_) s = std::max(s, t.monomial.size());
  return s;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

namespace {

template <typename Combine>
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, Combine sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) {
      c = -1;
    } else if (j == b.size()) {
      c = 1;
    } else {
      c = compare_grlex(a[i].monomial, b[j].monomial);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].monomial, sign(b[j].coeff)});
      ++j;
    } else {
      Rational s = a[i].coeff + sign(b[j].coeff);
      if (sgn(s) != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  terms_ = merge_terms(terms_, other.terms_, [](const Rational& c) { return c; });
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, [](const Rational& c) { return Rational(-c); });
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b.scaled(a.terms_.front().coeff);
  if (b.is_constant()) return a.scaled(b.terms_.front().coeff);
  if (b.is_monomial()) return a.times_monomial(b.terms_.front().monomial).scaled(b.leading_coeff());
  if (a.is_monomial()) return b.times_monomial(a.terms_.front().monomial).scaled(a.leading_coeff());
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  return Polynomial::from_unsorted(std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::scaled(const Rational& factor) const {
  if (sgn(factor) == 0) return {};
  Polynomial out(*this);
  for (auto& t : out.terms_) t.coeff *= factor;
  return out;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  // Multiplying by a monomial preserves the graded-lex order.
  Polynomial out(*this);
  for (auto& t : out.terms_) t.monomial = t.monomial * m;
  return out;
}

Polynomial Polynomial::pow(std::uint32_t exponent) const {
  Polynomial result(Rational(1));
  Polynomial base(*this);
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const auto e = t.monomial.exponent(var);
    if (e == 0) continue;
    out.push_back({t.monomial.with_exponent(var, e - 1), t.coeff * e});
  }
  return from_unsorted(std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    const auto& exps = t.monomial.exponents();
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (i >= point.size()) throw std::out_of_range("evaluation point has too few coordinates");
      mpz_class num;
      mpz_class den;
      mpz_pow_ui(num.get_mpz_t(), point[i].get_num_mpz_t(), exps[i]);
      mpz_pow_ui(den.get_mpz_t(), point[i].get_den_mpz_t(), exps[i]);
      v *= Rational(num, den);
    }
    sum += v;
  }
  sum.canonicalize();
  return sum;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& t : terms_) {
    const auto e = t.monomial.exponent(var);
    buckets[e].push_back({t.monomial.with_exponent(var, 0), t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  // Removing one variable from a graded-lex ordered list can break the order.
  for (auto& b : buckets) out.push_back(from_unsorted(std::move(b)));
  return out;
}

Polynomial Polynomial::leading_coeff_in(std::size_t var) const {
  const auto d = degree_in(var);
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.monomial.exponent(var) == d) out.push_back({t.monomial.with_exponent(var, 0), t.coeff});
  return from_unsorted(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff == 1) return *this;
  return scaled(1 / terms_.front().coeff);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial)) return false;
    if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(t.coeff);
    std::string mono;
    const auto& exps = t.monomial.exponents();
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
      if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
    }
    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Division and gcd

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact by zero polynomial");
  if (b.is_constant()) return a.scaled(1 / b.leading_coeff());
  std::vector<Term> quotient;
  Polynomial rem(a);
  const Term& lead = b.leading_term();
  while (!rem.is_zero()) {
    const Term& r = rem.leading_term();
    if (!lead.monomial.divides(r.monomial)) throw std::domain_error("divide_exact: not divisible");
    Term q{r.monomial.quotient(lead.monomial), r.coeff / lead.coeff};
    rem -= b.times_monomial(q.monomial).scaled(q.coeff);
    quotient.push_back(std::move(q));
  }
  // Quotient terms are produced in decreasing order already.
  return Polynomial::from_unsorted(std::move(quotient));
}

namespace {

Polynomial monomial_gcd(const Polynomial& mono, const Polynomial& p) {
  Monomial g = mono.leading_term().monomial;
  for (const auto& t : p.terms()) {
    g = g.meet(t.monomial);
    if (g.is_one()) break;
  }
  return Polynomial::monomial(g, Rational(1));
}

std::size_t lowest_variable(const Polynomial& a, const Polynomial& b) {
  const std::size_t span = std::max(a.variable_span(), b.variable_span());
  for (std::size_t v = 0; v < span; ++v)
    if (a.involves(v) || b.involves(v)) return v;
  return span;
}

/// gcd of the coefficients of p viewed as a polynomial in var.
Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial c;
  for (const auto& coeff : p.coefficients_in(var)) {
    if (coeff.is_zero()) continue;
    c = gcd(c, coeff);
    if (c.is_one()) break;
  }
  return c;
}

/// p scaled to integer coefficients with gcd 1 and a positive leading term.
/// Keeps pseudo-remainder sequences from growing rational coefficients.
Polynomial numeric_primitive(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpz_class num = 0;
  mpz_class den = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational factor(den, num);
  factor.canonicalize();
  if (p.leading_coeff() < 0) factor = -factor;
  return factor == 1 ? p : p.scaled(factor);
}

Polynomial primitive_part_in(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  return numeric_primitive(divide_exact(p, content_in(p, var)));
}

/// Sparse pseudo-remainder of a by b with respect to var.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  const auto db = b.degree_in(var);
  const Polynomial lb = b.leading_coeff_in(var);
  while (!a.is_zero()) {
    const auto da = a.degree_in(var);
    if (da < db) break;
    const Polynomial la = a.leading_coeff_in(var);
    a = lb * a - la * b.times_monomial(Monomial::variable(var, da - db));
  }
  return a;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(Rational(1));
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);
  if (a == b) return a.monic();

  const std::size_t v = lowest_variable(a, b);
  if (!a.involves(v)) return gcd(a, content_in(b, v));
  if (!b.involves(v)) return gcd(content_in(a, v), b);

  const Polynomial ca = content_in(a, v);
  const Polynomial cb = content_in(b, v);
  const Polynomial c = gcd(ca, cb);
  Polynomial p = divide_exact(a, ca);
  Polynomial q = divide_exact(b, cb);
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);

  Polynomial g;
  for (;;) {
    Polynomial r = pseudo_remainder(p, q, v);
    if (r.is_zero()) {
      g = q;
      break;
    }
    if (!r.involves(v)) {
      g = Polynomial(Rational(1));
      break;
    }
    p = std::move(q);
    q = primitive_part_in(r, v);
  }
  return (c * primitive_part_in(g, v)).monic();
}

}  // namespace pncalc
