#include "pncalc/ratfunc.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "pncalc/error.hpp"

namespace pncalc {

Chart::Chart(std::vector<std::string> coord_names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(coord_names))) {
  std::set<std::string> seen;
  for (const auto& n : *names_) {
    const bool ident = !n.empty() && (std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_') &&
                       std::all_of(n.begin(), n.end(), [](char c) {
                         return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                       });
    if (!ident) throw ValidationError("invalid coordinate name '" + n + "'");
    if (!seen.insert(n).second) throw ValidationError("duplicate coordinate name '" + n + "'");
  }
  if (names_->empty()) throw ValidationError("a chart needs at least one coordinate");
}

std::size_t Chart::find(std::string_view name) const noexcept {
  const auto it = std::find(names_->begin(), names_->end(), name);
  return static_cast<std::size_t>(it - names_->begin());
}

// ---------------------------------------------------------------------------

RatFunc::RatFunc(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    const Polynomial g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  const Rational lc = den_.leading_coeff();
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc& RatFunc::operator+=(const RatFunc& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_.is_one() && other.den_.is_one()) {
    num_ += other.num_;
    return *this;
  }
  if (den_ == other.den_) {
    num_ += other.num_;
    normalize();
    return *this;
  }
  // Both operands are reduced, so the new numerator can only share factors
  // with g = gcd of the denominators.
  const Polynomial g = gcd(den_, other.den_);
  const Polynomial mine = divide_exact(den_, g);
  const Polynomial theirs = divide_exact(other.den_, g);
  num_ = num_ * theirs + other.num_ * mine;
  den_ = den_ * theirs;
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return *this;
  }
  if (!g.is_one()) {
    const Polynomial h = gcd(num_, g);
    if (!h.is_one()) {
      num_ = divide_exact(num_, h);
      den_ = divide_exact(den_, h);
    }
  }
  const Rational lc = den_.leading_coeff();
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& other) { return *this += -other; }

RatFunc& RatFunc::operator*=(const RatFunc& other) {
  if (is_zero() || other.is_zero()) return *this = RatFunc();
  if (den_.is_one() && other.den_.is_one()) {
    num_ *= other.num_;
    return *this;
  }
  // Cross-cancel so the product of the reduced parts is already coprime.
  const Polynomial g1 = gcd(num_, other.den_);
  const Polynomial g2 = gcd(other.num_, den_);
  Polynomial num = divide_exact(num_, g1) * divide_exact(other.num_, g2);
  Polynomial den = divide_exact(den_, g2) * divide_exact(other.den_, g1);
  const Rational lc = den.leading_coeff();
  num_ = num.scaled(1 / lc);
  den_ = den.scaled(1 / lc);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& other) { return *this *= other.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const Rational lc = num_.leading_coeff();
  return RatFunc(den_.scaled(1 / lc), num_.scaled(1 / lc), Canonical{});
}

RatFunc RatFunc::pow(std::int64_t exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  const auto e = static_cast<std::uint32_t>(exponent);
  // Powers of coprime polynomials stay coprime; monic stays monic.
  return RatFunc(num_.pow(e), den_.pow(e), Canonical{});
}

RatFunc RatFunc::partial(std::size_t index) const {
  if (den_.is_one()) return RatFunc(num_.derivative(index));
  Polynomial dn = num_.derivative(index);
  Polynomial dd = den_.derivative(index);
  if (dd.is_zero()) return RatFunc(std::move(dn), den_);
  return RatFunc(dn * den_ - num_ * dd, den_ * den_);
}

Rational RatFunc::eval_at(std::span<const Rational> point) const {
  const Rational d = den_.evaluate(point);
  if (sgn(d) == 0) throw PoleAtPoint();
  Rational v = num_.evaluate(point) / d;
  v.canonicalize();
  return v;
}

namespace {

bool single_variable_power(const Polynomial& p) {
  if (!p.is_monomial() || p.leading_coeff() != 1) return false;
  const auto& e = p.leading_term().monomial.exponents();
  return std::count_if(e.begin(), e.end(), [](auto x) { return x > 0; }) == 1;
}

}  // namespace

std::string RatFunc::to_string(std::span<const std::string> names) const {
  std::string num = num_.to_string(names);
  if (den_.is_one()) return num;
  if (num_.terms().size() > 1) num = "(" + num + ")";
  std::string den = den_.to_string(names);
  if (!single_variable_power(den_)) den = "(" + den + ")";
  return num + "/" + den;
}

// ---------------------------------------------------------------------------

RatFunc ratfunc_arith(ArithOp op, const RatFunc& a, const RatFunc& b) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      return a / b;
    case ArithOp::pow: {
      if (!b.is_constant()) throw BadDegree("exponent must be a constant integer");
      const Rational e = b.numerator().constant_value();
      if (e.get_den() != 1 || !e.get_num().fits_slong_p())
        throw BadDegree("exponent must be an integer");
      return a.pow(e.get_num().get_si());
    }
  }
  return {};
}

RatFunc partial_deriv(const RatFunc& f, std::size_t index, const Chart& chart) {
  if (index >= chart.dim()) throw IndexOutOfRange(index, chart.dim());
  return f.partial(index);
}

Rational eval_at(const RatFunc& f, std::span<const Rational> point, const Chart& chart) {
  if (point.size() != chart.dim()) throw IndexOutOfRange(point.size(), chart.dim());
  return f.eval_at(point);
}

}  // namespace pncalc
