#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pncalc {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exponent vector of a monomial. Trailing zero exponents are never stored,
/// so the constant monomial is the empty vector and monomials do not need to
/// know the number of chart coordinates.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents);

  static Monomial variable(std::size_t index, std::uint32_t power = 1);

  std::uint32_t exponent(std::size_t index) const noexcept {
    return index < exps_.size() ? exps_[index] : 0;
  }
  std::size_t size() const noexcept { return exps_.size(); }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return exps_.empty(); }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const noexcept;
  /// Requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  /// Componentwise minimum of exponents.
  Monomial meet(const Monomial& other) const;
  Monomial with_exponent(std::size_t index, std::uint32_t power) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exps_ == b.exps_;
  }

  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

 private:
  void trim();

  std::vector<std::uint32_t> exps_;
  std::uint64_t degree_ = 0;
};

/// Graded-lexicographic comparison with x1 > x2 > ... ; returns <0, 0, >0.
int compare_grlex(const Monomial& a, const Monomial& b) noexcept;

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse multivariate polynomial over Q. Terms are kept in strictly
/// decreasing graded-lex order with nonzero coefficients, which makes the
/// representation canonical.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT

  static Polynomial variable(std::size_t index);
  static Polynomial monomial(Monomial m, const Rational& coeff);
  /// Sorts and combines like terms; zero coefficients are dropped.
  static Polynomial from_unsorted(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
  }
  bool is_one() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// Value of a constant polynomial. Requires is_constant().
  Rational constant_value() const;

  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  std::uint64_t total_degree() const noexcept;
  std::uint32_t degree_in(std::size_t var) const noexcept;
  /// One past the largest coordinate index that occurs.
  std::size_t variable_span() const noexcept;
  bool involves(std::size_t var) const noexcept { return degree_in(var) > 0; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& factor) const;
  Polynomial times_monomial(const Monomial& m) const;
  Polynomial pow(std::uint32_t exponent) const;

  Polynomial derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Coefficients as a polynomial in `var`: result[k] multiplies var^k.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;
  Polynomial leading_coeff_in(std::size_t var) const;

  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Pretty-prints with the given coordinate names, e.g. "x^2 - 2*x*y + 1/2".
  std::string to_string(std::span<const std::string> names) const;

 private:
  explicit Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) {}

  std::vector<Term> terms_;
};

/// Exact quotient a / b. Throws std::domain_error if b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (gcd(0, 0) = 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace pncalc
