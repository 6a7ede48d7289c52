#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <string>
#include <vector>

#include "pncalc/polynomial.hpp"

namespace pncalc {

/// A coordinate chart: an ordered list of distinct coordinate names.
/// Cheap to copy; two charts are equal when their names agree.
class Chart {
 public:
  explicit Chart(std::vector<std::string> coord_names);

  std::size_t dim() const noexcept { return names_->size(); }
  const std::vector<std::string>& names() const noexcept { return *names_; }
  const std::string& name(std::size_t i) const { return names_->at(i); }
  /// Index of a coordinate name, or dim() when absent.
  std::size_t find(std::string_view name) const noexcept;

  friend bool operator==(const Chart& a, const Chart& b) noexcept {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Exact rational function in canonical form: numerator and denominator are
/// coprime and the denominator's leading graded-lex coefficient is 1.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RatFunc(long c) : RatFunc(Rational(c)) {}                   // NOLINT
  RatFunc(const Polynomial& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  /// Throws DivisionByZero when den is the zero polynomial.
  RatFunc(Polynomial num, Polynomial den);

  static RatFunc variable(std::size_t index) { return RatFunc(Polynomial::variable(index)); }

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& other);
  RatFunc& operator-=(const RatFunc& other);
  RatFunc& operator*=(const RatFunc& other);
  RatFunc& operator/=(const RatFunc& other);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  /// Integer power; negative exponents invert and throw DivisionByZero on 0.
  RatFunc pow(std::int64_t exponent) const;
  RatFunc inverse() const;

  /// Exact partial derivative with respect to coordinate `index` (0-based).
  RatFunc partial(std::size_t index) const;

  /// Exact value at a point; throws PoleAtPoint when the denominator vanishes.
  Rational eval_at(std::span<const Rational> point) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Canonical text form; parse_expr(to_string(f)) == f.
  std::string to_string(std::span<const std::string> names) const;
  std::string to_string(const Chart& chart) const { return to_string(chart.names()); }

 private:
  struct Canonical {};
  RatFunc(Polynomial num, Polynomial den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

enum class ArithOp { add, sub, mul, div, pow };

/// Dispatches one field operation; `pow` takes the integer exponent from b,
/// which must then be a constant integer.
RatFunc ratfunc_arith(ArithOp op, const RatFunc& a, const RatFunc& b);

/// Partial derivative with bounds checking against the chart (0-based index).
RatFunc partial_deriv(const RatFunc& f, std::size_t index, const Chart& chart);

/// Evaluation with a dimension check against the chart.
Rational eval_at(const RatFunc& f, std::span<const Rational> point, const Chart& chart);

inline bool is_zero(const RatFunc& f) noexcept { return f.is_zero(); }

}  // namespace pncalc
