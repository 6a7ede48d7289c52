#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "pncalc/ratfunc.hpp"

namespace pncalc {

/// Strictly increasing tuple of 0-based coordinate indices.
using IndexTuple = std::vector<std::size_t>;

/// Sorts `idx` in place and returns the sign of the sorting permutation,
/// or 0 when an index repeats.
int sort_with_sign(IndexTuple& idx);

enum class Variance { contravariant, covariant };

/// Sparse alternating tensor field of fixed degree: a multivector field
/// (contravariant) or a differential form (covariant). Only strictly
/// increasing index tuples are stored; zero components are dropped. A
/// degree-0 field is a single function stored under the empty tuple, and a
/// field of negative degree or degree above dim() is always zero.
template <Variance V>
class AlternatingField {
 public:
  AlternatingField(Chart chart, int degree) : chart_(std::move(chart)), degree_(degree) {}

  static AlternatingField scalar(Chart chart, const RatFunc& f) {
    AlternatingField out(std::move(chart), 0);
    out.set({}, f);
    return out;
  }
  /// Degree-1 field from its n components.
  static AlternatingField from_components(Chart chart, std::span<const RatFunc> comps);

  const Chart& chart() const noexcept { return chart_; }
  int degree() const noexcept { return degree_; }
  std::size_t dim() const noexcept { return chart_.dim(); }

  /// Component for an arbitrary index tuple, sign-resolved by permutation.
  RatFunc get(IndexTuple idx) const;
  RatFunc operator[](std::size_t i) const { return get({i}); }
  /// The function of a degree-0 field.
  RatFunc value() const { return get({}); }

  /// Sets the component for an arbitrary ordering of distinct indices.
  void set(IndexTuple idx, const RatFunc& value);
  void add_to(IndexTuple idx, const RatFunc& value);

  const std::map<IndexTuple, RatFunc>& components() const noexcept { return comps_; }
  bool is_zero() const noexcept { return comps_.empty(); }

  AlternatingField operator-() const;
  AlternatingField& operator+=(const AlternatingField& other);
  AlternatingField& operator-=(const AlternatingField& other);
  AlternatingField& operator*=(const RatFunc& f);
  friend AlternatingField operator+(AlternatingField a, const AlternatingField& b) { return a += b; }
  friend AlternatingField operator-(AlternatingField a, const AlternatingField& b) { return a -= b; }
  friend AlternatingField operator*(const RatFunc& f, AlternatingField a) { return a *= f; }
  friend AlternatingField operator*(AlternatingField a, const RatFunc& f) { return a *= f; }

  friend bool operator==(const AlternatingField& a, const AlternatingField& b) {
    return a.chart_ == b.chart_ && a.degree_ == b.degree_ && a.comps_ == b.comps_;
  }

  /// "(c1, c2, ...)" for degree 1, the bare function for degree 0, and
  /// "{(1,2): c, ...}" with 1-based indices otherwise.
  std::string to_string() const;

 private:
  void check_compatible(const AlternatingField& other) const;

  Chart chart_;
  int degree_;
  std::map<IndexTuple, RatFunc> comps_;
};

using Multivector = AlternatingField<Variance::contravariant>;
using DiffForm = AlternatingField<Variance::covariant>;

extern template class AlternatingField<Variance::contravariant>;
extern template class AlternatingField<Variance::covariant>;

/// Coordinate basis field d/dx^i (0-based) and the form dx^i.
Multivector coordinate_vector(const Chart& chart, std::size_t i);
DiffForm coordinate_covector(const Chart& chart, std::size_t i);

/// (1,1)-tensor field; entry (i, j) is N^i_j with i the row (upper index).
class EndoField {
 public:
  explicit EndoField(Chart chart);

  static EndoField identity(const Chart& chart);
  static EndoField scalar(const Chart& chart, const RatFunc& f);
  static EndoField diagonal(const Chart& chart, std::span<const RatFunc> entries);

  const Chart& chart() const noexcept { return chart_; }
  std::size_t dim() const noexcept { return chart_.dim(); }
  const RatFunc& at(std::size_t i, std::size_t j) const { return entries_[i * dim() + j]; }
  void set(std::size_t i, std::size_t j, const RatFunc& v) { entries_[i * dim() + j] = v; }
  bool is_zero() const;

  EndoField operator-() const;
  EndoField& operator+=(const EndoField& other);
  EndoField& operator-=(const EndoField& other);
  friend EndoField operator+(EndoField a, const EndoField& b) { return a += b; }
  friend EndoField operator-(EndoField a, const EndoField& b) { return a -= b; }
  friend EndoField operator*(const RatFunc& f, const EndoField& n);

  friend bool operator==(const EndoField& a, const EndoField& b) {
    return a.chart_ == b.chart_ && a.entries_ == b.entries_;
  }

  std::string to_string() const;

 private:
  Chart chart_;
  std::vector<RatFunc> entries_;
};

/// Full n x n contravariant 2-tensor, not assumed antisymmetric.
class ContraTensor2 {
 public:
  explicit ContraTensor2(Chart chart);

  const Chart& chart() const noexcept { return chart_; }
  std::size_t dim() const noexcept { return chart_.dim(); }
  const RatFunc& at(std::size_t i, std::size_t j) const { return entries_[i * dim() + j]; }
  void set(std::size_t i, std::size_t j, const RatFunc& v) { entries_[i * dim() + j] = v; }

 private:
  Chart chart_;
  std::vector<RatFunc> entries_;
};

template <Variance V>
AlternatingField<V> wedge(const AlternatingField<V>& a, const AlternatingField<V>& b);

/// (P alpha)^j = sum_i P^{ij} alpha_i.
Multivector bivector_sharp(const Multivector& p, const DiffForm& alpha);
/// P(alpha, beta) = P^{ij} alpha_i beta_j.
RatFunc bivector_eval(const Multivector& p, const DiffForm& alpha, const DiffForm& beta);

/// (N X)^i = sum_j N^i_j X^j.
Multivector endo_apply(const EndoField& n, const Multivector& x);
/// (N* alpha)_j = sum_i N^i_j alpha_i.
DiffForm endo_transpose_apply(const EndoField& n, const DiffForm& alpha);
EndoField endo_compose(const EndoField& n, const EndoField& m);
EndoField endo_power(const EndoField& n, unsigned k);
RatFunc endo_trace(const EndoField& n);

/// (NP)^{ij} = sum_k N^i_k P^{kj}.
ContraTensor2 endo_bivector(const EndoField& n, const Multivector& p);
bool is_skew(const ContraTensor2& t);
/// Throws NotSkew unless is_skew(t).
Multivector to_bivector(const ContraTensor2& t);

/// sum over increasing I of omega_I A^I.
RatFunc pairing(const DiffForm& omega, const Multivector& a);

void require_same_chart(const Chart& a, const Chart& b);

}  // namespace pncalc
