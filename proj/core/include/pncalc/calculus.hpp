#pragma once

#include <functional>
#include <vector>

#include "pncalc/tensor.hpp"

namespace pncalc {

// ---------------------------------------------------------------------------
// Cartan calculus on forms

DiffForm ext_d(const DiffForm& omega);

/// Contraction with the coordinate field d/dx^i in the first slot.
DiffForm contract_coordinate(const DiffForm& omega, std::size_t i);

/// i_X omega; a 0-form maps to the zero form of degree -1.
DiffForm int_vec(const Multivector& x, const DiffForm& omega);

/// Degree-0 derivation extending N* on 1-forms; zero on functions.
DiffForm int_endo(const EndoField& n, const DiffForm& omega);

/// i_P = 1/2 P^{ij} i_{d_j} i_{d_i}; on 2-forms i_P omega = sum_{i<j} P^{ij} omega_{ij}.
DiffForm int_biv(const Multivector& p, const DiffForm& omega);

// ---------------------------------------------------------------------------
// Brackets

Multivector lie_bracket(const Multivector& x, const Multivector& y);

/// X(f) for a vector field X.
RatFunc directional_derivative(const Multivector& x, const RatFunc& f);

DiffForm lie_deriv(const Multivector& x, const DiffForm& omega);
Multivector lie_deriv(const Multivector& x, const Multivector& a);
EndoField lie_deriv(const Multivector& x, const EndoField& n);

/// Schouten-Nijenhuis bracket of multivector fields of any degrees.
Multivector schouten(const Multivector& a, const Multivector& b);

/// [X,Y]_N = [NX,Y] + [X,NY] - N[X,Y].
Multivector deformed_bracket(const EndoField& n, const Multivector& x, const Multivector& y);

/// Schouten bracket of the Lie algebroid (TM, N, [ , ]_N) on multivectors.
Multivector deformed_schouten(const EndoField& n, const Multivector& a, const Multivector& b);

/// Nijenhuis torsion T(X,Y) = [NX,NY] - N[X,Y]_N with components T^i_{jk}.
class Torsion {
 public:
  explicit Torsion(Chart chart);
  const Chart& chart() const noexcept { return chart_; }
  std::size_t dim() const noexcept { return chart_.dim(); }
  const RatFunc& at(std::size_t i, std::size_t j, std::size_t k) const {
    return comps_[(i * dim() + j) * dim() + k];
  }
  void set(std::size_t i, std::size_t j, std::size_t k, const RatFunc& v) {
    comps_[(i * dim() + j) * dim() + k] = v;
  }
  bool is_zero() const;
  /// T(X, Y) for vector fields X, Y.
  Multivector apply(const Multivector& x, const Multivector& y) const;

 private:
  Chart chart_;
  std::vector<RatFunc> comps_;
};

Torsion nijenhuis_torsion(const EndoField& n);

/// [alpha, beta]_P = L_{P alpha} beta - L_{P beta} alpha - d(P(alpha, beta)).
DiffForm koszul_bracket(const Multivector& p, const DiffForm& alpha, const DiffForm& beta);

// ---------------------------------------------------------------------------
// Graded operators on forms

/// A homogeneous operator on forms; `odd` is the parity used by graded
/// commutators.
struct GradedOperator {
  int degree = 0;
  bool odd = false;
  std::function<DiffForm(const DiffForm&)> action;

  DiffForm operator()(const DiffForm& omega) const { return action(omega); }
};

/// [A, B] = AB - (-1)^{|A||B|} BA.
GradedOperator graded_commutator(const GradedOperator& a, const GradedOperator& b);
GradedOperator operator-(const GradedOperator& a, const GradedOperator& b);

GradedOperator d_operator();
GradedOperator i_endo_operator(const EndoField& n);
GradedOperator i_biv_operator(const Multivector& p);
GradedOperator i_vec_operator(const Multivector& x);

/// d_N = [i_N, d].
GradedOperator d_N(const EndoField& n);

/// d_P A = [P, A] on multivectors.
Multivector d_P(const Multivector& p, const Multivector& a);

/// [d_N, i_P] = d_N i_P - i_P d_N, the raw graded commutator.
GradedOperator dN_iP_commutator(const EndoField& n, const Multivector& p);

/// Derived bracket of i_N and i_P as a tensorial operator:
/// [d_N, i_P] - [d, i_{NP}]. Requires NP skew (throws NotAdmissible).
/// On 1-forms it equals i_P d(N* alpha) - i_{NP} d alpha.
GradedOperator derived_bracket_op(const EndoField& n, const Multivector& p);

}  // namespace pncalc
