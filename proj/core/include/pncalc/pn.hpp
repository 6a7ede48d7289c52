#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pncalc/witness.hpp"

namespace pncalc {

bool is_poisson(const Multivector& p);
bool is_nijenhuis(const EndoField& n);
/// NP skew, equivalently NP = PN.
bool is_admissible(const Multivector& p, const EndoField& n);

/// NP as a bivector; throws NotAdmissible when NP is not skew.
Multivector np_bivector(const EndoField& n, const Multivector& p);

/// The (2,1)-tensor C(P,N) with components C^{kj}_m.
class Concomitant {
 public:
  static constexpr long kPairingSign = -1;

  explicit Concomitant(Chart chart);

  const Chart& chart() const noexcept { return chart_; }
  std::size_t dim() const noexcept { return chart_.dim(); }
  const RatFunc& at(std::size_t k, std::size_t j, std::size_t m) const {
    return comps_[(k * dim() + j) * dim() + m];
  }
  void set(std::size_t k, std::size_t j, std::size_t m, const RatFunc& v) {
    comps_[(k * dim() + j) * dim() + m] = v;
  }
  bool is_zero() const;

  /// sum_k C^{kj}_k as a function of j, returned as a vector field.
  Multivector partial_trace() const;
  /// C(alpha, beta)_m = kPairingSign * sum_{k,j} C^{kj}_m alpha_k beta_j.
  /// The sign is calibrated against concomitant_abstract: the five-term
  /// coordinate components are the negatives of the bracket definition.
  DiffForm apply(const DiffForm& alpha, const DiffForm& beta) const;
  /// First nonzero component, indexed (k, j, m).
  std::optional<Witness> first_nonzero() const;

 private:
  Chart chart_;
  std::vector<RatFunc> comps_;
};

/// Five-term coordinate formula for C^{kj}_m.
Concomitant concomitant_coord(const Multivector& p, const EndoField& n);

/// [a,b]_{NP} - ([N a, b]_P + [a, N b]_P - N[a,b]_P); throws NotAdmissible.
DiffForm concomitant_abstract(const Multivector& p, const EndoField& n, const DiffForm& alpha,
                              const DiffForm& beta);

bool is_compatible(const Multivector& p, const EndoField& n);

// Function- and 1-form-level forms of the compatibility condition, checked
// on `trials` seeded random polynomial inputs. All throw NotAdmissible.
//   dN: d_N{f,g}_P = i_{P dg}(d_N df) + [df, d_N g]_P
//   dP: [P,[X,Y]_N] = [[P,X],Y]_N + [X,[P,Y]]_N
//   function form: d{f,g}_{NP} = L_{H_f} d_N g - L_{H_g} d_N f - d_N(H_f g)
CheckOutcome cond_dN_derivation(const Multivector& p, const EndoField& n, std::size_t trials,
                                std::uint64_t seed);
CheckOutcome cond_dP_derivation(const Multivector& p, const EndoField& n, std::size_t trials,
                                std::uint64_t seed);
CheckOutcome cond_function_form(const Multivector& p, const EndoField& n, std::size_t trials,
                                std::uint64_t seed);

struct CompatReport {
  bool admissible = false;
  bool poisson_p = false;
  bool nijenhuis_n = false;
  bool concomitant_zero = false;
  bool cond_dN_derivation = false;
  bool cond_dP_derivation = false;
  bool cond_function_form = false;
  /// (identity name, witness) for every failed flag.
  std::vector<std::pair<std::string, Witness>> witnesses;

  bool compatible() const noexcept { return admissible && concomitant_zero; }
};

/// Evaluates every predicate; the derivation conditions are left false when
/// the pair is not admissible.
CompatReport full_compat_report(const Multivector& p, const EndoField& n, std::size_t trials = 8,
                                std::uint64_t seed = 0);

/// 1/2 sum C^{kj}_k alpha_j - 1/2 <P d Tr N, alpha> + D(alpha), where D is
/// derived_bracket_op(N, P). Vanishes for admissible Poisson-Nijenhuis pairs.
RatFunc trace_identity_check(const Multivector& p, const EndoField& n, const DiffForm& alpha,
                             Hypotheses gate = Hypotheses::verify);

/// i_P(d_N df) + 1/2 H^P_{Tr N}(f). Requires compatibility.
RatFunc corollary_check(const Multivector& p, const EndoField& n, const RatFunc& f,
                        Hypotheses gate = Hypotheses::verify);

/// D(omega) - i_{Y} omega with Y = 1/2 P d Tr N. Requires compatibility.
DiffForm bm_operator_check(const Multivector& p, const EndoField& n, const DiffForm& omega,
                           Hypotheses gate = Hypotheses::verify);

}  // namespace pncalc
