#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pncalc/pn.hpp"

namespace pncalc {

/// Volume form mu = rho dx^1 ^ ... ^ dx^n and its dual top multivector
/// lambda = rho^{-1} d_1 ^ ... ^ d_n, so that <lambda, mu> = 1.
struct VolumeDensity {
  RatFunc rho = RatFunc(1L);

  DiffForm volume_form(const Chart& chart) const;
  Multivector dual_multivector(const Chart& chart) const;
};

/// Throws ValidationError if rho vanishes or has a pole at one of `samples`
/// seeded rational points. A heuristic guard, not a proof of nonvanishing.
void check_density_samples(const VolumeDensity& mu, const Chart& chart, std::size_t samples = 8,
                           std::uint64_t seed = 0);

/// H^P_f = P df.
Multivector hamiltonian_vf(const Multivector& p, const RatFunc& f);
/// {f, g}_P = P^{ij} d_i f d_j g.
RatFunc poisson_bracket(const Multivector& p, const RatFunc& f, const RatFunc& g);

/// Closed form X^i = sum_j d_j P^{ij} + P^{ij} (d_j rho) / rho.
Multivector modular_vf(const Multivector& p, const VolumeDensity& mu);

/// <X_mu, df> rho - (coefficient of L_{H_f} mu), computed independently of
/// the closed form through the Cartan formula.
RatFunc modular_defining_residual(const Multivector& p, const VolumeDensity& mu, const RatFunc& f);

/// <X_mu, a> mu - (d i_{P a} mu + (i_P d a) mu), as a coefficient of the
/// coordinate top form.
RatFunc modular_form_identity_check(const Multivector& p, const VolumeDensity& mu, const DiffForm& alpha);

/// P_0 = P, P_k = N^k P, with every power checked to be skew.
std::vector<Multivector> bivector_hierarchy(const Multivector& p, const EndoField& n, unsigned kmax);

/// X^(k) = X^k_mu - N X^{k-1}_mu for k >= 1.
Multivector pn_modular_vf(const Multivector& p, const EndoField& n, unsigned k, const VolumeDensity& mu,
                          Hypotheses gate = Hypotheses::verify);

/// X^(k) computed with mu1 minus the same with mu2.
Multivector mu_independence_check(const Multivector& p, const EndoField& n, unsigned k, const VolumeDensity& mu1,
                                  const VolumeDensity& mu2, Hypotheses gate = Hypotheses::verify);

/// X^(k) + 1/2 P d(Tr N^k / k).
Multivector relation_check(const Multivector& p, const EndoField& n, unsigned k, const VolumeDensity& mu,
                           Hypotheses gate = Hypotheses::verify);

/// [P_k, X^(k)].
Multivector cocycle_check(const Multivector& p, const EndoField& n, unsigned k, const VolumeDensity& mu,
                          Hypotheses gate = Hypotheses::verify);

struct Hierarchy {
  std::vector<Multivector> bivectors;        // P_0 .. P_kmax
  std::vector<RatFunc> traces;               // Tr N^1 .. Tr N^kmax
  std::vector<RatFunc> functions;            // I_1 .. I_kmax
  std::vector<Multivector> raw_modular_vfs;  // X^0_mu .. X^kmax_mu
  std::vector<Multivector> modular_vfs;      // X^(1) .. X^(kmax)
};

Hierarchy build_hierarchy(const Multivector& p, const EndoField& n, unsigned kmax, const VolumeDensity& mu,
                          Hypotheses gate = Hypotheses::verify);

/// A named residual check, e.g. "successive k=2".
struct NamedOutcome {
  std::string name;
  CheckOutcome outcome;
};

/// (a) X^(k) - N X^(k-1), 2 <= k <= kmax; (b) N^{k-1} X^(1) - X^(k);
/// (c) X_{N,N^k P} + N X_{N,N^{k-1}P} - X_{N^2,N^{k-1}P}, 1 <= k <= kmax,
/// where X_{M,Q} = X_mu(MQ) - M X_mu(Q).
std::vector<NamedOutcome> recursion_checks(const Multivector& p, const EndoField& n, unsigned kmax,
                                           const VolumeDensity& mu, Hypotheses gate = Hypotheses::verify);

/// Poisson property of every P_k, [P_j, P_k] = 0, and {I_j, I_k} = 0 under
/// P_0 and P_1.
std::vector<NamedOutcome> hierarchy_consistency(const Multivector& p, const EndoField& n, unsigned kmax,
                                                Hypotheses gate = Hypotheses::verify);

/// The algebroid modular form of (TM, N, [ , ]_N), read off from
/// <xi, X> lambda (x) mu = [X, lambda]_N (x) mu + lambda (x) L_{NX} mu.
DiffForm xi_N_via_definition(const EndoField& n, const VolumeDensity& mu, Hypotheses gate = Hypotheses::verify);

/// Representative-level residuals (a)-(e), where the class of the cotangent
/// algebroid of P_k is represented by 2 X^k_mu and that of N^k by d Tr N^k.
std::vector<NamedOutcome> class_representative_checks(const Multivector& p, const EndoField& n, unsigned kmax,
                                                      const VolumeDensity& mu,
                                                      Hypotheses gate = Hypotheses::verify);

}  // namespace pncalc
