#include "pncalc/modular.hpp"

#include <numeric>

#include "pncalc/error.hpp"
#include "pncalc/random.hpp"

namespace pncalc {

namespace {

IndexTuple top_index(std::size_t n) {
  IndexTuple idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

DiffForm d_of(const Chart& chart, const RatFunc& f) { return ext_d(DiffForm::scalar(chart, f)); }

void gate_compatible(const Multivector& p, const EndoField& n, Hypotheses gate) {
  if (gate == Hypotheses::verify && !is_compatible(p, n)) throw NotCompatible();
}

CheckOutcome outcome_of(std::optional<Witness> w) {
  CheckOutcome out;
  out.absorb(std::move(w));
  return out;
}

std::string k_label(const char* name, unsigned k) { return std::string(name) + " k=" + std::to_string(k); }

}  // namespace

DiffForm VolumeDensity::volume_form(const Chart& chart) const {
  DiffForm mu(chart, static_cast<int>(chart.dim()));
  mu.set(top_index(chart.dim()), rho);
  return mu;
}

Multivector VolumeDensity::dual_multivector(const Chart& chart) const {
  Multivector lambda(chart, static_cast<int>(chart.dim()));
  lambda.set(top_index(chart.dim()), rho.inverse());
  return lambda;
}

void check_density_samples(const VolumeDensity& mu, const Chart& chart, std::size_t samples, std::uint64_t seed) {
  if (mu.rho.is_zero()) throw ValidationError("volume density is identically zero");
  for (std::size_t s = 0; s < samples; ++s) {
    Rng rng(derive_seed(seed, "density", s));
    std::vector<Rational> point;
    for (std::size_t i = 0; i < chart.dim(); ++i)
      point.push_back(Rational(static_cast<long>(rng.below(11)) - 5, static_cast<long>(rng.below(3)) + 1));
    Rational value;
    try {
      value = mu.rho.eval_at(point);
    } catch (const PoleAtPoint&) {
      throw ValidationError("volume density has a pole at a sampled point");
    }
    if (value == 0) throw ValidationError("volume density vanishes at a sampled point");
  }
}

Multivector hamiltonian_vf(const Multivector& p, const RatFunc& f) { return bivector_sharp(p, d_of(p.chart(), f)); }

RatFunc poisson_bracket(const Multivector& p, const RatFunc& f, const RatFunc& g) {
  return bivector_eval(p, d_of(p.chart(), f), d_of(p.chart(), g));
}

Multivector modular_vf(const Multivector& p, const VolumeDensity& mu) {
  if (p.degree() != 2) throw DegreeMismatch(p.degree(), 2);
  const std::size_t n = p.dim();
  std::vector<RatFunc> log_grad(n);
  const bool flat = mu.rho.is_constant();
  if (!flat)
    for (std::size_t j = 0; j < n; ++j) log_grad[j] = mu.rho.partial(j) / mu.rho;
  Multivector x(p.chart(), 1);
  for (std::size_t i = 0; i < n; ++i) {
    RatFunc s;
    for (std::size_t j = 0; j < n; ++j) {
      const RatFunc pij = p.get({i, j});
      if (pij.is_zero()) continue;
      s += pij.partial(j);
      if (!flat) s += pij * log_grad[j];
    }
    x.set({i}, s);
  }
  return x;
}

RatFunc modular_defining_residual(const Multivector& p, const VolumeDensity& mu, const RatFunc& f) {
  const Chart& chart = p.chart();
  const DiffForm lie = lie_deriv(hamiltonian_vf(p, f), mu.volume_form(chart));
  const RatFunc lhs = pairing(d_of(chart, f), modular_vf(p, mu)) * mu.rho;
  return lhs - lie.get(top_index(chart.dim()));
}

RatFunc modular_form_identity_check(const Multivector& p, const VolumeDensity& mu, const DiffForm& alpha) {
  const Chart& chart = p.chart();
  if (alpha.degree() != 1) throw DegreeMismatch(alpha.degree(), 1);
  const DiffForm vol = mu.volume_form(chart);
  const RatFunc lhs = pairing(alpha, modular_vf(p, mu)) * mu.rho;
  const RatFunc exact = ext_d(int_vec(bivector_sharp(p, alpha), vol)).get(top_index(chart.dim()));
  const RatFunc rest = int_biv(p, ext_d(alpha)).value() * mu.rho;
  return lhs - (exact + rest);
}

std::vector<Multivector> bivector_hierarchy(const Multivector& p, const EndoField& n, unsigned kmax) {
  std::vector<Multivector> out{p};
  EndoField power = EndoField::identity(p.chart());
  for (unsigned k = 1; k <= kmax; ++k) {
    power = endo_compose(n, power);
    const ContraTensor2 pk = endo_bivector(power, p);
    if (!is_skew(pk)) throw NotAdmissible();
    out.push_back(to_bivector(pk));
  }
  return out;
}

Multivector pn_modular_vf(const Multivector& p, const EndoField& n, unsigned k, const VolumeDensity& mu,
                          Hypotheses gate) {
  if (k < 1) throw BadDegree("modular vector field index must be at least 1");
  gate_compatible(p, n, gate);
  const auto ps = bivector_hierarchy(p, n, k);
  return modular_vf(ps[k], mu) - endo_apply(n, modular_vf(ps[k - 1], mu));
}

Multivector mu_independence_check(const Multivector& p, const EndoField& n, unsigned k, const VolumeDensity& mu1,
                                  const VolumeDensity& mu2, Hypotheses gate) {
  gate_compatible(p, n, gate);
  return pn_modular_vf(p, n, k, mu1, Hypotheses::assume) - pn_modular_vf(p, n, k, mu2, Hypotheses::assume);
}

Multivector relation_check(const Multivector& p, const EndoField& n, unsigned k, const VolumeDensity& mu,
                           Hypotheses gate) {
  gate_compatible(p, n, gate);
  const RatFunc ik = endo_trace(endo_power(n, k)) / RatFunc(static_cast<long>(k));
  return pn_modular_vf(p, n, k, mu, Hypotheses::assume) + RatFunc(Rational(1, 2)) * hamiltonian_vf(p, ik);
}

Multivector cocycle_check(const Multivector& p, const EndoField& n, unsigned k, const VolumeDensity& mu,
                          Hypotheses gate) {
  gate_compatible(p, n, gate);
  const auto ps = bivector_hierarchy(p, n, k);
  return schouten(ps[k], pn_modular_vf(p, n, k, mu, Hypotheses::assume));
}

Hierarchy build_hierarchy(const Multivector& p, const EndoField& n, unsigned kmax, const VolumeDensity& mu,
                          Hypotheses gate) {
  gate_compatible(p, n, gate);
  Hierarchy h;
  h.bivectors = bivector_hierarchy(p, n, kmax);
  EndoField power = EndoField::identity(p.chart());
  for (unsigned k = 1; k <= kmax; ++k) {
    power = endo_compose(n, power);
    h.traces.push_back(endo_trace(power));
    h.functions.push_back(h.traces.back() / RatFunc(static_cast<long>(k)));
  }
  for (const auto& pk : h.bivectors) h.raw_modular_vfs.push_back(modular_vf(pk, mu));
  for (unsigned k = 1; k <= kmax; ++k)
    h.modular_vfs.push_back(h.raw_modular_vfs[k] - endo_apply(n, h.raw_modular_vfs[k - 1]));
  return h;
}

std::vector<NamedOutcome> recursion_checks(const Multivector& p, const EndoField& n, unsigned kmax,
                                           const VolumeDensity& mu, Hypotheses gate) {
  gate_compatible(p, n, gate);
  // One extra level is needed by the generalized relation at k = kmax.
  const Hierarchy h = build_hierarchy(p, n, kmax + 1, mu, Hypotheses::assume);
  const EndoField n2 = endo_compose(n, n);
  auto xk = [&h](unsigned k) -> const Multivector& { return h.modular_vfs[k - 1]; };
  std::vector<NamedOutcome> out;
  for (unsigned k = 2; k <= kmax; ++k)
    out.push_back({k_label("successive", k), outcome_of(first_nonzero(xk(k) - endo_apply(n, xk(k - 1))))});
  Multivector iterate = xk(1);
  for (unsigned k = 1; k <= kmax; ++k) {
    if (k > 1) iterate = endo_apply(n, iterate);
    out.push_back({k_label("iterated", k), outcome_of(first_nonzero(iterate - xk(k)))});
  }
  // X_{M,Q} = X_mu(MQ) - M X_mu(Q), evaluated on the hierarchy's bivectors.
  auto relative = [&](const EndoField& m, unsigned shift, unsigned q) {
    return h.raw_modular_vfs[q + shift] - endo_apply(m, h.raw_modular_vfs[q]);
  };
  for (unsigned k = 1; k <= kmax; ++k) {
    const Multivector r = relative(n, 1, k) + endo_apply(n, relative(n, 1, k - 1)) - relative(n2, 2, k - 1);
    out.push_back({k_label("generalized", k), outcome_of(first_nonzero(r))});
  }
  return out;
}

std::vector<NamedOutcome> hierarchy_consistency(const Multivector& p, const EndoField& n, unsigned kmax,
                                                Hypotheses gate) {
  gate_compatible(p, n, gate);
  const auto ps = bivector_hierarchy(p, n, kmax);
  std::vector<RatFunc> is;
  EndoField power = EndoField::identity(p.chart());
  for (unsigned k = 1; k <= kmax; ++k) {
    power = endo_compose(n, power);
    is.push_back(endo_trace(power) / RatFunc(static_cast<long>(k)));
  }
  std::vector<NamedOutcome> out;
  for (unsigned k = 0; k <= kmax; ++k)
    out.push_back({"poisson P" + std::to_string(k), outcome_of(first_nonzero(schouten(ps[k], ps[k])))});
  for (unsigned j = 0; j <= kmax; ++j)
    for (unsigned k = j + 1; k <= kmax; ++k)
      out.push_back({"schouten P" + std::to_string(j) + " P" + std::to_string(k),
                     outcome_of(first_nonzero(schouten(ps[j], ps[k])))});
  for (unsigned l = 0; l <= 1 && l <= kmax; ++l)
    for (unsigned j = 1; j <= kmax; ++j)
      for (unsigned k = j + 1; k <= kmax; ++k)
        out.push_back({"involution I" + std::to_string(j) + " I" + std::to_string(k) + " under P" + std::to_string(l),
                       outcome_of(first_nonzero(poisson_bracket(ps[l], is[j - 1], is[k - 1]), p.chart()))});
  return out;
}

DiffForm xi_N_via_definition(const EndoField& n, const VolumeDensity& mu, Hypotheses gate) {
  if (gate == Hypotheses::verify && !is_nijenhuis(n)) throw PreconditionFailed("is_nijenhuis");
  const Chart& chart = n.chart();
  const IndexTuple top = top_index(chart.dim());
  const Multivector lambda = mu.dual_multivector(chart);
  const DiffForm vol = mu.volume_form(chart);
  const RatFunc lambda_coeff = lambda.get(top);
  DiffForm xi(chart, 1);
  for (std::size_t i = 0; i < chart.dim(); ++i) {
    const Multivector e = coordinate_vector(chart, i);
    // Both terms are multiples of lambda (x) mu; read off the factors.
    const RatFunc bracket_factor = deformed_schouten(n, e, lambda).get(top) / lambda_coeff;
    const RatFunc lie_factor = lie_deriv(endo_apply(n, e), vol).get(top) / mu.rho;
    xi.set({i}, bracket_factor + lie_factor);
  }
  return xi;
}

std::vector<NamedOutcome> class_representative_checks(const Multivector& p, const EndoField& n, unsigned kmax,
                                                      const VolumeDensity& mu, Hypotheses gate) {
  gate_compatible(p, n, gate);
  const Hierarchy h = build_hierarchy(p, n, kmax, mu, Hypotheses::assume);
  const Chart& chart = p.chart();
  const RatFunc two(2L);
  auto xk = [&h](unsigned k) -> const Multivector& { return h.modular_vfs[k - 1]; };
  auto d_trace = [&](unsigned k) { return d_of(chart, h.traces[k - 1]); };
  const Multivector p_dtr = bivector_sharp(p, d_trace(1));

  std::vector<NamedOutcome> out;
  const Multivector rep_a = two * h.raw_modular_vfs[1] - endo_apply(n, two * h.raw_modular_vfs[0]);
  out.push_back({"a: NP class relation", outcome_of(first_nonzero(rep_a + p_dtr))});
  out.push_back({"a: equals 2 X(1)", outcome_of(first_nonzero(rep_a - two * xk(1)))});
  out.push_back({"b: -P d Tr N = 2 X(1)", outcome_of(first_nonzero(-p_dtr - two * xk(1)))});
  for (unsigned k = 2; k <= kmax; ++k) {
    const DiffForm r = d_trace(k) - endo_transpose_apply(n, d_trace(k - 1)) -
                       RatFunc(Rational(1, static_cast<long>(k))) * d_trace(k);
    out.push_back({k_label("c: trace form", k), outcome_of(first_nonzero(r))});
  }
  for (unsigned k = 1; k <= kmax; ++k) {
    const Multivector r = two * (h.raw_modular_vfs[k] - endo_apply(n, h.raw_modular_vfs[k - 1])) +
                          bivector_sharp(p, d_of(chart, h.functions[k - 1]));
    out.push_back({k_label("d: relative class", k), outcome_of(first_nonzero(r))});
  }
  for (unsigned k = 1; k <= kmax; ++k) {
    const Multivector r1 = -bivector_sharp(p, d_trace(k)) - RatFunc(static_cast<long>(2 * k)) * xk(k);
    out.push_back({k_label("e: -P d Tr N^k = 2k X(k)", k), outcome_of(first_nonzero(r1))});
    Multivector sum(chart, 1);
    for (unsigned l = 1; l <= k; ++l) sum += endo_apply(endo_power(n, k - l), xk(l));
    const Multivector r2 =
        two * (h.raw_modular_vfs[k] - endo_apply(endo_power(n, k), h.raw_modular_vfs[0])) - two * sum;
    out.push_back({k_label("e: telescoping", k), outcome_of(first_nonzero(r2))});
  }
  return out;
}

}  // namespace pncalc
