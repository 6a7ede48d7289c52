#include "pncalc/pn.hpp"

#include "pncalc/error.hpp"
#include "pncalc/random.hpp"

namespace pncalc {

bool is_poisson(const Multivector& p) {
  if (p.degree() != 2) throw DegreeMismatch(p.degree(), 2);
  return schouten(p, p).is_zero();
}

bool is_nijenhuis(const EndoField& n) { return nijenhuis_torsion(n).is_zero(); }

bool is_admissible(const Multivector& p, const EndoField& n) {
  require_same_chart(p.chart(), n.chart());
  return is_skew(endo_bivector(n, p));
}

Multivector np_bivector(const EndoField& n, const Multivector& p) {
  require_same_chart(p.chart(), n.chart());
  const ContraTensor2 np = endo_bivector(n, p);
  if (!is_skew(np)) throw NotAdmissible();
  return to_bivector(np);
}

// ---------------------------------------------------------------------------
// Concomitant

Concomitant::Concomitant(Chart chart)
    : chart_(std::move(chart)), comps_(chart_.dim() * chart_.dim() * chart_.dim()) {}

bool Concomitant::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

Multivector Concomitant::partial_trace() const {
  Multivector out(chart_, 1);
  for (std::size_t j = 0; j < dim(); ++j) {
    RatFunc s;
    for (std::size_t k = 0; k < dim(); ++k) s += at(k, j, k);
    out.set({j}, s);
  }
  return out;
}

DiffForm Concomitant::apply(const DiffForm& alpha, const DiffForm& beta) const {
  require_same_chart(chart_, alpha.chart());
  require_same_chart(chart_, beta.chart());
  DiffForm out(chart_, 1);
  for (std::size_t m = 0; m < dim(); ++m) {
    RatFunc s;
    for (const auto& [k, ak] : alpha.components())
      for (const auto& [j, bj] : beta.components())
        if (!at(k[0], j[0], m).is_zero()) s += at(k[0], j[0], m) * ak * bj;
    out.set({m}, RatFunc(kPairingSign) * s);
  }
  return out;
}

std::optional<Witness> Concomitant::first_nonzero() const {
  for (std::size_t k = 0; k < dim(); ++k)
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t m = 0; m < dim(); ++m)
        if (!at(k, j, m).is_zero()) return Witness{{k + 1, j + 1, m + 1}, at(k, j, m).to_string(chart_), {}};
  return std::nullopt;
}

Concomitant concomitant_coord(const Multivector& p, const EndoField& n) {
  require_same_chart(p.chart(), n.chart());
  const std::size_t d = p.dim();
  // Cache P^{ab}, its partials and the partials of N.
  std::vector<RatFunc> pc(d * d);
  std::vector<RatFunc> dp(d * d * d);
  std::vector<RatFunc> dn(d * d * d);
  auto at3 = [d](std::size_t a, std::size_t b, std::size_t c) { return (a * d + b) * d + c; };
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      pc[a * d + b] = p.get({a, b});
      for (std::size_t l = 0; l < d; ++l) {
        dp[at3(l, a, b)] = pc[a * d + b].partial(l);
        dn[at3(l, a, b)] = n.at(a, b).partial(l);
      }
    }

  Concomitant c(p.chart());
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t m = 0; m < d; ++m) {
        RatFunc s;
        for (std::size_t l = 0; l < d; ++l) {
          s += pc[l * d + j] * dn[at3(l, k, m)];
          s += pc[k * d + l] * dn[at3(l, j, m)];
          s -= n.at(l, m) * dp[at3(l, k, j)];
          s += n.at(j, l) * dp[at3(m, k, l)];
          s -= pc[l * d + j] * dn[at3(m, k, l)];
        }
        c.set(k, j, m, s);
      }
  return c;
}

DiffForm concomitant_abstract(const Multivector& p, const EndoField& n, const DiffForm& alpha,
                              const DiffForm& beta) {
  const Multivector np = np_bivector(n, p);
  const DiffForm na = endo_transpose_apply(n, alpha);
  const DiffForm nb = endo_transpose_apply(n, beta);
  return koszul_bracket(np, alpha, beta) - (koszul_bracket(p, na, beta) + koszul_bracket(p, alpha, nb) -
                                            endo_transpose_apply(n, koszul_bracket(p, alpha, beta)));
}

bool is_compatible(const Multivector& p, const EndoField& n) {
  return is_admissible(p, n) && concomitant_coord(p, n).is_zero();
}

// ---------------------------------------------------------------------------
// Equivalent conditions

namespace {

constexpr unsigned kWitnessDegree = 2;

RatFunc random_function(Rng& rng, const Chart& chart) {
  return RatFunc(random_nonzero_polynomial(rng, chart.dim(), kWitnessDegree));
}

DiffForm d_of(const Chart& chart, const RatFunc& f) { return ext_d(DiffForm::scalar(chart, f)); }

void require_admissible(const Multivector& p, const EndoField& n) {
  if (!is_admissible(p, n)) throw NotAdmissible();
}

}  // namespace

CheckOutcome cond_dN_derivation(const Multivector& p, const EndoField& n, std::size_t trials,
                                std::uint64_t seed) {
  require_admissible(p, n);
  const Chart& chart = p.chart();
  CheckOutcome out;
  for (std::size_t t = 0; t < trials && out.holds; ++t) {
    Rng rng(derive_seed(seed, "cond_dN_derivation", t));
    const RatFunc f = random_function(rng, chart);
    const RatFunc g = random_function(rng, chart);
    const DiffForm df = d_of(chart, f);
    const DiffForm dg = d_of(chart, g);
    // Derivation rule on the pair (df, g), where [df, g]_P = {f, g}_P,
    // [omega, g]_P = i_{P dg} omega for a 2-form and d_N = N* on functions.
    const GradedOperator dn = d_N(n);
    const DiffForm lhs = dn(DiffForm::scalar(chart, bivector_eval(p, df, dg)));
    const DiffForm rhs = int_vec(bivector_sharp(p, dg), dn(df)) + koszul_bracket(p, df, dn(DiffForm::scalar(chart, g)));
    out.absorb(with_context(first_nonzero(lhs - rhs),
                            "f = " + f.to_string(chart) + ", g = " + g.to_string(chart)));
  }
  return out;
}

CheckOutcome cond_dP_derivation(const Multivector& p, const EndoField& n, std::size_t trials,
                                std::uint64_t seed) {
  require_admissible(p, n);
  const Chart& chart = p.chart();
  CheckOutcome out;
  for (std::size_t t = 0; t < trials && out.holds; ++t) {
    Rng rng(derive_seed(seed, "cond_dP_derivation", t));
    const Multivector x = random_multivector(rng, chart, 1, kWitnessDegree);
    const Multivector y = random_multivector(rng, chart, 1, kWitnessDegree);
    const Multivector lhs = d_P(p, deformed_schouten(n, x, y));
    const Multivector rhs = deformed_schouten(n, d_P(p, x), y) + deformed_schouten(n, x, d_P(p, y));
    out.absorb(with_context(first_nonzero(lhs - rhs), "X = " + x.to_string() + ", Y = " + y.to_string()));
  }
  return out;
}

CheckOutcome cond_function_form(const Multivector& p, const EndoField& n, std::size_t trials,
                                std::uint64_t seed) {
  require_admissible(p, n);
  const Multivector np = np_bivector(n, p);
  const Chart& chart = p.chart();
  CheckOutcome out;
  for (std::size_t t = 0; t < trials && out.holds; ++t) {
    Rng rng(derive_seed(seed, "cond_function_form", t));
    const RatFunc f = random_function(rng, chart);
    const RatFunc g = random_function(rng, chart);
    const DiffForm df = d_of(chart, f);
    const DiffForm dg = d_of(chart, g);
    const Multivector hf = bivector_sharp(p, df);
    const Multivector hg = bivector_sharp(p, dg);
    const DiffForm lhs = d_of(chart, bivector_eval(np, df, dg));
    const DiffForm rhs = lie_deriv(hf, endo_transpose_apply(n, dg)) - lie_deriv(hg, endo_transpose_apply(n, df)) -
                         endo_transpose_apply(n, d_of(chart, directional_derivative(hf, g)));
    out.absorb(with_context(first_nonzero(lhs - rhs),
                            "f = " + f.to_string(chart) + ", g = " + g.to_string(chart)));
  }
  return out;
}

CompatReport full_compat_report(const Multivector& p, const EndoField& n, std::size_t trials,
                                std::uint64_t seed) {
  CompatReport r;
  auto note = [&r](const char* name, std::optional<Witness> w) {
    if (w) r.witnesses.emplace_back(name, std::move(*w));
  };
  r.poisson_p = is_poisson(p);
  if (!r.poisson_p) note("is_poisson", first_nonzero(schouten(p, p)));
  const Torsion torsion = nijenhuis_torsion(n);
  r.nijenhuis_n = torsion.is_zero();
  note("is_nijenhuis", first_nonzero(torsion));
  r.admissible = is_admissible(p, n);
  if (!r.admissible) return r;

  const Concomitant c = concomitant_coord(p, n);
  r.concomitant_zero = c.is_zero();
  note("concomitant", c.first_nonzero());

  const CheckOutcome dn = cond_dN_derivation(p, n, trials, seed);
  r.cond_dN_derivation = dn.holds;
  note("cond_dN_derivation", dn.witness);
  const CheckOutcome dp = cond_dP_derivation(p, n, trials, seed);
  r.cond_dP_derivation = dp.holds;
  note("cond_dP_derivation", dp.witness);
  const CheckOutcome ff = cond_function_form(p, n, trials, seed);
  r.cond_function_form = ff.holds;
  note("cond_function_form", ff.witness);
  return r;
}

// ---------------------------------------------------------------------------
// Trace identity and its consequences

namespace {

void require_trace_hypotheses(const Multivector& p, const EndoField& n, Hypotheses gate) {
  if (gate == Hypotheses::assume) return;
  if (!is_poisson(p)) throw PreconditionFailed("is_poisson");
  if (!is_nijenhuis(n)) throw PreconditionFailed("is_nijenhuis");
  if (!is_admissible(p, n)) throw NotAdmissible();
}

void require_compatible(const Multivector& p, const EndoField& n, Hypotheses gate) {
  if (gate == Hypotheses::assume) return;
  if (!is_compatible(p, n)) throw NotCompatible();
}

// Y = 1/2 P d Tr N.
Multivector half_hamiltonian_of_trace(const Multivector& p, const EndoField& n) {
  return RatFunc(Rational(1, 2)) * bivector_sharp(p, d_of(p.chart(), endo_trace(n)));
}

}  // namespace

RatFunc trace_identity_check(const Multivector& p, const EndoField& n, const DiffForm& alpha, Hypotheses gate) {
  require_same_chart(p.chart(), alpha.chart());
  if (alpha.degree() != 1) throw DegreeMismatch(alpha.degree(), 1);
  require_trace_hypotheses(p, n, gate);
  const Multivector trace_c = concomitant_coord(p, n).partial_trace();
  const RatFunc half(Rational(1, 2));
  const RatFunc lhs = half * pairing(alpha, trace_c);
  const RatFunc hamiltonian_term = pairing(alpha, half_hamiltonian_of_trace(p, n));
  const RatFunc derived = derived_bracket_op(n, p)(alpha).value();
  return lhs - hamiltonian_term + derived;
}

RatFunc corollary_check(const Multivector& p, const EndoField& n, const RatFunc& f, Hypotheses gate) {
  require_compatible(p, n, gate);
  const DiffForm df = d_of(p.chart(), f);
  const RatFunc lhs = int_biv(p, d_N(n)(df)).value();
  const RatFunc h_trace_f = directional_derivative(bivector_sharp(p, d_of(p.chart(), endo_trace(n))), f);
  return lhs + RatFunc(Rational(1, 2)) * h_trace_f;
}

DiffForm bm_operator_check(const Multivector& p, const EndoField& n, const DiffForm& omega, Hypotheses gate) {
  require_same_chart(p.chart(), omega.chart());
  require_compatible(p, n, gate);
  return derived_bracket_op(n, p)(omega) - int_vec(half_hamiltonian_of_trace(p, n), omega);
}

}  // namespace pncalc
