#include "pncalc/random.hpp"

#include <array>

namespace pncalc {

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t counter) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t byte) {
    h ^= byte;
    h *= 1099511628211ULL;
  };
  for (int i = 0; i < 8; ++i) mix((seed >> (8 * i)) & 0xFFU);
  for (char c : label) mix(static_cast<unsigned char>(c));
  for (int i = 0; i < 8; ++i) mix((counter >> (8 * i)) & 0xFFU);
  return h;
}

Rational random_coefficient(Rng& rng) {
  static const std::array<Rational, 8> pool = {Rational(1),  Rational(-1),   Rational(2),  Rational(-2),
                                               Rational(3),  Rational(1, 2), Rational(-1, 3), Rational(5, 2)};
  return pool[rng.below(pool.size())];
}

Polynomial random_polynomial(Rng& rng, std::size_t nvars, unsigned max_degree, std::size_t max_terms) {
  std::vector<Term> terms;
  const std::size_t count = rng.below(max_terms + 1);
  for (std::size_t t = 0; t < count; ++t) {
    const unsigned degree = static_cast<unsigned>(rng.below(max_degree + 1));
    std::vector<std::uint32_t> exps(nvars, 0);
    for (unsigned d = 0; d < degree && nvars > 0; ++d) ++exps[rng.below(nvars)];
    terms.push_back({Monomial(std::move(exps)), random_coefficient(rng)});
  }
  return Polynomial::from_unsorted(std::move(terms));
}

Polynomial random_nonzero_polynomial(Rng& rng, std::size_t nvars, unsigned max_degree, std::size_t max_terms) {
  for (;;) {
    Polynomial p = random_polynomial(rng, nvars, max_degree, max_terms);
    if (!p.is_zero()) return p;
  }
}

Polynomial random_univariate(Rng& rng, std::size_t var, unsigned max_degree) {
  std::vector<Term> terms;
  for (unsigned d = 0; d <= max_degree; ++d) {
    if (rng.coin()) terms.push_back({Monomial::variable(var, d), random_coefficient(rng)});
  }
  return Polynomial::from_unsorted(std::move(terms));
}

RatFunc random_ratfunc(Rng& rng, std::size_t nvars, unsigned max_degree) {
  Polynomial num = random_polynomial(rng, nvars, max_degree);
  Polynomial den = rng.coin() ? Polynomial(Rational(1)) : random_nonzero_polynomial(rng, nvars, max_degree, 3);
  return RatFunc(std::move(num), std::move(den));
}

namespace {

template <typename Field>
Field random_alternating(Rng& rng, const Chart& chart, int degree, unsigned max_degree) {
  Field out(chart, degree);
  if (degree < 0 || static_cast<std::size_t>(degree) > chart.dim()) return out;
  // Enumerate increasing tuples and fill a random subset of them.
  IndexTuple idx(static_cast<std::size_t>(degree));
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (;;) {
    if (rng.below(3) != 0) out.set(idx, RatFunc(random_polynomial(rng, chart.dim(), max_degree, 3)));
    std::size_t pos = idx.size();
    while (pos > 0 && idx[pos - 1] == chart.dim() - idx.size() + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < idx.size(); ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

}  // namespace

DiffForm random_form(Rng& rng, const Chart& chart, int degree, unsigned max_degree) {
  return random_alternating<DiffForm>(rng, chart, degree, max_degree);
}

Multivector random_multivector(Rng& rng, const Chart& chart, int degree, unsigned max_degree) {
  return random_alternating<Multivector>(rng, chart, degree, max_degree);
}

EndoField random_endo(Rng& rng, const Chart& chart, unsigned max_degree) {
  EndoField out(chart);
  for (std::size_t i = 0; i < chart.dim(); ++i)
    for (std::size_t j = 0; j < chart.dim(); ++j)
      out.set(i, j, RatFunc(random_polynomial(rng, chart.dim(), max_degree, 2)));
  return out;
}

}  // namespace pncalc
