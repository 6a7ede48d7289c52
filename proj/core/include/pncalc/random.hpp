#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "pncalc/tensor.hpp"

namespace pncalc {

/// Seeded source for randomized witnesses. Only raw mt19937_64 output is
/// used, so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [0, bound).
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }
  bool coin() { return (engine_() & 1U) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Mixes a label and counter into a base seed (FNV-1a), so every check gets
/// its own reproducible stream independent of which other checks ran.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t counter = 0);

/// Nonzero coefficient drawn from a small fixed pool of rationals.
Rational random_coefficient(Rng& rng);

/// Random polynomial in the first `nvars` coordinates with total degree at
/// most `max_degree` and at most `max_terms` terms (possibly zero).
Polynomial random_polynomial(Rng& rng, std::size_t nvars, unsigned max_degree, std::size_t max_terms = 4);
Polynomial random_nonzero_polynomial(Rng& rng, std::size_t nvars, unsigned max_degree,
                                     std::size_t max_terms = 4);
/// Univariate polynomial in coordinate `var`.
Polynomial random_univariate(Rng& rng, std::size_t var, unsigned max_degree);

/// Random quotient of polynomials; the denominator is monic-normalized and
/// never zero.
RatFunc random_ratfunc(Rng& rng, std::size_t nvars, unsigned max_degree);

DiffForm random_form(Rng& rng, const Chart& chart, int degree, unsigned max_degree = 2);
Multivector random_multivector(Rng& rng, const Chart& chart, int degree, unsigned max_degree = 2);
EndoField random_endo(Rng& rng, const Chart& chart, unsigned max_degree = 1);

}  // namespace pncalc
