#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pncalc/calculus.hpp"

namespace pncalc {

/// The first nonzero component of a residual that should vanish.
struct Witness {
  std::vector<std::size_t> index;  // 1-based component index; empty for a scalar
  std::string expression;          // canonical text of the component
  std::string context;             // inputs that produced it, e.g. "f = x, g = y"
};

/// Outcome of a check over one or more residuals.
struct CheckOutcome {
  bool holds = true;
  std::optional<Witness> witness;

  /// Keeps the first failure only, so witnesses are deterministic.
  void absorb(std::optional<Witness> w) {
    if (!w) return;
    if (holds) witness = std::move(w);
    holds = false;
  }
};

std::optional<Witness> first_nonzero(const RatFunc& f, const Chart& chart);
template <Variance V>
std::optional<Witness> first_nonzero(const AlternatingField<V>& field);
std::optional<Witness> first_nonzero(const EndoField& n);
std::optional<Witness> first_nonzero(const Torsion& t);

/// "(1,2)" style rendering of a 1-based index.
std::string index_string(const std::vector<std::size_t>& index);

/// Attaches a context string to a witness if one is present.
inline std::optional<Witness> with_context(std::optional<Witness> w, std::string context) {
  if (w) w->context = std::move(context);
  return w;
}

/// Whether a check first verifies the hypotheses of the statement it tests.
enum class Hypotheses { verify, assume };

}  // namespace pncalc
