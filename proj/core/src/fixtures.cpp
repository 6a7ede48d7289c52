#include "pncalc/fixtures.hpp"

#include "pncalc/error.hpp"
#include "pncalc/random.hpp"

namespace pncalc {

namespace {

const std::vector<std::string> kFourCoords = {"x1", "x2", "y1", "y2"};

// d/dx1 ^ d/dy1 + d/dx2 ^ d/dy2 in the ordering (x1, x2, y1, y2).
std::vector<ComponentEntry> canonical_p() { return {{1, 3, "1"}, {2, 4, "1"}}; }

std::vector<ComponentEntry> diagonal(const std::vector<std::string>& entries) {
  std::vector<ComponentEntry> out;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] != "0") out.push_back({i + 1, i + 1, entries[i]});
  return out;
}

const std::map<std::string, std::string> kAllPass = {
    {"structure", "pass"}, {"compat", "pass"},  {"eq1", "pass"},     {"eq2", "pass"},
    {"operator", "pass"},  {"modular", "pass"}, {"classes", "pass"},
};

}  // namespace

std::vector<std::string> fixture_names() { return {"FIX-0", "FIX-A", "FIX-B", "FIX-C"}; }

Fixture load_fixture(std::string_view name) {
  Fixture f;
  f.name = std::string(name);
  StructureDef& s = f.structure;
  s.name = f.name;
  if (name == "FIX-0") {
    s.coords = kFourCoords;
    s.p = canonical_p();
    s.n = diagonal({"2", "3", "2", "3"});
    f.expected = kAllPass;
    f.notes = "Constant canonical P with constant diagonal N; every modular field vanishes.";
  } else if (name == "FIX-A") {
    s.coords = {"x", "y"};
    s.p = {{1, 2, "1"}};
    s.n = diagonal({"x", "x"});
    f.expected = kAllPass;
    f.notes = "Plane with N = x Id; Tr N = 2x and X(1) = -d/dy.";
  } else if (name == "FIX-B") {
    s.coords = kFourCoords;
    s.p = canonical_p();
    s.n = diagonal({"x1", "x2", "x1", "x2"});
    f.expected = kAllPass;
    f.notes = "Block-diagonal semisimple normal form, eigenvalues x1 and x2.";
  } else if (name == "FIX-C") {
    s.coords = kFourCoords;
    s.p = canonical_p();
    s.n = diagonal({"x1", "x1", "x1", "x1"});
    // Only the density-level modular identities apply without compatibility.
    f.expected = {{"structure", "pass"}, {"compat", "fail"},  {"eq1", "pass"},        {"eq2", "skipped"},
                  {"operator", "skipped"}, {"modular", "pass"}, {"classes", "skipped"}};
    f.notes = "Admissible Poisson-Nijenhuis pair that is not compatible; the trace identity still holds.";
  } else {
    throw UnknownFixture(std::string(name));
  }
  return f;
}

GeneratorKind parse_generator_kind(std::string_view text) {
  if (text == "dim2-general") return GeneratorKind::dim2_general;
  if (text == "dim4-blockdiag") return GeneratorKind::dim4_blockdiag;
  throw ValidationError("unknown generator kind '" + std::string(text) + "'");
}

std::string to_string(GeneratorKind kind) {
  return kind == GeneratorKind::dim2_general ? "dim2-general" : "dim4-blockdiag";
}

StructureDef random_compatible(std::uint64_t seed, GeneratorKind kind) {
  Rng rng(derive_seed(seed, "random_compatible/" + to_string(kind)));
  StructureDef def;
  def.name = "random-" + to_string(kind) + "-" + std::to_string(seed);
  if (kind == GeneratorKind::dim2_general) {
    const Chart chart({"x", "y"});
    const RatFunc p12(random_nonzero_polynomial(rng, 2, 2));
    const RatFunc f(random_polynomial(rng, 2, 2));
    def.coords = chart.names();
    def.p = {{1, 2, p12.to_string(chart)}};
    def.n = diagonal({f.to_string(chart), f.to_string(chart)});
  } else {
    const Chart chart(kFourCoords);
    const RatFunc g1(random_univariate(rng, 0, 2));
    const RatFunc g2(random_univariate(rng, 1, 2));
    def.coords = chart.names();
    def.p = canonical_p();
    def.n = diagonal({g1.to_string(chart), g2.to_string(chart), g1.to_string(chart), g2.to_string(chart)});
  }
  const Structure s = materialize(def);
  if (!is_poisson(s.p) || !is_nijenhuis(s.n) || !is_compatible(s.p, s.n))
    throw GenerationFailed(def.name + " is not a compatible Poisson-Nijenhuis pair");
  return def;
}

StructureDef random_admissible_incompatible(std::uint64_t seed) {
  const Chart chart(kFourCoords);
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(derive_seed(seed, "random_admissible_incompatible", attempt));
    const Polynomial f = random_polynomial(rng, 4, 2);
    if (f.is_constant()) continue;
    const std::string text = RatFunc(f).to_string(chart);
    StructureDef def;
    def.name = "random-incompatible-" + std::to_string(seed);
    def.coords = chart.names();
    def.p = canonical_p();
    def.n = diagonal({text, text, text, text});
    const Structure s = materialize(def);
    if (is_admissible(s.p, s.n) && is_poisson(s.p) && is_nijenhuis(s.n) && !is_compatible(s.p, s.n)) return def;
  }
}

}  // namespace pncalc
