// Acceptance run: one PASS/FAIL line per criterion, exact-zero tolerance
// throughout. Exits nonzero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pncalc/fixtures.hpp"
#include "pncalc/random.hpp"
#include "pncalc/report.hpp"

using namespace pncalc;

namespace {

const std::filesystem::path kSource = PNCALC_SOURCE_DIR;
constexpr std::size_t kTrials = 8;
constexpr std::uint64_t kSeed = 0;

struct Named {
  std::string label;
  Structure s;
};

std::vector<Named> fixtures(bool compatible_only) {
  std::vector<Named> out;
  for (const auto& name : fixture_names()) {
    if (compatible_only && name == "FIX-C") continue;
    out.push_back({name, materialize(load_fixture(name).structure)});
  }
  return out;
}

std::vector<Named> generated_compatible() {
  std::vector<Named> out;
  for (std::uint64_t seed = 0; seed < 5; ++seed)
    for (const GeneratorKind kind : {GeneratorKind::dim2_general, GeneratorKind::dim4_blockdiag}) {
      const StructureDef def = random_compatible(seed, kind);
      out.push_back({def.name, materialize(def)});
    }
  return out;
}

std::vector<Named> generated_incompatible() {
  std::vector<Named> out;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const StructureDef def = random_admissible_incompatible(seed);
    out.push_back({def.name, materialize(def)});
  }
  return out;
}

std::vector<Named> concat(std::vector<Named> a, const std::vector<Named>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

VolumeDensity second_density(const Structure& s) {
  const RatFunc c1 = RatFunc::variable(0);
  return VolumeDensity{s.mu.rho * (RatFunc(1L) + c1 * c1)};
}

bool all_hold(const std::vector<NamedOutcome>& outcomes, std::string& detail) {
  for (const auto& o : outcomes)
    if (!o.outcome.holds) {
      detail = o.name;
      return false;
    }
  return true;
}

// Collects the first failure of a criterion.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
    ++checks_;
  }
  bool ok() const { return failure_.empty(); }
  std::string summary() const {
    return ok() ? std::to_string(checks_) + " exact checks" : "first failure: " + failure_;
  }

 private:
  std::string failure_;
  std::size_t checks_ = 0;
};

void trace_identity(Criterion& c) {
  const auto structures = concat(concat(fixtures(false), generated_compatible()), generated_incompatible());
  for (const auto& [label, s] : structures) {
    Rng rng(derive_seed(kSeed, "acceptance/eq1/" + label));
    for (int t = 0; t < 5; ++t)
      c.expect(trace_identity_check(s.p, s.n, random_form(rng, s.chart, 1)).is_zero(), label);
  }
}

void corollary_and_operator(Criterion& c) {
  for (const auto& [label, s] : concat(fixtures(true), generated_compatible())) {
    Rng rng(derive_seed(kSeed, "acceptance/eq2/" + label));
    for (int t = 0; t < 5; ++t)
      c.expect(corollary_check(s.p, s.n, RatFunc(random_polynomial(rng, s.chart.dim(), 2))).is_zero(),
               label + " corollary");
    for (int k = 0; k <= static_cast<int>(s.chart.dim()); ++k)
      c.expect(bm_operator_check(s.p, s.n, random_form(rng, s.chart, k)).is_zero(),
               label + " operator degree " + std::to_string(k));
  }
}

void condition_equivalence(Criterion& c) {
  const auto run = [&c](const std::vector<Named>& structures, bool expected) {
    for (const auto& [label, s] : structures) {
      const CompatReport r = full_compat_report(s.p, s.n, kTrials, kSeed);
      const bool flags[] = {r.concomitant_zero, r.cond_dN_derivation, r.cond_dP_derivation, r.cond_function_form};
      for (bool f : flags) c.expect(f == expected, label);
      const CompatReport again = full_compat_report(s.p, s.n, kTrials, kSeed);
      c.expect(again.witnesses.size() == r.witnesses.size(), label + " determinism");
      for (std::size_t i = 0; i < r.witnesses.size() && i < again.witnesses.size(); ++i)
        c.expect(again.witnesses[i].second.expression == r.witnesses[i].second.expression &&
                     again.witnesses[i].second.context == r.witnesses[i].second.context,
                 label + " determinism");
    }
  };
  run(generated_compatible(), true);
  run(generated_incompatible(), false);
}

void algebroid_modular_form(Criterion& c) {
  for (const auto& [label, s] : fixtures(false)) {
    const DiffForm expected = ext_d(DiffForm::scalar(s.chart, endo_trace(s.n)));
    c.expect(xi_N_via_definition(s.n, s.mu) == expected, label);
    c.expect(xi_N_via_definition(s.n, second_density(s)) == expected, label + " second density");
  }
}

void hierarchy(Criterion& c) {
  const unsigned kmax = 3;
  for (const char* name : {"FIX-A", "FIX-B"}) {
    const Structure s = materialize(load_fixture(name).structure);
    std::string detail;
    c.expect(all_hold(hierarchy_consistency(s.p, s.n, kmax), detail), std::string(name) + " " + detail);
    c.expect(all_hold(recursion_checks(s.p, s.n, kmax, s.mu), detail), std::string(name) + " " + detail);
    for (unsigned k = 1; k <= kmax; ++k) {
      const std::string at = std::string(name) + " k=" + std::to_string(k);
      c.expect(mu_independence_check(s.p, s.n, k, s.mu, second_density(s)).is_zero(), at + " density");
      c.expect(relation_check(s.p, s.n, k, s.mu).is_zero(), at + " relation");
      c.expect(cocycle_check(s.p, s.n, k, s.mu).is_zero(), at + " cocycle");
    }
  }
}

void class_representatives(Criterion& c) {
  const unsigned kmax = 3;
  for (const auto& [label, s] : fixtures(true)) {
    std::string detail;
    c.expect(all_hold(class_representative_checks(s.p, s.n, kmax, s.mu), detail), label + " " + detail);
    // d Tr N^k - N* d Tr N^{k-1} = d Tr(N^k) / k
    for (unsigned k = 1; k <= kmax; ++k) {
      const auto dtr = [&](unsigned j) { return ext_d(DiffForm::scalar(s.chart, endo_trace(endo_power(s.n, j)))); };
      const DiffForm lhs = dtr(k) - endo_transpose_apply(s.n, dtr(k - 1));
      c.expect(lhs == RatFunc(Rational(1, static_cast<long>(k))) * dtr(k), label + " scalar k=" + std::to_string(k));
    }
  }
}

void negative_control(Criterion& c) {
  const Structure s = materialize(load_fixture("FIX-C").structure);
  c.expect(!is_compatible(s.p, s.n), "FIX-C compatible");
  c.expect(concomitant_coord(s.p, s.n).first_nonzero().has_value(), "no concomitant witness");
  const CompatReport r = full_compat_report(s.p, s.n, kTrials, kSeed);
  bool concrete = false;
  for (const auto& [name, w] : r.witnesses)
    if ((name == "cond_dN_derivation" || name == "cond_function_form") && w.context.rfind("f = ", 0) == 0 &&
        w.context.find(", g = ") != std::string::npos)
      concrete = true;
  c.expect(!r.cond_dN_derivation || !r.cond_dP_derivation, "derivation conditions hold");
  c.expect(concrete, "no (f, g) witness");
  const CompatReport again = full_compat_report(s.p, s.n, kTrials, kSeed);
  c.expect(!again.witnesses.empty() && !r.witnesses.empty() &&
               again.witnesses.front().second.context == r.witnesses.front().second.context,
           "witness not deterministic");
  Rng rng(derive_seed(kSeed, "acceptance/eq1/FIX-C"));
  for (int t = 0; t < 5; ++t) c.expect(trace_identity_check(s.p, s.n, random_form(rng, s.chart, 1)).is_zero(), "eq1");
}

// [P,P]^{ijk} = -2 * cyclic sum over (i,j,k) of P^{li} d_l P^{jk}.
Multivector schouten_square_components(const Multivector& p) {
  const std::size_t n = p.dim();
  Multivector out(p.chart(), 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::size_t t[3] = {i, j, k};
        RatFunc sum;
        for (int r = 0; r < 3; ++r)
          for (std::size_t l = 0; l < n; ++l)
            sum += p.get({l, t[r]}) * p.get({t[(r + 1) % 3], t[(r + 2) % 3]}).partial(l);
        out.set({i, j, k}, RatFunc(-2L) * sum);
      }
  return out;
}

void oracles(Criterion& c) {
  const auto structures = concat(concat(fixtures(false), generated_compatible()), generated_incompatible());
  for (const auto& [label, s] : structures) {
    Rng rng(derive_seed(kSeed, "acceptance/oracles/" + label));
    const Concomitant coord = concomitant_coord(s.p, s.n);
    for (int t = 0; t < 3; ++t) {
      const DiffForm a = random_form(rng, s.chart, 1);
      const DiffForm b = random_form(rng, s.chart, 1);
      c.expect(coord.apply(a, b) == concomitant_abstract(s.p, s.n, a, b), label + " concomitant");
    }
    for (int t = 0; t < 10; ++t)
      c.expect(modular_defining_residual(s.p, s.mu, RatFunc(random_polynomial(rng, s.chart.dim(), 2))).is_zero(),
               label + " modular");
  }
  const Chart chart({"a", "b", "c", "d"});
  Rng rng(derive_seed(kSeed, "acceptance/schouten"));
  for (int t = 0; t < 10; ++t) {
    const Multivector p = random_multivector(rng, chart, 2);
    c.expect(schouten(p, p) == schouten_square_components(p), "schouten square");
  }
}

void calibration(Criterion& c) {
  for (const auto& name : fixture_names()) {
    std::ifstream in(kSource / "tests" / "golden" / (name + ".json"));
    std::stringstream golden;
    golden << in.rdbuf();
    const std::string rendered = render_json(run_checks(load_structure(kSource / "fixtures" / (name + ".json")), {}));
    c.expect(rendered == golden.str(), name + " golden differs");
    if (name != "FIX-A") continue;
    const auto j = nlohmann::json::parse(golden.str());
    const auto& computed = j.at("computed");
    c.expect(computed.at("fundamental_functions").at(0) == "2*x", "I_1");
    c.expect(computed.at("modular_vector_fields").at(0) == "(0, -1)", "X(1)");
    c.expect(computed.at("modular_vector_fields").at(1) == "(0, -x)", "X(2)");
    c.expect(computed.at("xi_N") == "(2, 0)", "xi_N");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"trace identity on fixtures and 20 generated pairs", trace_identity},
      {"corollary and operator identity on compatible pairs", corollary_and_operator},
      {"equivalent compatibility conditions agree", condition_equivalence},
      {"algebroid modular form equals d Tr N", algebroid_modular_form},
      {"Poisson-Nijenhuis hierarchy on FIX-A and FIX-B", hierarchy},
      {"class representatives on compatible fixtures", class_representatives},
      {"FIX-C negative control", negative_control},
      {"oracle equivalences", oracles},
      {"FIX-A calibration values in golden reports", calibration},
  };
  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_ok = all_ok && c.ok();
    std::cout << "criterion " << i + 1 << ": " << (c.ok() ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << c.summary() << ", " << std::fixed;
    std::cout.precision(2);
    std::cout << seconds << " s)\n";
  }
  return all_ok ? 0 : 1;
}
