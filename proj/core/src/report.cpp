#include "pncalc/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include <nlohmann/json.hpp>

#include "pncalc/error.hpp"
#include "pncalc/random.hpp"

namespace pncalc {

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites = {Suite::structure, Suite::compat,  Suite::eq1,    Suite::eq2,
                                            Suite::op,        Suite::modular, Suite::classes};
  return suites;
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::structure: return "structure";
    case Suite::compat: return "compat";
    case Suite::eq1: return "eq1";
    case Suite::eq2: return "eq2";
    case Suite::op: return "operator";
    case Suite::modular: return "modular";
    case Suite::classes: return "classes";
  }
  return "?";
}

std::vector<Suite> parse_suites(std::string_view text) {
  if (text == "all") return all_suites();
  for (Suite s : all_suites())
    if (to_string(s) == text) return {s};
  throw ValidationError("unknown suite '" + std::string(text) + "'");
}

std::string to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

std::size_t CheckReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& r) { return r.status == s; }));
}

Status CheckReport::suite_status(Suite suite) const {
  bool any_pass = false;
  for (const auto& r : checks) {
    if (r.suite != suite) continue;
    if (r.status == Status::fail) return Status::fail;
    any_pass = any_pass || r.status == Status::pass;
  }
  return any_pass ? Status::pass : Status::skipped;
}

bool CheckReport::unverified() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.unverified; });
}

namespace {

DiffForm d_of(const Chart& chart, const RatFunc& f) { return ext_d(DiffForm::scalar(chart, f)); }

/// Collects the first failure over a list of named outcomes.
CheckOutcome merge(const std::vector<NamedOutcome>& outcomes) {
  CheckOutcome out;
  for (const auto& o : outcomes)
    if (!o.outcome.holds) out.absorb(with_context(o.outcome.witness, o.name));
  return out;
}

class Runner {
 public:
  Runner(const StructureDef& def, const RunOptions& options)
      : s_(materialize(def)), opts_(options), kmax_(options.kmax.value_or(def.kmax)) {
    if (kmax_ < 1) throw ValidationError("kmax must be at least 1");
    report_.structure_name = def.name;
    report_.structure_hash = structure_hash(def);
    report_.coords = def.coords;
    report_.options = options;
    report_.kmax = kmax_;
    // Structure predicates gate most suites, so they are always evaluated.
    poisson_ = is_poisson(s_.p);
    torsion_ = nijenhuis_torsion(s_.n);
    nijenhuis_ = torsion_->is_zero();
    admissible_ = is_admissible(s_.p, s_.n);
    concomitant_ = concomitant_coord(s_.p, s_.n);
    compatible_ = admissible_ && concomitant_->is_zero();
    const RatFunc c1 = RatFunc::variable(0);
    mu2_ = VolumeDensity{s_.mu.rho * (RatFunc(1L) + c1 * c1)};
  }

  CheckReport run() {
    for (Suite suite : all_suites()) {
      if (std::find(opts_.suites.begin(), opts_.suites.end(), suite) == opts_.suites.end()) continue;
      switch (suite) {
        case Suite::structure: structure_suite(); break;
        case Suite::compat: compat_suite(); break;
        case Suite::eq1: eq1_suite(); break;
        case Suite::eq2: eq2_suite(); break;
        case Suite::op: operator_suite(); break;
        case Suite::modular: modular_suite(); break;
        case Suite::classes: classes_suite(); break;
      }
    }
    compute_values();
    return std::move(report_);
  }

 private:
  using Hyps = std::vector<std::pair<bool, const char*>>;

  // Admissibility is structural (NP must be a bivector) and never lifted;
  // the remaining hypotheses are lifted by unchecked mode.
  void check(const std::string& name, Suite suite, const Hyps& hyps, const std::function<CheckOutcome()>& body,
             bool needs_admissible = true) {
    CheckRecord rec;
    rec.name = to_string(suite) + "." + name;
    rec.suite = suite;
    if (needs_admissible && !admissible_) {
      rec.status = Status::skipped;
      rec.reason = "is_admissible";
      report_.checks.push_back(std::move(rec));
      return;
    }
    for (const auto& [ok, predicate] : hyps) {
      if (ok) continue;
      if (!opts_.unchecked_hypotheses) {
        rec.status = Status::skipped;
        rec.reason = predicate;
        report_.checks.push_back(std::move(rec));
        return;
      }
      rec.unverified = true;
      if (rec.reason.empty()) rec.reason = std::string("unverified hypothesis ") + predicate;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
      const CheckOutcome outcome = body();
      rec.status = outcome.holds ? Status::pass : Status::fail;
      rec.witness = outcome.witness;
    } catch (const PreconditionFailed& e) {
      rec.status = Status::skipped;
      rec.reason = e.predicate();
    } catch (const Error& e) {
      rec.status = Status::fail;
      rec.reason = e.what();
    }
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(rec));
  }

  static CheckOutcome outcome_of(std::optional<Witness> w) {
    CheckOutcome out;
    out.absorb(std::move(w));
    return out;
  }

  Rng rng_for(const char* label, std::size_t trial) const { return Rng(derive_seed(opts_.seed, label, trial)); }

  RatFunc random_function(Rng& rng) const { return RatFunc(random_nonzero_polynomial(rng, s_.chart.dim(), 2)); }

  Hyps compat_hyps() const { return {{compatible_, "is_compatible"}}; }

  void structure_suite() {
    const Hyps none;
    check("poisson", Suite::structure, none, [&] { return outcome_of(first_nonzero(schouten(s_.p, s_.p))); }, false);
    check("nijenhuis", Suite::structure, none, [&] { return outcome_of(first_nonzero(*torsion_)); }, false);
    check("admissible", Suite::structure, none, [&] {
      CheckOutcome out;
      if (!admissible_) {
        // Witness: first component of NP + (NP)^T.
        const ContraTensor2 np = endo_bivector(s_.n, s_.p);
        for (std::size_t i = 0; i < np.dim() && out.holds; ++i)
          for (std::size_t j = i; j < np.dim() && out.holds; ++j) {
            const RatFunc sym = np.at(i, j) + np.at(j, i);
            if (!sym.is_zero()) out.absorb(Witness{{i + 1, j + 1}, sym.to_string(s_.chart), "NP + (NP)^T"});
          }
      }
      return out;
    }, false);
  }

  void compat_suite() {
    const Hyps none;
    check("concomitant", Suite::compat, none, [&] { return outcome_of(concomitant_->first_nonzero()); });
    check("dN_derivation", Suite::compat, none,
          [&] { return cond_dN_derivation(s_.p, s_.n, opts_.trials, opts_.seed); });
    check("dP_derivation", Suite::compat, none,
          [&] { return cond_dP_derivation(s_.p, s_.n, opts_.trials, opts_.seed); });
    check("function_form", Suite::compat, none,
          [&] { return cond_function_form(s_.p, s_.n, opts_.trials, opts_.seed); });
  }

  void eq1_suite() {
    check("trace_identity", Suite::eq1, {{poisson_, "is_poisson"}, {nijenhuis_, "is_nijenhuis"}}, [&] {
      CheckOutcome out;
      for (std::size_t t = 0; t < opts_.trials && out.holds; ++t) {
        Rng rng = rng_for("eq1", t);
        const DiffForm alpha = random_form(rng, s_.chart, 1, 2);
        out.absorb(with_context(first_nonzero(trace_identity_check(s_.p, s_.n, alpha, Hypotheses::assume), s_.chart),
                                "alpha = " + alpha.to_string()));
      }
      return out;
    });
  }

  void eq2_suite() {
    check("corollary", Suite::eq2, compat_hyps(), [&] {
      CheckOutcome out;
      for (std::size_t t = 0; t < opts_.trials && out.holds; ++t) {
        Rng rng = rng_for("eq2", t);
        const RatFunc f = random_function(rng);
        out.absorb(with_context(first_nonzero(corollary_check(s_.p, s_.n, f, Hypotheses::assume), s_.chart),
                                "f = " + f.to_string(s_.chart)));
      }
      return out;
    });
  }

  void operator_suite() {
    for (std::size_t k = 0; k <= s_.chart.dim(); ++k) {
      check("degree_" + std::to_string(k), Suite::op, compat_hyps(), [&, k] {
        CheckOutcome out;
        for (std::size_t t = 0; t < opts_.trials && out.holds; ++t) {
          Rng rng = rng_for("operator", k * 1000 + t);
          const DiffForm omega = random_form(rng, s_.chart, static_cast<int>(k), 2);
          out.absorb(with_context(first_nonzero(bm_operator_check(s_.p, s_.n, omega, Hypotheses::assume)),
                                  "omega = " + omega.to_string()));
        }
        return out;
      });
    }
  }

  void modular_suite() {
    const Hyps none;
    check("defining_property", Suite::modular, none, [&] {
      const auto ps = bivector_hierarchy(s_.p, s_.n, kmax_);
      CheckOutcome out;
      for (unsigned k = 0; k <= kmax_ && out.holds; ++k)
        for (std::size_t t = 0; t < opts_.trials && out.holds; ++t) {
          Rng rng = rng_for("modular.defining", k * 1000 + t);
          const RatFunc f = random_function(rng);
          out.absorb(with_context(first_nonzero(modular_defining_residual(ps[k], s_.mu, f), s_.chart),
                                  "P" + std::to_string(k) + ", f = " + f.to_string(s_.chart)));
        }
      return out;
    });
    check("form_identity", Suite::modular, none, [&] {
      const auto ps = bivector_hierarchy(s_.p, s_.n, kmax_);
      CheckOutcome out;
      for (unsigned k = 0; k <= kmax_ && out.holds; ++k)
        for (std::size_t t = 0; t < opts_.trials && out.holds; ++t) {
          Rng rng = rng_for("modular.form", k * 1000 + t);
          const DiffForm alpha = random_form(rng, s_.chart, 1, 2);
          out.absorb(with_context(first_nonzero(modular_form_identity_check(ps[k], s_.mu, alpha), s_.chart),
                                  "P" + std::to_string(k) + ", alpha = " + alpha.to_string()));
        }
      return out;
    });
    check("hierarchy", Suite::modular, compat_hyps(),
          [&] { return merge(hierarchy_consistency(s_.p, s_.n, kmax_, Hypotheses::assume)); });
    check("mu_independence", Suite::modular, compat_hyps(), [&] {
      CheckOutcome out;
      for (unsigned k = 1; k <= kmax_; ++k)
        out.absorb(with_context(
            first_nonzero(mu_independence_check(s_.p, s_.n, k, s_.mu, mu2_, Hypotheses::assume)),
            "k=" + std::to_string(k) + ", second density " + mu2_.rho.to_string(s_.chart)));
      return out;
    });
    check("relation", Suite::modular, compat_hyps(), [&] {
      CheckOutcome out;
      for (unsigned k = 1; k <= kmax_; ++k)
        out.absorb(with_context(first_nonzero(relation_check(s_.p, s_.n, k, s_.mu, Hypotheses::assume)),
                                "k=" + std::to_string(k)));
      return out;
    });
    check("recursion", Suite::modular, compat_hyps(),
          [&] { return merge(recursion_checks(s_.p, s_.n, kmax_, s_.mu, Hypotheses::assume)); });
    check("cocycle", Suite::modular, compat_hyps(), [&] {
      CheckOutcome out;
      for (unsigned k = 1; k <= kmax_; ++k)
        out.absorb(with_context(first_nonzero(cocycle_check(s_.p, s_.n, k, s_.mu, Hypotheses::assume)),
                                "k=" + std::to_string(k)));
      return out;
    });
    check("xi_N", Suite::modular, {{nijenhuis_, "is_nijenhuis"}}, [&] {
      const DiffForm xi = xi_N_via_definition(s_.n, s_.mu, Hypotheses::assume);
      CheckOutcome out;
      out.absorb(with_context(first_nonzero(xi - d_of(s_.chart, endo_trace(s_.n))), "xi - d Tr N"));
      out.absorb(with_context(first_nonzero(xi - xi_N_via_definition(s_.n, mu2_, Hypotheses::assume)),
                              "density " + mu2_.rho.to_string(s_.chart)));
      return out;
    }, false);
  }

  void classes_suite() {
    std::optional<std::vector<NamedOutcome>> outcomes;
    auto group = [&](char letter) {
      return [&, letter] {
        if (!outcomes) outcomes = class_representative_checks(s_.p, s_.n, kmax_, s_.mu, Hypotheses::assume);
        std::vector<NamedOutcome> picked;
        for (const auto& o : *outcomes)
          if (o.name[0] == letter) picked.push_back(o);
        return merge(picked);
      };
    };
    check("a_np_relation", Suite::classes, compat_hyps(), group('a'));
    check("b_trace_vector", Suite::classes, compat_hyps(), group('b'));
    check("c_trace_forms", Suite::classes, compat_hyps(), group('c'));
    check("d_relative_class", Suite::classes, compat_hyps(), group('d'));
    check("e_telescoping", Suite::classes, compat_hyps(), group('e'));
  }

  void compute_values() {
    ComputedValues& c = report_.computed;
    EndoField power = EndoField::identity(s_.chart);
    for (unsigned k = 1; k <= kmax_; ++k) {
      power = endo_compose(s_.n, power);
      const RatFunc tr = endo_trace(power);
      c.trace_powers.push_back(tr.to_string(s_.chart));
      c.fundamental_functions.push_back((tr / RatFunc(static_cast<long>(k))).to_string(s_.chart));
    }
    const bool lifted = opts_.unchecked_hypotheses;
    if (admissible_ && (compatible_ || lifted)) {
      const Hierarchy h = build_hierarchy(s_.p, s_.n, kmax_, s_.mu, Hypotheses::assume);
      for (const auto& x : h.modular_vfs) c.modular_vector_fields.push_back(x.to_string());
    }
    if (nijenhuis_ || lifted) c.xi_n = xi_N_via_definition(s_.n, s_.mu, Hypotheses::assume).to_string();
  }

  Structure s_;
  RunOptions opts_;
  unsigned kmax_;
  CheckReport report_;
  bool poisson_ = false;
  bool nijenhuis_ = false;
  bool admissible_ = false;
  bool compatible_ = false;
  std::optional<Torsion> torsion_;
  std::optional<Concomitant> concomitant_;
  VolumeDensity mu2_;
};

}  // namespace

CheckReport run_checks(const StructureDef& def, const RunOptions& options) { return Runner(def, options).run(); }

std::string render_text(const CheckReport& r) {
  std::string out;
  out += "structure " + r.structure_name + "  hash " + r.structure_hash + "  coords (";
  for (std::size_t i = 0; i < r.coords.size(); ++i) out += (i ? ", " : "") + r.coords[i];
  out += ")\n";
  out += "kmax " + std::to_string(r.kmax) + "  trials " + std::to_string(r.options.trials) + "  seed " +
         std::to_string(r.options.seed) + (r.options.unchecked_hypotheses ? "  unchecked hypotheses" : "") + "\n\n";
  for (const auto& c : r.checks) {
    std::string tag = c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "SKIP";
    out += tag + "  " + c.name;
    if (c.status == Status::skipped) out += "  (requires " + c.reason + ")";
    if (c.witness) {
      out += "  at " + index_string(c.witness->index) + ": " + c.witness->expression;
      if (!c.witness->context.empty()) out += "  [" + c.witness->context + "]";
    }
    if (c.status == Status::fail && !c.reason.empty() && !c.witness) out += "  " + c.reason;
    if (c.unverified) out += "  (unverified hypotheses)";
    if (r.options.timing) out += "  " + std::to_string(static_cast<long long>(c.elapsed_ms)) + " ms";
    out += "\n";
  }
  out += "\ncomputed\n";
  for (std::size_t k = 0; k < r.computed.trace_powers.size(); ++k)
    out += "  Tr N^" + std::to_string(k + 1) + " = " + r.computed.trace_powers[k] + "    I_" +
           std::to_string(k + 1) + " = " + r.computed.fundamental_functions[k] + "\n";
  for (std::size_t k = 0; k < r.computed.modular_vector_fields.size(); ++k)
    out += "  X(" + std::to_string(k + 1) + ") = " + r.computed.modular_vector_fields[k] + "\n";
  if (r.computed.xi_n) out += "  xi_N = " + *r.computed.xi_n + "\n";
  out += "\n" + std::to_string(r.count(Status::pass)) + " passed, " + std::to_string(r.count(Status::fail)) +
         " failed, " + std::to_string(r.count(Status::skipped)) + " skipped: " + (r.passed() ? "PASS" : "FAIL") +
         (r.unverified() ? " (unverified hypotheses)" : "") + "\n";
  return out;
}

std::string render_json(const CheckReport& r) {
  using nlohmann::ordered_json;
  ordered_json root;
  root["structure"] = {{"name", r.structure_name}, {"hash", r.structure_hash}, {"dim", r.coords.size()},
                       {"coords", r.coords}};
  ordered_json suites = ordered_json::array();
  for (Suite s : r.options.suites) suites.push_back(to_string(s));
  root["settings"] = {{"suites", suites},
                      {"kmax", r.kmax},
                      {"trials", r.options.trials},
                      {"seed", r.options.seed},
                      {"unchecked_hypotheses", r.options.unchecked_hypotheses}};
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json rec;
    rec["name"] = c.name;
    rec["suite"] = to_string(c.suite);
    rec["status"] = to_string(c.status);
    if (c.witness) {
      rec["witness"] = {{"index", c.witness->index}, {"expression", c.witness->expression}};
      if (!c.witness->context.empty()) rec["witness"]["context"] = c.witness->context;
    } else {
      rec["witness"] = nullptr;
    }
    if (!c.reason.empty()) rec["reason"] = c.reason;
    if (c.unverified) rec["unverified"] = true;
    if (r.options.timing) rec["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(std::move(rec));
  }
  root["checks"] = std::move(checks);
  ordered_json computed;
  computed["trace_powers"] = r.computed.trace_powers;
  computed["fundamental_functions"] = r.computed.fundamental_functions;
  computed["modular_vector_fields"] = r.computed.modular_vector_fields;
  computed["xi_N"] = r.computed.xi_n ? ordered_json(*r.computed.xi_n) : ordered_json(nullptr);
  root["computed"] = std::move(computed);
  ordered_json by_suite;
  for (Suite s : r.options.suites) by_suite[to_string(s)] = to_string(r.suite_status(s));
  root["summary"] = {{"pass", r.count(Status::pass)},
                     {"fail", r.count(Status::fail)},
                     {"skipped", r.count(Status::skipped)},
                     {"suites", by_suite},
                     {"status", r.passed() ? "pass" : "fail"},
                     {"unverified_hypotheses", r.unverified()}};
  return root.dump(2) + "\n";
}

}  // namespace pncalc
