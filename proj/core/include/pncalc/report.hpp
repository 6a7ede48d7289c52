#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pncalc/structure.hpp"

namespace pncalc {

enum class Suite { structure, compat, eq1, eq2, op, modular, classes };

/// All suites in dependency order.
const std::vector<Suite>& all_suites();
std::string to_string(Suite suite);
/// A suite name or "all"; throws ValidationError otherwise.
std::vector<Suite> parse_suites(std::string_view text);

struct RunOptions {
  std::vector<Suite> suites = all_suites();
  std::optional<unsigned> kmax;  // overrides the structure's kmax
  std::size_t trials = 8;
  std::uint64_t seed = 0;
  bool unchecked_hypotheses = false;
  bool timing = false;  // include elapsed times in reports
};

enum class Status { pass, fail, skipped };
std::string to_string(Status status);

struct CheckRecord {
  std::string name;
  Suite suite;
  Status status = Status::pass;
  std::optional<Witness> witness;
  /// Unmet precondition for skipped checks, or an error message.
  std::string reason;
  /// Ran although one of its hypotheses is known to fail.
  bool unverified = false;
  double elapsed_ms = 0;
};

struct ComputedValues {
  std::vector<std::string> trace_powers;           // Tr N^k
  std::vector<std::string> fundamental_functions;  // I_k
  std::vector<std::string> modular_vector_fields;  // X^(k)
  std::optional<std::string> xi_n;
};

struct CheckReport {
  std::string structure_name;
  std::string structure_hash;
  std::vector<std::string> coords;
  RunOptions options;
  unsigned kmax = 3;
  std::vector<CheckRecord> checks;
  ComputedValues computed;

  std::size_t count(Status s) const;
  /// fail if any check failed, skipped if every check was skipped, else pass.
  Status suite_status(Suite suite) const;
  bool passed() const { return count(Status::fail) == 0; }
  bool unverified() const;
  int exit_code() const { return passed() ? 0 : 1; }
};

/// Runs the selected suites in dependency order. Deterministic for fixed
/// (structure, options) apart from elapsed times.
CheckReport run_checks(const StructureDef& def, const RunOptions& options);

std::string render_text(const CheckReport& report);
/// Pretty JSON with a trailing newline; elapsed times only with timing on.
std::string render_json(const CheckReport& report);

}  // namespace pncalc
