#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pncalc/structure.hpp"

namespace pncalc {

/// A curated structure with the suite-level statuses a full run must
/// reproduce ("pass", "fail" or "skipped" per suite name).
struct Fixture {
  std::string name;
  StructureDef structure;
  std::map<std::string, std::string> expected;
  std::string notes;
};

/// FIX-0, FIX-A, FIX-B, FIX-C; throws UnknownFixture otherwise.
Fixture load_fixture(std::string_view name);
std::vector<std::string> fixture_names();

enum class GeneratorKind { dim2_general, dim4_blockdiag };

/// Accepts "dim2-general" and "dim4-blockdiag"; throws ValidationError.
GeneratorKind parse_generator_kind(std::string_view text);
std::string to_string(GeneratorKind kind);

/// Random compatible pair, validated with is_compatible, is_poisson and
/// is_nijenhuis before being returned (GenerationFailed otherwise).
StructureDef random_compatible(std::uint64_t seed, GeneratorKind kind);

/// Canonical P on four coordinates with N = f Id for a random non-constant
/// f: admissible, Poisson, Nijenhuis and not compatible.
StructureDef random_admissible_incompatible(std::uint64_t seed);

}  // namespace pncalc
