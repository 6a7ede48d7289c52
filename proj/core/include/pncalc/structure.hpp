#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pncalc/modular.hpp"

namespace pncalc {

/// One component entry of a structure file; indices are 1-based.
struct ComponentEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::string expr;

  friend bool operator==(const ComponentEntry&, const ComponentEntry&) = default;
};

/// A structure-definition file in memory: a chart with P (upper-triangular
/// entries, antisymmetric completion implied), N (entries N^i_j), a volume
/// density and the hierarchy depth.
struct StructureDef {
  std::string name;
  std::vector<std::string> coords;
  std::vector<ComponentEntry> p;
  std::vector<ComponentEntry> n;
  std::string volume = "1";
  unsigned kmax = 3;

  std::size_t dim() const noexcept { return coords.size(); }
  friend bool operator==(const StructureDef&, const StructureDef&) = default;
};

/// The engine objects built from a StructureDef.
struct Structure {
  std::string name;
  Chart chart;
  Multivector p;
  EndoField n;
  VolumeDensity mu;
  unsigned kmax;
};

enum class FileFormat { json, toml };

/// Parses JSON or TOML text; throws ParseError for malformed text and
/// ValidationError for content that breaks the schema.
StructureDef parse_structure(std::string_view text, FileFormat format);

/// Reads a file, choosing the format from the extension (".toml" is TOML,
/// anything else is JSON). Throws FileNotFound, ParseError, ValidationError.
StructureDef load_structure(const std::filesystem::path& path);

/// Checks the schema invariants: index ranges, i < j for P, no duplicate
/// entries, parsable expressions, kmax >= 1. Throws ValidationError.
void validate(const StructureDef& def);

/// Builds the tensor fields. Validates first.
Structure materialize(const StructureDef& def);

/// Inverse of materialize: canonical expression strings, sorted entries.
StructureDef describe(const std::string& name, const Multivector& p, const EndoField& n,
                      const VolumeDensity& mu, unsigned kmax);

/// Canonical JSON text (two-space indentation, trailing newline).
std::string to_json(const StructureDef& def);
std::string to_toml(const StructureDef& def);

/// FNV-1a 64 hash of the canonical JSON of the materialized structure,
/// rendered as 16 hex digits. Equivalent spellings hash equally.
std::string structure_hash(const StructureDef& def);

}  // namespace pncalc
