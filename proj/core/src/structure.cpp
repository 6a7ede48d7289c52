#include "pncalc/structure.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pncalc/error.hpp"
#include "pncalc/parser.hpp"
#include "toml.hpp"

namespace pncalc {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::size_t positive_index(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw ValidationError(where + " must be a positive integer");
  return static_cast<std::size_t>(v.get<long long>());
}

std::vector<ComponentEntry> entries_from(const json& v, const std::string& field) {
  std::vector<ComponentEntry> out;
  if (v.is_null()) return out;
  if (!v.is_array()) throw ValidationError("'" + field + "' must be an array of {i, j, expr} entries");
  for (std::size_t e = 0; e < v.size(); ++e) {
    const json& item = v[e];
    const std::string where = field + "[" + std::to_string(e) + "]";
    if (!item.is_object()) throw ValidationError(where + " must be an object");
    for (const auto& [k, _] : item.items())
      if (k != "i" && k != "j" && k != "expr") throw ValidationError(where + " has unknown key '" + k + "'");
    if (!item.contains("i") || !item.contains("j") || !item.contains("expr"))
      throw ValidationError(where + " needs keys i, j and expr");
    if (!item["expr"].is_string()) throw ValidationError(where + ".expr must be a string");
    out.push_back({positive_index(item["i"], where + ".i"), positive_index(item["j"], where + ".j"),
                   item["expr"].get<std::string>()});
  }
  return out;
}

StructureDef from_json_value(const json& root) {
  if (!root.is_object()) throw ValidationError("structure definition must be an object");
  static const std::set<std::string> known = {"name", "dim", "coords", "P", "N", "volume", "kmax"};
  for (const auto& [k, _] : root.items())
    if (!known.count(k)) throw ValidationError("unknown key '" + k + "'");

  StructureDef def;
  if (root.contains("name")) {
    if (!root["name"].is_string()) throw ValidationError("'name' must be a string");
    def.name = root["name"].get<std::string>();
  }
  if (!root.contains("coords") || !root["coords"].is_array())
    throw ValidationError("'coords' must be an array of names");
  for (const auto& c : root["coords"]) {
    if (!c.is_string()) throw ValidationError("'coords' entries must be strings");
    def.coords.push_back(c.get<std::string>());
  }
  if (!root.contains("dim")) throw ValidationError("missing 'dim'");
  if (positive_index(root["dim"], "'dim'") != def.coords.size())
    throw ValidationError("'dim' does not match the number of coordinates");
  def.p = entries_from(root.value("P", json()), "P");
  def.n = entries_from(root.value("N", json()), "N");
  if (root.contains("volume")) {
    if (!root["volume"].is_string()) throw ValidationError("'volume' must be a string expression");
    def.volume = root["volume"].get<std::string>();
  }
  if (root.contains("kmax")) {
    const std::size_t k = positive_index(root["kmax"], "'kmax'");
    def.kmax = static_cast<unsigned>(k);
  }
  validate(def);
  return def;
}

RatFunc parse_field(const std::string& expr, const Chart& chart, const std::string& where) {
  try {
    return parse_expr(expr, chart);
  } catch (const Error& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

std::string toml_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

StructureDef parse_structure(std::string_view text, FileFormat format) {
  json root;
  if (format == FileFormat::json) {
    try {
      root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
      const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
      std::string what = e.what();
      // Keep only the reason; the position is reported by ParseError itself.
      if (const auto pos = what.find(": "); pos != std::string::npos) what = what.substr(pos + 2);
      throw ParseError(line, col, what);
    }
  } else {
    root = detail::parse_toml(text);
  }
  return from_json_value(root);
}

StructureDef load_structure(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound(path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const FileFormat format = path.extension() == ".toml" ? FileFormat::toml : FileFormat::json;
  StructureDef def = parse_structure(buf.str(), format);
  if (def.name.empty()) def.name = path.stem().string();
  return def;
}

void validate(const StructureDef& def) {
  const Chart chart(def.coords);
  const std::size_t n = chart.dim();
  if (def.kmax < 1) throw ValidationError("'kmax' must be at least 1");
  auto check = [&](const std::vector<ComponentEntry>& entries, const char* field, bool upper) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : entries) {
      const std::string where = std::string(field) + "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
      if (e.i < 1 || e.i > n || e.j < 1 || e.j > n) throw ValidationError(where + ": index out of range");
      if (upper && e.i >= e.j) throw ValidationError(where + ": entries of P need i < j");
      if (!seen.insert({e.i, e.j}).second) throw ValidationError(where + ": duplicate entry");
      parse_field(e.expr, chart, where);
    }
  };
  check(def.p, "P", true);
  check(def.n, "N", false);
  if (parse_field(def.volume, chart, "volume").is_zero()) throw ValidationError("volume density is zero");
}

Structure materialize(const StructureDef& def) {
  validate(def);
  Chart chart(def.coords);
  Multivector p(chart, 2);
  for (const auto& e : def.p) p.set({e.i - 1, e.j - 1}, parse_expr(e.expr, chart));
  EndoField n(chart);
  for (const auto& e : def.n) n.set(e.i - 1, e.j - 1, parse_expr(e.expr, chart));
  VolumeDensity mu{parse_expr(def.volume, chart)};
  return Structure{def.name, chart, std::move(p), std::move(n), std::move(mu), def.kmax};
}

StructureDef describe(const std::string& name, const Multivector& p, const EndoField& n, const VolumeDensity& mu,
                      unsigned kmax) {
  require_same_chart(p.chart(), n.chart());
  const Chart& chart = p.chart();
  StructureDef def;
  def.name = name;
  def.coords = chart.names();
  for (const auto& [idx, v] : p.components()) def.p.push_back({idx[0] + 1, idx[1] + 1, v.to_string(chart)});
  for (std::size_t i = 0; i < n.dim(); ++i)
    for (std::size_t j = 0; j < n.dim(); ++j)
      if (!n.at(i, j).is_zero()) def.n.push_back({i + 1, j + 1, n.at(i, j).to_string(chart)});
  def.volume = mu.rho.to_string(chart);
  def.kmax = kmax;
  return def;
}

std::string to_json(const StructureDef& def) {
  // nlohmann sorts object keys; emit in schema order by hand instead.
  std::string out = "{\n";
  if (!def.name.empty()) out += "  \"name\": " + json(def.name).dump() + ",\n";
  out += "  \"dim\": " + std::to_string(def.dim()) + ",\n";
  out += "  \"coords\": " + json(def.coords).dump() + ",\n";
  auto emit_entries = [&out](const char* key, const std::vector<ComponentEntry>& entries) {
    out += std::string("  \"") + key + "\": [";
    for (std::size_t e = 0; e < entries.size(); ++e) {
      out += e ? ",\n    " : "\n    ";
      out += nlohmann::ordered_json{{"i", entries[e].i}, {"j", entries[e].j}, {"expr", entries[e].expr}}.dump();
    }
    out += entries.empty() ? "],\n" : "\n  ],\n";
  };
  emit_entries("P", def.p);
  emit_entries("N", def.n);
  out += "  \"volume\": " + json(def.volume).dump() + ",\n";
  out += "  \"kmax\": " + std::to_string(def.kmax) + "\n}\n";
  return out;
}

std::string to_toml(const StructureDef& def) {
  std::string out;
  if (!def.name.empty()) out += "name = " + toml_string(def.name) + "\n";
  out += "dim = " + std::to_string(def.dim()) + "\ncoords = [";
  for (std::size_t i = 0; i < def.coords.size(); ++i) out += (i ? ", " : "") + toml_string(def.coords[i]);
  out += "]\nvolume = " + toml_string(def.volume) + "\nkmax = " + std::to_string(def.kmax) + "\n";
  auto emit = [&out](const char* key, const std::vector<ComponentEntry>& entries) {
    for (const auto& e : entries)
      out += std::string("\n[[") + key + "]]\ni = " + std::to_string(e.i) + "\nj = " + std::to_string(e.j) +
             "\nexpr = " + toml_string(e.expr) + "\n";
  };
  emit("P", def.p);
  emit("N", def.n);
  return out;
}

std::string structure_hash(const StructureDef& def) {
  const Structure s = materialize(def);
  const std::string canonical = to_json(describe("", s.p, s.n, s.mu, s.kmax));
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace pncalc
