#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "pnc/engine.hpp"
#include "pnc/version.hpp"

namespace pnc {

/// Reproducible record of one analysis: the verdict fields are a pure
/// function of (spec, engine version); timings and cache provenance are
/// informational only.
struct AnalysisRecord {
  std::string spec;
  std::string engine_version = kEngineVersion;
  PncVerdict verdict;
  std::optional<std::uint64_t> table_digest;
  std::map<std::string, double> timings_ms;
  std::string table_source; // "computed", "cache" or "none"
};

nlohmann::json verdict_to_json(const std::string& spec, const PncVerdict& v,
                               std::optional<std::uint64_t> table_digest = std::nullopt);
std::string render_verdict_text(const std::string& spec, const PncVerdict& v);

nlohmann::json table_to_json(const std::string& spec, const CharacterTable& t);
std::string render_table_text(const std::string& spec, const CharacterTable& t);

/// JSON schema for verdict documents (also shipped in the repository under
/// schemas/analysis.schema.json).
const nlohmann::json& analysis_schema();
/// Structural validation against the subset of JSON Schema used by
/// analysis_schema(): required keys, primitive types, enums, array items.
bool validate_against_schema(const nlohmann::json& doc, const nlohmann::json& schema,
                             std::string* error = nullptr);

/// Table cache: one line-oriented text file per (spec, engine version).
/// A trailing checksum line turns any corruption into a cache miss.
std::string table_cache_path(const std::string& dir, const std::string& spec);
void write_table_cache(const CharacterTable& t, const std::string& spec, const std::string& dir);
std::optional<CharacterTable> load_table_cache(const Group& g, const std::string& spec,
                                               const std::string& dir);

} // namespace pnc
