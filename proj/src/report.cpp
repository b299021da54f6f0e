#include "pnc/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace pnc {

namespace {

using nlohmann::json;

json subgroup_to_json(const Group& g) {
  json j;
  j["order"] = g.order();
  json gens = json::array();
  for (const Perm& s : g.generators()) gens.push_back(s.cycle_string());
  j["generators"] = gens;
  return j;
}

json obstruction_to_json(const ObstructionReport& o) {
  json j;
  j["kind"] = to_string(o.kind);
  j["subgroup"] = subgroup_to_json(o.subgroup);
  j["detail"] = o.describe();
  json tr = json::array();
  switch (o.kind) {
    case ObstructionKind::Exhaustive:
      for (const auto& e : o.exhaustive) {
        json row;
        row["irreducible"] = e.irreducible;
        row["failing_coset"] = e.failing_coset_rep.cycle_string();
        row["coset_sum"] = e.coset_sum.encode();
        tr.push_back(row);
      }
      break;
    case ObstructionKind::DihedralLemma:
      for (const auto& e : o.dihedral) {
        json row;
        row["irreducible"] = e.irreducible;
        row["zero_on_reflections"] = e.zero_on_reflections;
        row["rotation_sum_zero"] = e.rotation_sum_zero;
        tr.push_back(row);
      }
      break;
    case ObstructionKind::D4Conjugacy: {
      json row;
      row["central"] = o.central.cycle_string();
      row["fused_reflection"] = o.fused.cycle_string();
      row["conjugator"] = o.conjugator.cycle_string();
      tr.push_back(row);
      break;
    }
  }
  j["transcript"] = tr;
  return j;
}

std::uint64_t fnv64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

} // namespace

nlohmann::json verdict_to_json(const std::string& spec, const PncVerdict& v,
                               std::optional<std::uint64_t> table_digest) {
  json j;
  j["spec"] = spec;
  j["status"] = to_string(v.status);
  json wits = json::array();
  for (std::size_t i = 0; i < v.minimal_subgroups.size(); ++i) {
    json w;
    w["subgroup"] = subgroup_to_json(v.minimal_subgroups[i]);
    w["irreducibles"] = v.witnesses[i];
    wits.push_back(w);
  }
  j["witnesses"] = wits;
  json obs = json::array();
  for (const auto& o : v.obstructions) obs.push_back(obstruction_to_json(o));
  j["obstructions"] = obs;
  j["notes"] = v.notes;
  if (v.common_witness) j["common_witness"] = *v.common_witness;
  if (table_digest) j["table_digest"] = hex64(*table_digest);
  return j;
}

std::string render_verdict_text(const std::string& spec, const PncVerdict& v) {
  std::ostringstream os;
  os << "spec:   " << spec << "\n";
  os << "status: " << to_string(v.status) << "\n";
  if (v.common_witness)
    os << "common witness irreducible: #" << *v.common_witness << "\n";
  if (!v.minimal_subgroups.empty()) {
    os << "minimal nonabelian subgroups: " << v.minimal_subgroups.size() << "\n";
    for (std::size_t i = 0; i < v.minimal_subgroups.size(); ++i) {
      const Group& h = v.minimal_subgroups[i];
      os << "  #" << i << " order " << h.order() << ", generated by";
      for (const Perm& s : h.generators()) os << " " << s.cycle_string();
      os << "; PNC irreducibles:";
      if (v.witnesses[i].empty()) os << " none";
      for (int w : v.witnesses[i]) os << " #" << w;
      os << "\n";
    }
  }
  for (const auto& o : v.obstructions) os << "obstruction: " << o.describe() << "\n";
  for (const auto& n : v.notes) os << "note: " << n << "\n";
  return os.str();
}

nlohmann::json table_to_json(const std::string& spec, const CharacterTable& t) {
  json j;
  j["spec"] = spec;
  j["order"] = t.group.order();
  j["exponent"] = t.group.exponent();
  json classes = json::array();
  for (const auto& c : t.group.classes()) {
    json cj;
    cj["representative"] = c.representative.cycle_string();
    cj["size"] = c.size();
    classes.push_back(cj);
  }
  j["classes"] = classes;
  json irr = json::array();
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
    json row;
    row["degree"] = t.degrees[i];
    json vals = json::array();
    for (const auto& v : t.irreducibles[i].values()) vals.push_back(v.encode());
    row["values"] = vals;
    irr.push_back(row);
  }
  j["irreducibles"] = irr;
  j["digest"] = hex64(table_digest(t));
  return j;
}

std::string render_table_text(const std::string& spec, const CharacterTable& t) {
  std::ostringstream os;
  os << "character table of " << spec << "  (order " << t.group.order() << ", exponent "
     << t.group.exponent() << ", " << t.group.classes().size() << " classes)\n";
  os << "classes:";
  for (const auto& c : t.group.classes())
    os << "  " << c.representative.cycle_string() << " [" << c.size() << "]";
  os << "\n";
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
    os << "X" << i << " (deg " << t.degrees[i] << "):";
    for (const auto& v : t.irreducibles[i].values()) os << "  " << v.pretty();
    os << "\n";
  }
  return os.str();
}

const nlohmann::json& analysis_schema() {
  static const json schema = json::parse(R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "pnc analysis document",
  "type": "object",
  "required": ["spec", "status", "witnesses", "obstructions", "notes"],
  "properties": {
    "spec": { "type": "string" },
    "status": { "type": "string", "enum": ["PNC", "SPNC", "NOT_PNC", "UNDECIDED"] },
    "witnesses": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["subgroup", "irreducibles"],
        "properties": {
          "subgroup": {
            "type": "object",
            "required": ["order", "generators"],
            "properties": {
              "order": { "type": "integer" },
              "generators": { "type": "array", "items": { "type": "string" } }
            }
          },
          "irreducibles": { "type": "array", "items": { "type": "integer" } }
        }
      }
    },
    "obstructions": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["kind", "subgroup", "detail", "transcript"],
        "properties": {
          "kind": { "type": "string", "enum": ["EXHAUSTIVE", "DIHEDRAL_LEMMA", "D4_CONJUGACY"] },
          "subgroup": { "type": "object" },
          "detail": { "type": "string" },
          "transcript": { "type": "array" }
        }
      }
    },
    "notes": { "type": "array", "items": { "type": "string" } },
    "common_witness": { "type": "integer" },
    "table_digest": { "type": "string" },
    "pair": { "type": "array", "items": { "type": "string" } }
  }
})");
  return schema;
}

bool validate_against_schema(const nlohmann::json& doc, const nlohmann::json& schema,
                             std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg;
    return false;
  };
  std::string type = schema.value("type", "");
  if (type == "object") {
    if (!doc.is_object()) return fail("expected object");
    if (schema.contains("required"))
      for (const auto& k : schema["required"])
        if (!doc.contains(k.get<std::string>()))
          return fail("missing required key '" + k.get<std::string>() + "'");
    if (schema.contains("properties"))
      for (auto& [key, sub] : schema["properties"].items())
        if (doc.contains(key)) {
          std::string suberr;
          if (!validate_against_schema(doc[key], sub, &suberr))
            return fail("key '" + key + "': " + suberr);
        }
    return true;
  }
  if (type == "array") {
    if (!doc.is_array()) return fail("expected array");
    if (schema.contains("items"))
      for (const auto& item : doc) {
        std::string suberr;
        if (!validate_against_schema(item, schema["items"], &suberr))
          return fail("array item: " + suberr);
      }
    return true;
  }
  if (type == "string") {
    if (!doc.is_string()) return fail("expected string");
    if (schema.contains("enum")) {
      for (const auto& v : schema["enum"])
        if (v == doc) return true;
      return fail("value not in enum");
    }
    return true;
  }
  if (type == "integer") {
    if (!doc.is_number_integer()) return fail("expected integer");
    return true;
  }
  if (type == "boolean") {
    if (!doc.is_boolean()) return fail("expected boolean");
    return true;
  }
  return true; // untyped: accept
}

std::string table_cache_path(const std::string& dir, const std::string& spec) {
  std::uint64_t key = fnv64(spec + "|" + kEngineVersion);
  return (std::filesystem::path(dir) / (hex64(key) + ".tbl")).string();
}

void write_table_cache(const CharacterTable& t, const std::string& spec, const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::ostringstream body;
  body << "pnc-table v1\n";
  body << "spec " << spec << "\n";
  body << "engine " << kEngineVersion << "\n";
  body << "order " << t.group.order() << "\n";
  body << "exponent " << t.group.exponent() << "\n";
  body << "classes " << t.group.classes().size() << "\n";
  for (const auto& c : t.group.classes())
    body << "class " << c.representative.cycle_string() << " " << c.size() << "\n";
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
    body << "irr " << t.degrees[i] << "\n";
    for (const auto& v : t.irreducibles[i].values()) body << "val " << v.encode() << "\n";
  }
  std::string text = body.str();
  std::ofstream out(table_cache_path(dir, spec), std::ios::trunc);
  out << text << "digest " << hex64(fnv64(text)) << "\nend\n";
}

std::optional<CharacterTable> load_table_cache(const Group& g, const std::string& spec,
                                               const std::string& dir) {
  std::ifstream in(table_cache_path(dir, spec));
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  // split off the digest line and verify
  auto dpos = text.rfind("digest ");
  if (dpos == std::string::npos) return std::nullopt;
  std::string body = text.substr(0, dpos);
  std::istringstream tail(text.substr(dpos));
  std::string word, digest_hex, endword;
  tail >> word >> digest_hex >> endword;
  if (word != "digest" || endword != "end" || hex64(fnv64(body)) != digest_hex)
    return std::nullopt;

  try {
    std::istringstream is(body);
    std::string line;
    auto next = [&]() -> std::string {
      if (!std::getline(is, line)) throw std::domain_error("truncated cache");
      return line;
    };
    if (next() != "pnc-table v1") return std::nullopt;
    if (next() != "spec " + spec) return std::nullopt;
    if (next() != std::string("engine ") + kEngineVersion) return std::nullopt;
    if (next() != "order " + std::to_string(g.order())) return std::nullopt;
    if (next() != "exponent " + std::to_string(g.exponent())) return std::nullopt;
    const auto& classes = g.classes();
    if (next() != "classes " + std::to_string(classes.size())) return std::nullopt;
    for (const auto& c : classes)
      if (next() != "class " + c.representative.cycle_string() + " " + std::to_string(c.size()))
        return std::nullopt;
    CharacterTable t;
    t.group = g;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      std::string irr_line = next();
      if (irr_line.rfind("irr ", 0) != 0) return std::nullopt;
      t.degrees.push_back(std::stoll(irr_line.substr(4)));
      std::vector<Cyclotomic> vals;
      for (std::size_t k = 0; k < classes.size(); ++k) {
        std::string val_line = next();
        if (val_line.rfind("val ", 0) != 0) return std::nullopt;
        vals.push_back(Cyclotomic::decode(val_line.substr(4)));
      }
      t.irreducibles.emplace_back(g, std::move(vals));
    }
    long long sum_sq = 0;
    for (long long d : t.degrees) sum_sq += d * d;
    if (sum_sq != static_cast<long long>(g.order())) return std::nullopt;
    return t;
  } catch (const std::exception&) {
    return std::nullopt; // any malformed content is a miss, never a wrong answer
  }
}

} // namespace pnc
