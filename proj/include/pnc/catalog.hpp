#pragma once

#include <map>
#include <string>
#include <vector>

#include "pnc/group.hpp"

namespace pnc {

struct SpecParseError : std::runtime_error {
  std::size_t offset;
  SpecParseError(const std::string& what, std::size_t off)
      : std::runtime_error(what + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

/// Parsed group spec: a direct product of family leaves. The grammar is
///   SPEC   := FACTOR { "x" FACTOR }
///   FACTOR := FAMILY "(" INT { "," INT } ")"  |  "Q8"  |  "PSL33"
/// with whitespace insignificant and "x" left-associative. The zero-arity
/// families are written bare.
struct GroupSpec {
  struct Factor {
    std::string family;
    std::vector<long> params;
  };
  std::vector<Factor> factors;

  std::string render() const;
};

GroupSpec parse_spec(const std::string& text);

struct MadeGroup {
  Group group;
  /// Distinguished elements exposed by some constructors (for example the
  /// translation t1 and multiplier mg of AGL1, or the r/f generators of
  /// PSL33); empty for products.
  std::map<std::string, Perm> named;
};

MadeGroup make_group(const GroupSpec& spec, std::size_t closure_bound = kDefaultClosureBound);
MadeGroup make_group(const std::string& spec_text,
                     std::size_t closure_bound = kDefaultClosureBound);

/// Fixed list of survey specs (the desk-scale test corpus).
const std::vector<std::string>& catalog_specs();

} // namespace pnc
