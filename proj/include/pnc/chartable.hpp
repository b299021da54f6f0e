#pragma once

#include <cstdint>
#include <vector>

#include "pnc/classfun.hpp"

namespace pnc {

/// Exact character table: the full list of irreducible characters over
/// Q(zeta_exp(G)), one row per conjugacy class count. Rows are sorted by
/// degree and then by value sequence, so the trivial character is always
/// row 0.
struct CharacterTable {
  Group group;
  std::vector<ClassFunction> irreducibles;
  std::vector<long long> degrees;

  std::size_t class_count() const { return group.classes().size(); }
};

/// Memoized table access; tables are computed once per element set and
/// shared. Thread safe.
const CharacterTable& character_table(const Group& g);

/// Uncached computation. Abelian groups get their table directly from the
/// character group; everything else runs the class-matrix eigenvector
/// method over a finite field with an exact cyclotomic lift.
CharacterTable compute_character_table(const Group& g);

/// Multiplicities <chi, chi_i>; throws std::domain_error("not a character")
/// unless every multiplicity is a nonnegative integer.
std::vector<long long> decompose(const ClassFunction& chi, const CharacterTable& table);

std::uint64_t table_digest(const CharacterTable& table);

/// Number of tables computed so far in this process (cache misses only);
/// lets callers assert that a code path never touched character theory.
std::size_t character_tables_computed();

/// The memoized table for this element set, when one exists; never computes.
const CharacterTable* character_table_if_memoized(const Group& g);

/// Store an externally reconstructed table (for the persistent cache);
/// validates class data and degree sums before accepting.
const CharacterTable& adopt_character_table(CharacterTable table);

} // namespace pnc
