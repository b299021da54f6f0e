#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pnc/chartable.hpp"

namespace pnc {

inline constexpr std::uint64_t kDefaultSeed = 1729;

enum class PncStatus { Pnc, Spnc, NotPnc, Undecided };
std::string to_string(PncStatus s);

enum class ObstructionKind { Exhaustive, DihedralLemma, D4Conjugacy };
std::string to_string(ObstructionKind k);

/// Per-irreducible transcript line for an exhaustive obstruction: the coset
/// of the commutator subgroup on which this irreducible sums to a nonzero
/// value.
struct ExhaustiveEntry {
  int irreducible;
  Perm failing_coset_rep;
  Cyclotomic coset_sum;
};

/// Per-irreducible transcript line for a dihedral obstruction: which of the
/// two requirements (vanishing on reflections / zero sum over rotations)
/// failed.
struct DihedralEntry {
  int irreducible;
  bool zero_on_reflections;
  bool rotation_sum_zero;
};

struct ObstructionReport {
  ObstructionKind kind{};
  Group subgroup;
  std::vector<ExhaustiveEntry> exhaustive;
  std::vector<DihedralEntry> dihedral;
  // D4 fusion data: the central involution of the subgroup, the reflection
  // it is conjugate to in the ambient group, and one conjugating element.
  Perm central, fused, conjugator;
  std::string describe() const;
};

struct PncVerdict {
  PncStatus status = PncStatus::Undecided;
  std::vector<Group> minimal_subgroups;
  std::vector<std::vector<int>> witnesses; // per minimal subgroup: PNC irreducible indices
  std::optional<int> common_witness;       // justifies SPNC when present
  std::vector<ObstructionReport> obstructions;
  std::vector<std::string> notes;
};

struct EngineOptions {
  std::size_t bound = kDefaultAnalysisBound;
  double budget_seconds = 300.0;
};

/// Commutator criterion: chi is PNC for the nonabelian subgroup h exactly
/// when chi sums to zero on every coset of [h,h] in h.
bool is_pnc_for_subgroup(const ClassFunction& chi, const Group& h);
/// First coset of [h,h] on which chi has a nonzero sum, if any.
std::optional<std::pair<Perm, Cyclotomic>> pnc_failing_coset(const ClassFunction& chi,
                                                             const Group& h);

std::vector<int> pnc_irreducibles(const CharacterTable& table, const Group& h);

struct PairDecision {
  bool pnc;
  std::optional<int> witness; // irreducible row index
};
PairDecision is_pnc_for_pair(const Group& g, const Perm& x, const Perm& y,
                             const EngineOptions& opts = {});

PncVerdict decide_pnc(const Group& g, const EngineOptions& opts = {});

/// Cheap certificate: a dihedral subgroup of order 8 whose central
/// involution is conjugate in g to one of the subgroup's reflections rules
/// out PNC without any character computation. An optional generator pair is
/// tried before the scan.
std::optional<ObstructionReport> d4_conjugacy_obstruction(
    const Group& g, const std::optional<std::pair<Perm, Perm>>& seed = std::nullopt);

/// Fires (returns a report) when no irreducible of g is simultaneously zero
/// on the reflections of d and zero-summed over its rotation subgroup.
std::optional<ObstructionReport> dihedral_lemma_check(const Group& g, const Group& d);

struct SupersolvableWitness {
  ClassFunction character; // induced from a level of the normal series
  int level;               // index i with [x,y] in G_i \ G_(i+1)
  bool eigenvalue_one_avoided;
  bool coset_criterion_holds;
  bool verified() const { return eigenvalue_one_avoided && coset_criterion_holds; }
};
SupersolvableWitness supersolvable_pnc_witness(const Group& g, const Perm& x, const Perm& y);

std::optional<ClassFunction> cyclic_by_abelian_spnc_witness(const Group& g,
                                                            const EngineOptions& opts = {});

struct MetabelianCriterion {
  bool predicts_pnc;
  std::vector<long> factors; // prime-power orders of the derived subgroup
};
MetabelianCriterion metabelian_criterion(const Group& g);

struct SubgroupCharacterResult {
  bool holds;
  // per nontrivial subgroup K of [G,G]: index of a character of [G,G]
  // whose kernel contains no conjugate of K (-1 marks failure)
  std::vector<std::pair<Group, int>> certificates;
  std::optional<Group> failing_subgroup;
};
SubgroupCharacterResult subgroup_character_condition(const Group& g);

/// A nontrivial subgroup K of an abelian group such that every character is
/// trivial on some automorphic image of K, found by enumerating
/// automorphisms (seeded order, early exit). Exists exactly when two
/// primary cyclic factors coincide.
std::optional<Group> kernel_covered_subgroup(const Group& a, std::uint64_t seed = kDefaultSeed,
                                             std::size_t bound = kAutEnumBound);
bool has_repeated_primary_factor(const Group& a);

struct AglBigIrrepReport {
  long q = 0, p = 0;
  bool unique_big_irreducible = false;
  long long degree = 0;
  Rational translation_value;
  Rational rotation_sum;
  bool lemma_fires = false; // dihedral obstruction at <t_1, m_-1>
};
AglBigIrrepReport agl_unique_bigrep_analysis(long q, const EngineOptions& opts = {});

/// When some irreducible degree exceeds every nonabelian subgroup's index,
/// that irreducible realizes the group as SPNC; returns its row index.
std::optional<int> big_irrep_spnc_check(const Group& g, const EngineOptions& opts = {});

} // namespace pnc
