#pragma once

#include <optional>

#include "pnc/group.hpp"

namespace pnc {

/// Outcome of the group-theoretic test for a pair noncommuting purely in
/// the standard (defining minus trivial) representation: the pair passes
/// exactly when the generated subgroup is transitive and some point
/// stabilizer meets every coset of its commutator subgroup.
struct StdPairReport {
  bool transitive = false;
  std::optional<int> stabilizer_point; // 0-based; set when transitive
  bool coset_coverage = false;
  bool verdict = false;
  long long commutator_subgroup_order = 0;
};

StdPairReport std_pnc_pair(const Perm& x, const Perm& y, int n);

/// Character-side check of the same question: the coset-sum criterion for
/// fix(g) - 1 on the generated subgroup. Must agree with std_pnc_pair.
bool std_pnc_char_check(const Perm& x, const Perm& y, int n);

} // namespace pnc
