#include "pnc/permstd.hpp"

#include "pnc/classfun.hpp"
#include "pnc/engine.hpp"

namespace pnc {

StdPairReport std_pnc_pair(const Perm& x, const Perm& y, int n) {
  if (x.degree() != n || y.degree() != n)
    throw std::domain_error("std_pnc_pair: permutation degree mismatch");
  if (commutator(x, y).is_identity()) throw std::domain_error("pair commutes");
  Group h = Group::generate({x, y});
  StdPairReport rep;
  Group k = h.derived_subgroup();
  rep.commutator_subgroup_order = static_cast<long long>(k.order());
  rep.transitive = is_transitive(h);
  if (!rep.transitive) {
    rep.coset_coverage = false;
    rep.verdict = false;
    return rep;
  }
  // all point stabilizers are conjugate, so checking one point suffices
  rep.stabilizer_point = 0;
  Group stab = point_stabilizer(h, 0);
  CosetDecomposition dec = left_cosets(h, k);
  std::vector<char> hit(dec.count(), 0);
  for (const Perm& s : stab.elements()) hit[static_cast<std::size_t>(dec.coset_index(s))] = 1;
  rep.coset_coverage = true;
  for (char c : hit)
    if (!c) {
      rep.coset_coverage = false;
      break;
    }
  rep.verdict = rep.transitive && rep.coset_coverage;
  return rep;
}

bool std_pnc_char_check(const Perm& x, const Perm& y, int n) {
  if (x.degree() != n || y.degree() != n)
    throw std::domain_error("std_pnc_char_check: permutation degree mismatch");
  if (commutator(x, y).is_identity()) throw std::domain_error("pair commutes");
  Group h = Group::generate({x, y});
  return is_pnc_for_subgroup(standard_character(h), h);
}

} // namespace pnc
