#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pnc/perm.hpp"

namespace pnc {

inline constexpr std::size_t kDefaultClosureBound = 10'000;
inline constexpr std::size_t kDefaultAnalysisBound = 600;
inline constexpr std::size_t kAutEnumBound = 36;

/// Thrown when a requested computation would enumerate past its configured
/// order bound; callers treat it as "too large for full analysis".
struct BoundExceeded : std::runtime_error {
  explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ConjClass {
  Perm representative; // minimal member under image-vector order
  std::vector<Perm> members; // sorted
  std::size_t size() const { return members.size(); }
};

/// Finite permutation group with a cached full element enumeration.
/// Immutable after construction; handles share state, so copies are cheap
/// and safe across threads. Conjugacy classes and the exponent are computed
/// lazily on first use.
class Group {
public:
  Group() = default;

  static Group generate(std::vector<Perm> generators,
                        std::size_t bound = kDefaultClosureBound);
  /// Wrap an element set that is already closed under the group operations.
  static Group from_elements(std::vector<Perm> elements, std::vector<Perm> generators = {});
  static Group trivial(int degree);

  bool valid() const { return d_ != nullptr; }
  int degree() const;
  std::size_t order() const;
  // accessors returning references are disabled on temporaries: bind the
  // group to a name first (handles are cheap to copy)
  const std::vector<Perm>& elements() const&; // sorted by image vector
  const std::vector<Perm>& elements() const&& = delete;
  const std::vector<Perm>& generators() const&;
  const std::vector<Perm>& generators() const&& = delete;
  Perm identity() const { return Perm(degree()); }

  bool contains(const Perm& p) const;
  int index_of(const Perm& p) const; // -1 when absent
  bool is_subgroup_of(const Group& g) const;
  bool same_elements(const Group& g) const;
  std::uint64_t element_digest() const;

  const std::vector<ConjClass>& classes() const&;
  const std::vector<ConjClass>& classes() const&& = delete;
  int class_of(const Perm& p) const; // index into classes(); requires membership
  long exponent() const;

  bool is_abelian() const;
  bool is_cyclic() const;
  Group center() const;
  Group derived_subgroup() const;
  std::vector<Group> derived_series() const; // starts at *this, stops when stable
  bool is_solvable() const;
  bool is_metabelian() const;
  bool is_normal_in(const Group& g) const;
  Group conjugated(const Perm& s) const; // s^-1 * this * s inside a common parent

  struct Data; // implementation detail, defined in group.cpp

private:
  std::shared_ptr<const Data> d_;
  explicit Group(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  const Data& data() const;
};

/// Left coset decomposition of a subgroup: cosets are the sets rep*H, the
/// representative is the minimal element of its coset, and cosets are
/// listed sorted by representative (so H itself is always first).
struct CosetDecomposition {
  Group subgroup;
  std::vector<Perm> representatives;
  std::vector<std::vector<Perm>> cosets;
  std::unordered_map<Perm, int> coset_of;

  std::size_t count() const { return cosets.size(); }
  int coset_index(const Perm& g) const;
};

CosetDecomposition left_cosets(const Group& g, const Group& h);

/// Quotient of a group by a normal subgroup, realized as a permutation
/// group on the coset space, together with the canonical projection.
struct QuotientMap {
  Group domain;
  Group kernel;
  Group quotient; // degree = [G:N]
  CosetDecomposition cosets;

  Perm apply(const Perm& g) const; // image permutation of cosets
};

QuotientMap quotient_group(const Group& g, const Group& n);

Group normal_closure(const Group& g, const std::vector<Perm>& seed);

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// All nonabelian subgroups whose proper subgroups are abelian. The result
/// is closed under conjugation, deduplicated, and sorted by (order, element
/// list), so every nonabelian subgroup of g contains at least one entry.
/// Throws BoundExceeded past the order bound or the optional deadline.
std::vector<Group> minimal_nonabelian_subgroups(const Group& g,
                                                std::size_t bound = kDefaultAnalysisBound,
                                                const Deadline& deadline = std::nullopt);

/// Normal series G = G_0 > G_1 > ... > G_n = 1 with every term normal in G
/// and every quotient cyclic, when one exists.
std::optional<std::vector<Group>> supersolvable_series(const Group& g);
bool is_supersolvable(const Group& g);

struct DihedralStructure {
  Group rotations; // cyclic, index 2
  std::vector<Perm> reflections; // the complementary coset, all involutions
};

/// Decomposition of a dihedral group of order >= 6 into its rotation
/// subgroup and reflections; groups of order 4 are treated as not dihedral.
std::optional<DihedralStructure> dihedral_structure(const Group& h);

std::optional<Group> find_dihedral_subgroup(const Group& g, std::size_t order);

std::vector<std::vector<int>> orbits(const Group& h);
bool is_transitive(const Group& h);
Group point_stabilizer(const Group& h, int point);

/// Independent generators b_1..b_r with A = <b_1> x ... x <b_r>, returned
/// with their orders, Sylow component by Sylow component (primes ascending,
/// orders descending within a prime).
std::vector<std::pair<Perm, long>> abelian_basis(const Group& a);
/// Primary decomposition type: the multiset of prime-power cyclic factor
/// orders, ascending.
std::vector<long> abelian_invariants(const Group& a);

/// Every subgroup, by breadth-first extension of generating sets. Intended
/// for small groups; guarded by the bound.
std::vector<Group> all_subgroups(const Group& g, std::size_t max_subgroups = 20'000);

} // namespace pnc
