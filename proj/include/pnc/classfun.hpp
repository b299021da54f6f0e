#pragma once

#include <vector>

#include "pnc/cyclotomic.hpp"
#include "pnc/group.hpp"

namespace pnc {

/// Function on a group constant on conjugacy classes, with exact cyclotomic
/// values. Evaluation at a permutation outside the underlying group returns
/// zero (characters of subgroups are always zero-extended to the ambient
/// group).
class ClassFunction {
public:
  ClassFunction() = default;
  ClassFunction(Group group, std::vector<Cyclotomic> values);

  const Group& group() const { return group_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& at_class(int i) const { return values_[static_cast<std::size_t>(i)]; }
  Cyclotomic evaluate(const Perm& x) const;
  /// Value at the identity (the degree, for characters).
  const Cyclotomic& degree_value() const { return values_.front(); }

  ClassFunction conj() const;
  ClassFunction scaled(const Rational& r) const;
  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);
  friend bool operator!=(const ClassFunction& a, const ClassFunction& b) { return !(a == b); }

private:
  Group group_;
  std::vector<Cyclotomic> values_;
};

ClassFunction trivial_character(const Group& g);
ClassFunction regular_character(const Group& g);
/// Number of fixed points, class by class.
ClassFunction permutation_character(const Group& g);
/// Permutation character minus one: the defining representation with one
/// trivial summand removed. Value is -1 on fixed-point-free permutations.
ClassFunction standard_character(const Group& g);

/// <a,b>_H = (1/|H|) sum_{h in H} a(h) conj(b(h)), zero-extended values.
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b, const Group& h);

ClassFunction restrict_to(const ClassFunction& chi, const Group& h);

/// Induced class function, Ind(chi)(g) = sum over cosets [s] of chi(g^s),
/// with chi zero outside its group. Independent of the representative
/// choice; the default transversal is the minimal element of each coset.
ClassFunction induce(const ClassFunction& chi, const Group& g);
ClassFunction induce_with_transversal(const ClassFunction& chi, const Group& g,
                                      const std::vector<Perm>& transversal);

/// All |A| one-dimensional characters of an abelian group, built from an
/// independent generating set; the trivial character comes first.
std::vector<ClassFunction> linear_characters(const Group& a);
/// One-dimensional characters of an arbitrary group (pulled back from the
/// abelianization).
std::vector<ClassFunction> linear_characters_of(const Group& h);

ClassFunction pull_back(const ClassFunction& phi, const QuotientMap& qm);

/// Checks Res^G_N Ind_N^G phi = sum over cosets [s] of phi^s for a linear
/// character phi of a normal subgroup of g, as class functions on the
/// subgroup.
bool verify_res_ind(const ClassFunction& phi, const Group& g);

bool is_multiplicative(const ClassFunction& chi); // chi(gh) = chi(g)chi(h) on its group
bool is_faithful_linear(const ClassFunction& chi); // kernel trivial

} // namespace pnc
