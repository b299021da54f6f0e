#include "pnc/classfun.hpp"

#include <algorithm>
#include <unordered_map>

namespace pnc {

ClassFunction::ClassFunction(Group group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_.classes().size())
    throw std::domain_error("ClassFunction: one value per conjugacy class required");
}

Cyclotomic ClassFunction::evaluate(const Perm& x) const {
  if (x.degree() != group_.degree() || !group_.contains(x)) return Cyclotomic();
  return values_[static_cast<std::size_t>(group_.class_of(x))];
}

ClassFunction ClassFunction::conj() const {
  std::vector<Cyclotomic> vals;
  vals.reserve(values_.size());
  for (const auto& v : values_) vals.push_back(v.conj());
  return ClassFunction(group_, std::move(vals));
}

ClassFunction ClassFunction::scaled(const Rational& r) const {
  std::vector<Cyclotomic> vals;
  vals.reserve(values_.size());
  for (const auto& v : values_) vals.push_back(v.scaled(r));
  return ClassFunction(group_, std::move(vals));
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  if (!a.group().same_elements(b.group()))
    throw std::domain_error("ClassFunction: group mismatch in +");
  std::vector<Cyclotomic> vals;
  vals.reserve(a.values().size());
  for (std::size_t i = 0; i < a.values().size(); ++i) vals.push_back(a.values()[i] + b.values()[i]);
  return ClassFunction(a.group(), std::move(vals));
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
  if (!a.group().same_elements(b.group()))
    throw std::domain_error("ClassFunction: group mismatch in -");
  std::vector<Cyclotomic> vals;
  vals.reserve(a.values().size());
  for (std::size_t i = 0; i < a.values().size(); ++i) vals.push_back(a.values()[i] - b.values()[i]);
  return ClassFunction(a.group(), std::move(vals));
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  if (!a.group().same_elements(b.group())) return false;
  for (std::size_t i = 0; i < a.values().size(); ++i)
    if (a.values()[i] != b.values()[i]) return false;
  return true;
}

ClassFunction trivial_character(const Group& g) {
  return ClassFunction(g, std::vector<Cyclotomic>(g.classes().size(), Cyclotomic(1)));
}

ClassFunction regular_character(const Group& g) {
  std::vector<Cyclotomic> vals(g.classes().size(), Cyclotomic());
  vals[0] = Cyclotomic(Rational(static_cast<long long>(g.order())));
  return ClassFunction(g, std::move(vals));
}

ClassFunction permutation_character(const Group& g) {
  std::vector<Cyclotomic> vals;
  vals.reserve(g.classes().size());
  for (const auto& c : g.classes())
    vals.push_back(Cyclotomic(Rational(c.representative.fixed_points())));
  return ClassFunction(g, std::move(vals));
}

ClassFunction standard_character(const Group& g) {
  std::vector<Cyclotomic> vals;
  vals.reserve(g.classes().size());
  for (const auto& c : g.classes())
    vals.push_back(Cyclotomic(Rational(c.representative.fixed_points() - 1)));
  return ClassFunction(g, std::move(vals));
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b, const Group& h) {
  Cyclotomic sum;
  if (a.group().same_elements(h) && b.group().same_elements(h)) {
    // class-weighted form
    const auto& classes = h.classes();
    for (std::size_t k = 0; k < classes.size(); ++k) {
      Cyclotomic term = a.at_class(static_cast<int>(k)) * b.at_class(static_cast<int>(k)).conj();
      sum += term.scaled(Rational(static_cast<long long>(classes[k].size())));
    }
  } else {
    for (const Perm& x : h.elements()) sum += a.evaluate(x) * b.evaluate(x).conj();
  }
  return sum.scaled(Rational(1, static_cast<long long>(h.order())));
}

ClassFunction restrict_to(const ClassFunction& chi, const Group& h) {
  if (!h.is_subgroup_of(chi.group()))
    throw std::domain_error("restrict_to: not a subgroup of the character's group");
  std::vector<Cyclotomic> vals;
  vals.reserve(h.classes().size());
  for (const auto& c : h.classes()) vals.push_back(chi.evaluate(c.representative));
  return ClassFunction(h, std::move(vals));
}

ClassFunction induce_with_transversal(const ClassFunction& chi, const Group& g,
                                      const std::vector<Perm>& transversal) {
  const Group& a = chi.group();
  if (!a.is_subgroup_of(g)) throw std::domain_error("induce: not a subgroup of the target group");
  CosetDecomposition dec = left_cosets(g, a);
  std::vector<char> seen(dec.count(), 0);
  for (const Perm& s : transversal) {
    int i = dec.coset_index(s);
    if (seen[static_cast<std::size_t>(i)])
      throw std::domain_error("induce: transversal hits a coset twice");
    seen[static_cast<std::size_t>(i)] = 1;
  }
  if (transversal.size() != dec.count())
    throw std::domain_error("induce: transversal does not cover the coset space");
  std::vector<Cyclotomic> vals;
  vals.reserve(g.classes().size());
  for (const auto& c : g.classes()) {
    Cyclotomic sum;
    for (const Perm& s : transversal) sum += chi.evaluate(conjugate(c.representative, s));
    vals.push_back(std::move(sum));
  }
  return ClassFunction(g, std::move(vals));
}

ClassFunction induce(const ClassFunction& chi, const Group& g) {
  const Group& a = chi.group();
  if (!a.is_subgroup_of(g)) throw std::domain_error("induce: not a subgroup of the target group");
  CosetDecomposition dec = left_cosets(g, a);
  std::vector<Cyclotomic> vals;
  vals.reserve(g.classes().size());
  for (const auto& c : g.classes()) {
    Cyclotomic sum;
    for (const Perm& s : dec.representatives) sum += chi.evaluate(conjugate(c.representative, s));
    vals.push_back(std::move(sum));
  }
  return ClassFunction(g, std::move(vals));
}

std::vector<ClassFunction> linear_characters(const Group& a) {
  if (!a.is_abelian()) throw std::domain_error("linear_characters: group is not abelian");
  auto basis = abelian_basis(a);
  const std::size_t r = basis.size();
  long big_n = a.exponent(); // lcm of basis orders

  // Exponent coordinates of every element with respect to the basis.
  std::unordered_map<Perm, std::vector<long>> coord;
  coord.reserve(a.order() * 2);
  {
    std::vector<long> tuple(r, 0);
    Perm cur(a.degree());
    // mixed-radix enumeration; rebuild the product on each carry
    while (true) {
      coord[cur] = tuple;
      std::size_t i = 0;
      while (i < r && tuple[i] + 1 == basis[i].second) {
        tuple[i] = 0;
        ++i;
      }
      if (i == r) break;
      ++tuple[i];
      cur = Perm(a.degree());
      for (std::size_t j = 0; j < r; ++j) {
        Perm p = basis[j].first;
        for (long t = 0; t < tuple[j]; ++t) cur = compose(cur, p);
      }
    }
    if (coord.size() != a.order())
      throw std::logic_error("linear_characters: basis does not span the group");
  }

  const auto& classes = a.classes();
  std::vector<ClassFunction> out;
  out.reserve(a.order());
  std::vector<long> jt(r, 0);
  while (true) {
    std::vector<Cyclotomic> vals;
    vals.reserve(classes.size());
    for (const auto& c : classes) {
      const auto& e = coord.at(c.representative);
      long exp = 0;
      for (std::size_t i = 0; i < r; ++i)
        exp = (exp + jt[i] * e[i] % big_n * (big_n / basis[i].second)) % big_n;
      vals.push_back(Cyclotomic::root(big_n, exp));
    }
    out.emplace_back(a, std::move(vals));
    std::size_t i = 0;
    while (i < r && jt[i] + 1 == basis[i].second) {
      jt[i] = 0;
      ++i;
    }
    if (i == r) break;
    ++jt[i];
  }
  return out;
}

std::vector<ClassFunction> linear_characters_of(const Group& h) {
  if (h.is_abelian()) return linear_characters(h);
  QuotientMap qm = quotient_group(h, h.derived_subgroup());
  std::vector<ClassFunction> out;
  for (const auto& phi : linear_characters(qm.quotient)) out.push_back(pull_back(phi, qm));
  return out;
}

ClassFunction pull_back(const ClassFunction& phi, const QuotientMap& qm) {
  if (!phi.group().same_elements(qm.quotient))
    throw std::domain_error("pull_back: character does not live on the quotient");
  std::vector<Cyclotomic> vals;
  vals.reserve(qm.domain.classes().size());
  for (const auto& c : qm.domain.classes()) vals.push_back(phi.evaluate(qm.apply(c.representative)));
  return ClassFunction(qm.domain, std::move(vals));
}

bool verify_res_ind(const ClassFunction& phi, const Group& g) {
  const Group& n = phi.group();
  if (!n.is_normal_in(g)) throw std::domain_error("verify_res_ind: subgroup is not normal");
  ClassFunction lhs = restrict_to(induce(phi, g), n);
  CosetDecomposition dec = left_cosets(g, n);
  std::vector<Cyclotomic> vals;
  vals.reserve(n.classes().size());
  for (const auto& c : n.classes()) {
    Cyclotomic sum;
    for (const Perm& s : dec.representatives) sum += phi.evaluate(conjugate(c.representative, s));
    vals.push_back(std::move(sum));
  }
  return lhs == ClassFunction(n, std::move(vals));
}

bool is_multiplicative(const ClassFunction& chi) {
  const Group& g = chi.group();
  for (const Perm& x : g.elements())
    for (const Perm& y : g.elements())
      if (chi.evaluate(compose(x, y)) != chi.evaluate(x) * chi.evaluate(y)) return false;
  return true;
}

bool is_faithful_linear(const ClassFunction& chi) {
  const Group& g = chi.group();
  std::size_t kernel = 0;
  for (const Perm& x : g.elements())
    if (chi.evaluate(x).is_one()) ++kernel;
  return kernel == 1;
}

} // namespace pnc
