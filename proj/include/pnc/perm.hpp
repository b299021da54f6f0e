#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pnc {

/// Permutation of {0,...,n-1}, stored as the image vector. Points act on
/// the right: the product a*b means "apply a, then b", matching the
/// conventions x^y = y^-1 x y and [x,y] = x^-1 y^-1 x y used throughout.
/// Rendering and parsing use 1-based disjoint cycle notation.
class Perm {
public:
  Perm() = default;
  explicit Perm(int degree);
  explicit Perm(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  long order() const;
  int fixed_points() const;

  /// Same permutation viewed in a larger degree (new points fixed).
  Perm extended(int degree) const;
  /// Same permutation with all points shifted up by `offset` inside degree n.
  Perm shifted(int offset, int degree) const;

  std::string cycle_string() const; // "(1 2 3)(4 5)", identity is "()"
  static Perm parse_cycles(const std::string& text, int degree);

  friend bool operator==(const Perm& a, const Perm& b) { return a.images_ == b.images_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.images_ < b.images_; }

  std::size_t hash() const;

private:
  std::vector<int> images_;
};

/// apply a, then b
Perm compose(const Perm& a, const Perm& b);
/// s^-1 g s
Perm conjugate(const Perm& g, const Perm& s);
/// x^-1 y^-1 x y
Perm commutator(const Perm& x, const Perm& y);

} // namespace pnc

template <>
struct std::hash<pnc::Perm> {
  std::size_t operator()(const pnc::Perm& p) const { return p.hash(); }
};
