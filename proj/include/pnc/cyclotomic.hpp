#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pnc/rational.hpp"

namespace pnc {

/// Element of the cyclotomic field Q(zeta_n), stored in the power basis
/// 1, zeta, ..., zeta^(phi(n)-1) reduced modulo the n-th cyclotomic
/// polynomial. The reduced form is unique, so two elements of the same
/// order are equal exactly when their coefficients agree. Terms with zero
/// coefficient are never stored.
class Cyclotomic {
public:
  using Term = std::pair<long, Rational>; // (exponent, coefficient)

  Cyclotomic() : order_(1) {}
  explicit Cyclotomic(const Rational& r, long order = 1);
  Cyclotomic(long long n) : Cyclotomic(Rational(n)) {}

  /// zeta_n^e, e taken modulo n.
  static Cyclotomic root(long n, long e);

  /// sum_j dense[j] * zeta_n^j, reduced.
  static Cyclotomic from_integer_dense(const std::vector<long long>& dense, long n);

  long order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  bool is_one() const;
  /// Rational value; throws if the element has a nonzero zeta component.
  Rational rational_value() const;

  /// Same element viewed in Q(zeta_m); requires order() | m.
  Cyclotomic embedded(long m) const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o) { *this = *this + o; return *this; }
  Cyclotomic& operator-=(const Cyclotomic& o) { *this = *this - o; return *this; }
  Cyclotomic& operator*=(const Cyclotomic& o) { *this = *this * o; return *this; }

  Cyclotomic scaled(const Rational& r) const;

  /// Complex conjugate: zeta_n -> zeta_n^(n-1), extended linearly.
  Cyclotomic conj() const;

  /// Coefficient-wise equality after embedding into the lcm order.
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Exact text encoding "n:[e=coeff,...]" used by the cache format and the
  /// JSON output; decode() parses the same shape.
  std::string encode() const;
  static Cyclotomic decode(const std::string& text);

  /// Human-oriented rendering: shortest of plain rational, z(n)^k monomial,
  /// or an explicit sum of monomials.
  std::string pretty() const;

  std::size_t hash() const;

  /// Dense coefficients of Phi_n (cached; computed by dividing x^n - 1 by
  /// the cyclotomic polynomials of the proper divisors of n).
  static const std::vector<Rational>& cyclotomic_polynomial(long n);
  static long phi(long n); // degree of Phi_n

private:
  long order_;
  std::vector<Term> terms_; // sorted by exponent, all < phi(order_), no zeros

  static Cyclotomic from_dense(std::vector<Rational> dense, long n);
  friend struct CycBuilder;
};

long lcm_long(long a, long b);

/// Fixed total order on cyclotomic values used for deterministic row
/// sorting: 1 sorts before everything else, then elements compare by order
/// and lexicographically by dense coefficient vector.
bool cyc_value_less(const Cyclotomic& a, const Cyclotomic& b);

} // namespace pnc
