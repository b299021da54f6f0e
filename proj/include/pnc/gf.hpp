#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pnc {

inline constexpr long kDefaultFieldBound = 2048;

/// The finite field GF(p^k). Elements are handled as canonical indices in
/// [0, p^k): the index encodes the coefficient vector of a residue modulo
/// the defining polynomial, index = sum coeff[i] * p^i.
///
/// The defining polynomial is the lexicographically smallest monic
/// irreducible of degree k over Z/p, coefficients compared low-degree-first,
/// so fields are reproducible across runs and platforms.
class GaloisField {
public:
  GaloisField(long p, int k, long max_size = kDefaultFieldBound);

  long p() const { return p_; }
  int k() const { return k_; }
  long size() const { return q_; }

  /// Coefficients c_0..c_{k-1} of the defining polynomial below the monic
  /// leading term.
  const std::vector<long>& defining_polynomial() const { return poly_; }

  long zero() const { return 0; }
  long one() const { return 1 % q_; }
  /// Field element for an integer (the image of n under Z -> GF(p^k)).
  long from_int(long n) const;

  long add(long a, long b) const;
  long sub(long a, long b) const;
  long neg(long a) const;
  long mul(long a, long b) const;
  long inv(long a) const;
  long pow(long a, long e) const;

  /// Smallest element index of multiplicative order p^k - 1.
  long generator() const { return generator_; }
  long element_order(long a) const;

  std::vector<long> coeffs(long a) const;
  long from_coeffs(const std::vector<long>& c) const;
  std::string str(long a) const;

private:
  long p_;
  int k_;
  long q_;
  std::vector<long> poly_; // length k: coefficients below the monic lead
  long generator_;

  void check(long a) const;
};

bool is_prime(long n);

} // namespace pnc
