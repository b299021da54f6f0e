#include "pnc/gf.hpp"

#include <algorithm>
#include <sstream>

namespace pnc {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<long>; // dense little-endian coefficients mod p

Poly poly_mod(Poly a, const Poly& m, long p) {
  // m monic of degree m.size()-1
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    long c = a.back();
    a.pop_back();
    if (c == 0) continue;
    for (std::size_t j = 0; j < dm; ++j) {
      std::size_t idx = a.size() - dm + j;
      a[idx] = (a[idx] - c * m[j] % p + static_cast<long>(p) * p) % p;
    }
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

bool divides(const Poly& d, Poly a, long p) {
  return poly_mod(std::move(a), d, p).empty();
}

bool is_irreducible(const Poly& f, long p) {
  // f monic, degree k >= 1; trial division by every monic polynomial of
  // degree up to k/2. Field sizes are capped, so this stays cheap.
  const long k = static_cast<long>(f.size()) - 1;
  if (k == 1) return true;
  if (f[0] == 0) return false; // divisible by x
  for (long d = 1; 2 * d <= k; ++d) {
    long count = 1;
    for (long i = 0; i < d; ++i) count *= p;
    for (long m = 0; m < count; ++m) {
      Poly g(static_cast<std::size_t>(d) + 1, 0);
      long t = m;
      for (long i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = t % p;
        t /= p;
      }
      g[static_cast<std::size_t>(d)] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

} // namespace

GaloisField::GaloisField(long p, int k, long max_size) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::domain_error("GaloisField: p must be prime, got " + std::to_string(p));
  if (k < 1) throw std::domain_error("GaloisField: degree must be positive");
  q_ = 1;
  for (int i = 0; i < k; ++i) {
    q_ *= p;
    if (q_ > max_size)
      throw std::domain_error("GaloisField: p^k exceeds the configured bound " +
                              std::to_string(max_size));
  }

  // Scan candidate coefficient vectors (c_0,...,c_{k-1}) in lexicographic
  // order, c_0 most significant, and keep the first irreducible.
  poly_.assign(static_cast<std::size_t>(k), 0);
  bool found = false;
  for (long m = 0; m < q_ && !found; ++m) {
    Poly f(static_cast<std::size_t>(k) + 1, 0);
    long t = m;
    for (int i = k - 1; i >= 0; --i) {
      f[static_cast<std::size_t>(i)] = t % p;
      t /= p;
    }
    f[static_cast<std::size_t>(k)] = 1;
    if (is_irreducible(f, p)) {
      for (int i = 0; i < k; ++i) poly_[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)];
      found = true;
    }
  }
  if (!found) throw std::logic_error("GaloisField: no irreducible polynomial found");

  generator_ = 0;
  for (long a = 1; a < q_; ++a) {
    if (element_order(a) == q_ - 1) {
      generator_ = a;
      break;
    }
  }
  if (generator_ == 0) throw std::logic_error("GaloisField: no multiplicative generator found");
}

void GaloisField::check(long a) const {
  if (a < 0 || a >= q_) throw std::domain_error("GaloisField: element index out of range");
}

long GaloisField::from_int(long n) const {
  long r = n % p_;
  if (r < 0) r += p_;
  return r;
}

std::vector<long> GaloisField::coeffs(long a) const {
  check(a);
  std::vector<long> c(static_cast<std::size_t>(k_), 0);
  for (int i = 0; i < k_; ++i) {
    c[static_cast<std::size_t>(i)] = a % p_;
    a /= p_;
  }
  return c;
}

long GaloisField::from_coeffs(const std::vector<long>& c) const {
  long a = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    long r = c[i] % p_;
    if (r < 0) r += p_;
    a = a * p_ + r;
  }
  check(a);
  return a;
}

long GaloisField::add(long a, long b) const {
  check(a);
  check(b);
  long out = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    out += mult * ((a % p_ + b % p_) % p_);
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

long GaloisField::neg(long a) const {
  check(a);
  long out = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    out += mult * ((p_ - a % p_) % p_);
    a /= p_;
    mult *= p_;
  }
  return out;
}

long GaloisField::sub(long a, long b) const { return add(a, neg(b)); }

long GaloisField::mul(long a, long b) const {
  check(a);
  check(b);
  Poly pa = coeffs(a), pb = coeffs(b);
  while (!pa.empty() && pa.back() == 0) pa.pop_back();
  while (!pb.empty() && pb.back() == 0) pb.pop_back();
  Poly mod = poly_;
  mod.push_back(1);
  Poly prod = poly_mod(poly_mul(pa, pb, p_), mod, p_);
  prod.resize(static_cast<std::size_t>(k_), 0);
  return from_coeffs(prod);
}

long GaloisField::pow(long a, long e) const {
  check(a);
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  long acc = one(), base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

long GaloisField::inv(long a) const {
  check(a);
  if (a == 0) throw std::domain_error("GaloisField: inverse of zero");
  return pow(a, q_ - 2);
}

long GaloisField::element_order(long a) const {
  check(a);
  if (a == 0) throw std::domain_error("GaloisField: order of zero");
  long ord = 1, x = a;
  while (x != one()) {
    x = mul(x, a);
    ++ord;
    if (ord > q_) throw std::logic_error("GaloisField: runaway order computation");
  }
  return ord;
}

std::string GaloisField::str(long a) const {
  auto c = coeffs(a);
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < k_; ++i) {
    if (i) os << ",";
    os << c[static_cast<std::size_t>(i)];
  }
  os << "]";
  return os.str();
}

} // namespace pnc
