#include "pnc/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace pnc {

long lcm_long(long a, long b) {
  long g = std::gcd(a, b);
  long l = a / g * b;
  if (l <= 0 || l > 20'000'000L) throw std::domain_error("cyclotomic order overflow in lcm");
  return l;
}

namespace {

// Exact polynomial division, dense little-endian coefficients, divisor monic.
// Returns the quotient; requires the division to be exact.
std::vector<Rational> exact_div(const std::vector<Rational>& num,
                                const std::vector<Rational>& den) {
  std::vector<Rational> rem = num;
  const std::size_t dd = den.size() - 1;
  if (rem.size() < den.size()) throw std::logic_error("exact_div: degree underflow");
  std::vector<Rational> quot(rem.size() - dd, Rational(0));
  for (std::size_t i = rem.size(); i-- > dd;) {
    Rational c = rem[i];
    if (c.is_zero()) continue;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den[j];
  }
  for (const auto& r : rem)
    if (!r.is_zero()) throw std::logic_error("exact_div: division not exact");
  return quot;
}

std::map<long, std::vector<Rational>> g_phi_cache;
std::mutex g_phi_mutex;

} // namespace

const std::vector<Rational>& Cyclotomic::cyclotomic_polynomial(long n) {
  if (n < 1) throw std::domain_error("cyclotomic polynomial: order must be positive");
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  auto it = g_phi_cache.find(n);
  if (it != g_phi_cache.end()) return it->second;

  // Compute Phi_d for all divisors d of n, bottom up.
  std::vector<long> divisors;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  for (long d : divisors) {
    if (g_phi_cache.count(d)) continue;
    std::vector<Rational> f(static_cast<std::size_t>(d) + 1, Rational(0));
    f[0] = Rational(-1);
    f[static_cast<std::size_t>(d)] = Rational(1); // x^d - 1
    for (long e : divisors) {
      if (e >= d || d % e != 0) continue;
      f = exact_div(f, g_phi_cache.at(e));
    }
    g_phi_cache.emplace(d, std::move(f));
  }
  return g_phi_cache.at(n);
}

long Cyclotomic::phi(long n) {
  return static_cast<long>(cyclotomic_polynomial(n).size()) - 1;
}

Cyclotomic Cyclotomic::from_dense(std::vector<Rational> dense, long n) {
  const auto& mod = cyclotomic_polynomial(n);
  const std::size_t deg = mod.size() - 1; // phi(n)
  for (std::size_t i = dense.size(); i-- > deg;) {
    Rational c = dense[i];
    if (c.is_zero()) continue;
    dense[i] = Rational(0);
    for (std::size_t j = 0; j < deg; ++j) dense[i - deg + j] -= c * mod[j];
  }
  Cyclotomic out;
  out.order_ = n;
  for (std::size_t e = 0; e < std::min(dense.size(), deg); ++e)
    if (!dense[e].is_zero()) out.terms_.emplace_back(static_cast<long>(e), dense[e]);
  return out;
}

Cyclotomic::Cyclotomic(const Rational& r, long order) : order_(order) {
  if (order < 1) throw std::domain_error("Cyclotomic: order must be positive");
  if (!r.is_zero()) terms_.emplace_back(0, r);
}

Cyclotomic Cyclotomic::root(long n, long e) {
  if (n < 1) throw std::domain_error("Cyclotomic::root: order must be positive");
  long em = ((e % n) + n) % n;
  std::vector<Rational> dense(static_cast<std::size_t>(em) + 1, Rational(0));
  dense[static_cast<std::size_t>(em)] = Rational(1);
  return from_dense(std::move(dense), n);
}

Cyclotomic Cyclotomic::from_integer_dense(const std::vector<long long>& dense, long n) {
  std::vector<Rational> d;
  d.reserve(dense.size());
  for (long long c : dense) d.emplace_back(c);
  if (d.empty()) d.emplace_back(0);
  if (d.size() > static_cast<std::size_t>(n))
    throw std::domain_error("Cyclotomic: dense vector longer than order");
  return from_dense(std::move(d), n);
}

bool Cyclotomic::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

bool Cyclotomic::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one();
}

Rational Cyclotomic::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) throw std::domain_error("Cyclotomic: not a rational value: " + encode());
  return terms_[0].second;
}

Cyclotomic Cyclotomic::embedded(long m) const {
  if (m == order_) return *this;
  if (m % order_ != 0) throw std::domain_error("Cyclotomic: embedding order must be a multiple");
  long k = m / order_;
  std::vector<Rational> dense;
  for (const auto& [e, c] : terms_) {
    std::size_t ne = static_cast<std::size_t>(e * k);
    if (dense.size() <= ne) dense.resize(ne + 1, Rational(0));
    dense[ne] = c;
  }
  if (dense.empty()) dense.assign(1, Rational(0));
  return from_dense(std::move(dense), m);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

struct CycBuilder {
  static Cyclotomic build(std::vector<Rational> dense, long n) {
    return Cyclotomic::from_dense(std::move(dense), n);
  }
};

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  long n = lcm_long(a.order(), b.order());
  Cyclotomic ea = a.embedded(n), eb = b.embedded(n);
  std::vector<Rational> dense(static_cast<std::size_t>(Cyclotomic::phi(n)), Rational(0));
  for (const auto& [e, c] : ea.terms_) dense[static_cast<std::size_t>(e)] += c;
  for (const auto& [e, c] : eb.terms_) dense[static_cast<std::size_t>(e)] += c;
  return CycBuilder::build(std::move(dense), n);
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  long n = lcm_long(a.order(), b.order());
  Cyclotomic ea = a.embedded(n), eb = b.embedded(n);
  std::vector<Rational> dense(static_cast<std::size_t>(Cyclotomic::phi(n)), Rational(0));
  for (const auto& [e, c] : ea.terms_) dense[static_cast<std::size_t>(e)] += c;
  for (const auto& [e, c] : eb.terms_) dense[static_cast<std::size_t>(e)] -= c;
  return CycBuilder::build(std::move(dense), n);
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  long n = lcm_long(a.order(), b.order());
  Cyclotomic ea = a.embedded(n), eb = b.embedded(n);
  if (ea.is_zero() || eb.is_zero()) return Cyclotomic(Rational(0), n);
  // Sparse convolution, exponents folded modulo n (zeta^n = 1), then one
  // reduction modulo Phi_n.
  std::vector<Rational> dense(static_cast<std::size_t>(n), Rational(0));
  for (const auto& [ea_e, ea_c] : ea.terms_)
    for (const auto& [eb_e, eb_c] : eb.terms_)
      dense[static_cast<std::size_t>((ea_e + eb_e) % n)] += ea_c * eb_c;
  return CycBuilder::build(std::move(dense), n);
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
  if (r.is_zero()) return Cyclotomic(Rational(0), order_);
  Cyclotomic out = *this;
  for (auto& t : out.terms_) t.second *= r;
  return out;
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> dense(static_cast<std::size_t>(order_), Rational(0));
  for (const auto& [e, c] : terms_) {
    long ne = (order_ - e) % order_;
    dense[static_cast<std::size_t>(ne)] += c;
  }
  return from_dense(std::move(dense), order_);
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.terms_ == b.terms_;
  long n = lcm_long(a.order_, b.order_);
  return a.embedded(n).terms_ == b.embedded(n).terms_;
}

std::string Cyclotomic::encode() const {
  std::ostringstream os;
  os << order_ << ":[";
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << ",";
    first = false;
    os << e << "=" << c.numerator().get_str() << "/" << c.denominator().get_str();
  }
  os << "]";
  return os.str();
}

Cyclotomic Cyclotomic::decode(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon + 1 >= text.size() || text[colon + 1] != '[' ||
      text.back() != ']')
    throw std::domain_error("Cyclotomic: malformed encoding '" + text + "'");
  long n = std::stol(text.substr(0, colon));
  if (n < 1) throw std::domain_error("Cyclotomic: bad order in encoding");
  std::string body = text.substr(colon + 2, text.size() - colon - 3);
  Cyclotomic out(Rational(0), n);
  if (body.empty()) return out;
  long deg = phi(n);
  std::istringstream is(body);
  std::string item;
  std::vector<Term> terms;
  while (std::getline(is, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::domain_error("Cyclotomic: malformed term '" + item + "'");
    long e = std::stol(item.substr(0, eq));
    if (e < 0 || e >= deg) throw std::domain_error("Cyclotomic: exponent out of range");
    Rational c = Rational::from_string(item.substr(eq + 1));
    if (!terms.empty() && terms.back().first >= e)
      throw std::domain_error("Cyclotomic: exponents out of order");
    if (!c.is_zero()) terms.emplace_back(e, c);
  }
  out.terms_ = std::move(terms);
  return out;
}

std::string Cyclotomic::pretty() const {
  if (is_rational()) return rational_value().str();
  auto monomial = [&](long e, const Rational& c) {
    std::string m = "z(" + std::to_string(order_) + ")";
    if (e != 1) m += "^" + std::to_string(e);
    if (c.is_one()) return m;
    if (c == Rational(-1)) return "-" + m;
    return c.str() + "*" + m;
  };
  if (terms_.size() == 1 && terms_[0].first != 0) return monomial(terms_[0].first, terms_[0].second);
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& [e, c] = terms_[i];
    std::string piece = e == 0 ? c.str() : monomial(e, c);
    if (i == 0) {
      out = piece;
    } else if (!piece.empty() && piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

std::size_t Cyclotomic::hash() const {
  std::size_t h = std::hash<long>{}(order_);
  for (const auto& [e, c] : terms_) {
    h = h * 1000003u + std::hash<long>{}(e);
    h = h * 1000003u + c.hash();
  }
  return h;
}

bool cyc_value_less(const Cyclotomic& a, const Cyclotomic& b) {
  bool a1 = a.is_one(), b1 = b.is_one();
  if (a1 != b1) return a1;
  if (a1 && b1) return false;
  long n = lcm_long(a.order(), b.order());
  Cyclotomic ea = a.embedded(n), eb = b.embedded(n);
  // Dense lexicographic comparison over exponents 0..phi(n)-1.
  std::size_t ia = 0, ib = 0;
  const auto& ta = ea.terms();
  const auto& tb = eb.terms();
  for (long e = 0; e < Cyclotomic::phi(n); ++e) {
    Rational ca = (ia < ta.size() && ta[ia].first == e) ? ta[ia++].second : Rational(0);
    Rational cb = (ib < tb.size() && tb[ib].first == e) ? tb[ib++].second : Rational(0);
    if (ca != cb) return ca < cb;
  }
  return false;
}

} // namespace pnc
