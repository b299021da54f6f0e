#include "pnc/rational.hpp"

namespace pnc {

Rational::Rational(long long num, long long den)
    : v_(static_cast<long>(num), static_cast<long>(den)) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::from_string(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpq_class(mpz_class(text)));
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_class q(num, den);
    return Rational(std::move(q));
  } catch (const std::invalid_argument&) {
    throw std::domain_error("Rational: malformed literal '" + text + "'");
  }
}

long long Rational::to_int() const {
  if (!is_integer()) throw std::domain_error("Rational: not an integer: " + str());
  const mpz_class& n = numerator();
  if (!n.fits_slong_p()) throw std::domain_error("Rational: integer out of machine range");
  return static_cast<long long>(n.get_si());
}

std::string Rational::str() const {
  if (is_integer()) return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

std::size_t Rational::hash() const {
  std::size_t h = std::hash<std::string>{}(v_.get_str());
  return h;
}

} // namespace pnc
