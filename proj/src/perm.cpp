#include "pnc/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pnc {

Perm::Perm(int degree) : images_(static_cast<std::size_t>(degree)) {
  if (degree < 1) throw std::domain_error("Perm: degree must be positive");
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::domain_error("Perm: degree must be positive");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
      throw std::domain_error("Perm: image vector is not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  return Perm(std::move(inv));
}

long Perm::order() const {
  // lcm of cycle lengths
  long ord = 1;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    long len = 0;
    int j = i;
    do {
      seen[static_cast<std::size_t>(j)] = 1;
      j = images_[static_cast<std::size_t>(j)];
      ++len;
    } while (j != i);
    ord = std::lcm(ord, len);
  }
  return ord;
}

int Perm::fixed_points() const {
  int n = 0;
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] == i) ++n;
  return n;
}

Perm Perm::extended(int degree) const {
  if (degree < this->degree()) throw std::domain_error("Perm: cannot shrink degree");
  std::vector<int> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  for (int i = 0; i < this->degree(); ++i) im[static_cast<std::size_t>(i)] = images_[static_cast<std::size_t>(i)];
  return Perm(std::move(im));
}

Perm Perm::shifted(int offset, int degree) const {
  if (offset < 0 || offset + this->degree() > degree)
    throw std::domain_error("Perm: shift out of range");
  std::vector<int> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  for (int i = 0; i < this->degree(); ++i)
    im[static_cast<std::size_t>(i + offset)] = images_[static_cast<std::size_t>(i)] + offset;
  return Perm(std::move(im));
}

std::string Perm::cycle_string() const {
  std::ostringstream os;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || images_[static_cast<std::size_t>(i)] == i) continue;
    any = true;
    os << "(";
    int j = i;
    bool first = true;
    do {
      seen[static_cast<std::size_t>(j)] = 1;
      if (!first) os << " ";
      first = false;
      os << (j + 1);
      j = images_[static_cast<std::size_t>(j)];
    } while (j != i);
    os << ")";
  }
  if (!any) return "()";
  return os.str();
}

Perm Perm::parse_cycles(const std::string& text, int degree) {
  std::vector<int> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  skip_ws();
  if (pos == text.size()) throw std::domain_error("Perm: empty permutation text");
  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(')
      throw std::domain_error("Perm: expected '(' at offset " + std::to_string(pos));
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (pos >= text.size())
        throw std::domain_error("Perm: unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start)
        throw std::domain_error("Perm: expected point number at offset " + std::to_string(start));
      int pt = std::stoi(text.substr(start, pos - start));
      if (pt < 1 || pt > degree)
        throw std::domain_error("Perm: point " + std::to_string(pt) + " out of range 1.." +
                                std::to_string(degree));
      if (used[static_cast<std::size_t>(pt - 1)])
        throw std::domain_error("Perm: point " + std::to_string(pt) + " repeated");
      used[static_cast<std::size_t>(pt - 1)] = 1;
      cycle.push_back(pt - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos; // tolerated separator
    }
    // a singleton cycle is a fixed point, no-op
    for (std::size_t i = 0; cycle.size() > 1 && i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      im[static_cast<std::size_t>(from)] = to;
    }
  }
  skip_ws();
  if (pos != text.size())
    throw std::domain_error("Perm: trailing characters at offset " + std::to_string(pos));
  return Perm(std::move(im));
}

std::size_t Perm::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int v : images_) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw std::domain_error("Perm: degree mismatch in compose");
  std::vector<int> im(static_cast<std::size_t>(a.degree()));
  for (int i = 0; i < a.degree(); ++i) im[static_cast<std::size_t>(i)] = b[a[i]];
  return Perm(std::move(im));
}

Perm conjugate(const Perm& g, const Perm& s) {
  return compose(compose(s.inverse(), g), s);
}

Perm commutator(const Perm& x, const Perm& y) {
  return compose(compose(compose(x.inverse(), y.inverse()), x), y);
}

} // namespace pnc
