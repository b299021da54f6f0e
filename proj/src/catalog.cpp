#include "pnc/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <sstream>

#include "pnc/gf.hpp"

namespace pnc {

std::string GroupSpec::render() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << " x ";
    os << factors[i].family;
    if (!factors[i].params.empty()) {
      os << "(";
      for (std::size_t j = 0; j < factors[i].params.size(); ++j) {
        if (j) os << ",";
        os << factors[i].params[j];
      }
      os << ")";
    }
  }
  return os.str();
}

namespace {

const std::vector<std::string> kFamilies = {"S",    "A",    "C",     "D",    "Q8",  "Ab",
                                            "Heis", "AGL1", "PSL2",  "PSL33", "FSemi"};

bool known_family(const std::string& f) {
  return std::find(kFamilies.begin(), kFamilies.end(), f) != kFamilies.end();
}

bool zero_arity(const std::string& f) { return f == "Q8" || f == "PSL33"; }

} // namespace

GroupSpec parse_spec(const std::string& text) {
  GroupSpec spec;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  while (true) {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw SpecParseError("expected a family name", pos);
    GroupSpec::Factor factor;
    factor.family = text.substr(start, pos - start);
    if (!known_family(factor.family))
      throw SpecParseError("unknown family '" + factor.family + "'", start);
    skip_ws();
    if (pos < text.size() && text[pos] == '(') {
      if (zero_arity(factor.family))
        throw SpecParseError("family " + factor.family + " takes no parameters", pos);
      ++pos;
      while (true) {
        skip_ws();
        std::size_t nstart = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == nstart || (pos == nstart + 1 && text[nstart] == '-'))
          throw SpecParseError("malformed integer", nstart);
        factor.params.push_back(std::stol(text.substr(nstart, pos - nstart)));
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        throw SpecParseError("expected ',' or ')'", pos);
      }
    } else if (!zero_arity(factor.family)) {
      throw SpecParseError("family " + factor.family + " needs a parameter list", pos);
    }
    spec.factors.push_back(std::move(factor));
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] == 'x') {
      ++pos;
      continue;
    }
    throw SpecParseError("expected 'x' or end of spec", pos);
  }
  return spec;
}

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::domain_error(msg);
}

MadeGroup make_sym(long n, std::size_t bound) {
  require(n >= 1 && n <= 8, "S(n): n must be in 1..8");
  if (n == 1) return {Group::trivial(1), {}};
  std::vector<int> cyc(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = static_cast<int>((i + 1) % n);
  std::vector<int> tr(static_cast<std::size_t>(n));
  std::iota(tr.begin(), tr.end(), 0);
  std::swap(tr[0], tr[1]);
  return {Group::generate({Perm(tr), Perm(cyc)}, bound), {}};
}

MadeGroup make_alt(long n, std::size_t bound) {
  require(n >= 1 && n <= 8, "A(n): n must be in 1..8");
  if (n <= 2) return {Group::trivial(static_cast<int>(std::max(1l, n))), {}};
  std::vector<int> three(static_cast<std::size_t>(n));
  std::iota(three.begin(), three.end(), 0);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n == 3) return {Group::generate({Perm(three)}, bound), {}};
  std::vector<int> big(static_cast<std::size_t>(n));
  std::iota(big.begin(), big.end(), 0);
  if (n % 2 == 1) {
    for (long i = 0; i < n; ++i) big[static_cast<std::size_t>(i)] = static_cast<int>((i + 1) % n);
  } else {
    // (2 3 ... n), an (n-1)-cycle fixing the first point
    for (long i = 1; i < n; ++i)
      big[static_cast<std::size_t>(i)] = static_cast<int>(i == n - 1 ? 1 : i + 1);
  }
  return {Group::generate({Perm(three), Perm(big)}, bound), {}};
}

MadeGroup make_cyclic(long n, std::size_t bound) {
  require(n >= 1, "C(n): n must be positive");
  if (n == 1) return {Group::trivial(1), {}};
  std::vector<int> cyc(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = static_cast<int>((i + 1) % n);
  return {Group::generate({Perm(cyc)}, bound), {}};
}

MadeGroup make_dihedral(long n, std::size_t bound) {
  require(n >= 3, "D(n): n must be at least 3 (order 2n)");
  std::vector<int> rot(static_cast<std::size_t>(n)), refl(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    rot[static_cast<std::size_t>(i)] = static_cast<int>((i + 1) % n);
    refl[static_cast<std::size_t>(i)] = static_cast<int>(n - 1 - i);
  }
  return {Group::generate({Perm(rot), Perm(refl)}, bound), {}};
}

MadeGroup make_q8(std::size_t bound) {
  // regular action on {1,-1,i,-i,j,-j,k,-k} indexed 0..7
  Perm pi(std::vector<int>{2, 3, 1, 0, 7, 6, 4, 5}); // right multiplication by i
  Perm pj(std::vector<int>{4, 5, 6, 7, 1, 0, 3, 2}); // right multiplication by j
  MadeGroup out{Group::generate({pi, pj}, bound), {}};
  out.named.emplace("i", pi);
  out.named.emplace("j", pj);
  return out;
}

MadeGroup make_abelian(const std::vector<long>& parts, std::size_t bound) {
  require(!parts.empty(), "Ab: at least one factor");
  MadeGroup acc = make_cyclic(parts[0], bound);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    MadeGroup next = make_cyclic(parts[i], bound);
    // direct product on disjoint points
    int da = acc.group.degree(), db = next.group.degree();
    std::vector<Perm> gens;
    for (const Perm& g : acc.group.generators()) gens.push_back(g.extended(da + db));
    for (const Perm& g : next.group.generators()) gens.push_back(g.shifted(da, da + db));
    acc = {Group::generate(gens, bound), {}};
  }
  return acc;
}

MadeGroup make_heisenberg(long p, std::size_t bound) {
  require(is_prime(p) && p % 2 == 1, "Heis(p): p must be an odd prime");
  long deg = p * p * p;
  require(static_cast<std::size_t>(deg) <= bound, "Heis(p): degree exceeds closure bound");
  // row-vector action of I + a E12 + b E23 + c E13 on F_p^3
  auto act = [&](long a, long b, long c) {
    std::vector<int> im(static_cast<std::size_t>(deg));
    for (long v = 0; v < deg; ++v) {
      long v1 = v % p, v2 = (v / p) % p, v3 = v / (p * p);
      long w1 = v1;
      long w2 = (v2 + a * v1) % p;
      long w3 = (v3 + c * v1 + b * v2) % p;
      im[static_cast<std::size_t>(v)] = static_cast<int>(w1 + p * w2 + p * p * w3);
    }
    return Perm(im);
  };
  Perm x = act(1, 0, 0), y = act(0, 1, 0);
  MadeGroup out{Group::generate({x, y}, bound), {}};
  out.named.emplace("x", x);
  out.named.emplace("y", y);
  return out;
}

std::pair<long, int> prime_power(long q) {
  for (long p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    long t = q;
    int k = 0;
    while (t % p == 0) {
      t /= p;
      ++k;
    }
    if (t != 1) return {0, 0};
    return {p, k};
  }
  return {q, 1}; // q prime (or 1)
}

MadeGroup make_agl1(long q, std::size_t bound) {
  auto [p, k] = prime_power(q);
  require(p >= 2 && is_prime(p), "AGL1(q): q must be a prime power >= 2");
  GaloisField f(p, k);
  auto translation = [&](long x) {
    std::vector<int> im(static_cast<std::size_t>(q));
    for (long a = 0; a < q; ++a) im[static_cast<std::size_t>(a)] = static_cast<int>(f.add(a, x));
    return Perm(im);
  };
  auto multiplication = [&](long a) {
    std::vector<int> im(static_cast<std::size_t>(q));
    for (long x = 0; x < q; ++x) im[static_cast<std::size_t>(x)] = static_cast<int>(f.mul(x, a));
    return Perm(im);
  };
  Perm t1 = translation(f.one());
  Perm mg = multiplication(f.generator());
  MadeGroup out{q == 2 ? Group::generate({t1}, bound) : Group::generate({t1, mg}, bound), {}};
  out.named.emplace("t1", t1);
  out.named.emplace("mg", mg);
  return out;
}

MadeGroup make_psl2(long q, std::size_t bound) {
  auto [p, k] = prime_power(q);
  require(p >= 2 && is_prime(p) && q >= 4 && q <= 13, "PSL2(q): q must be a prime power in 4..13");
  GaloisField f(p, k);
  // projective line: points 0..q-1 are [x:1], point q is [1:0]
  auto act = [&](long a, long b, long c, long d) {
    std::vector<int> im(static_cast<std::size_t>(q) + 1);
    for (long pt = 0; pt <= q; ++pt) {
      long x = pt == q ? f.one() : pt;
      long y = pt == q ? f.zero() : f.one();
      long nx = f.add(f.mul(x, a), f.mul(y, c));
      long ny = f.add(f.mul(x, b), f.mul(y, d));
      long img;
      if (ny == f.zero()) {
        img = q; // [*:0] = infinity
      } else {
        img = f.mul(nx, f.inv(ny));
      }
      im[static_cast<std::size_t>(pt)] = static_cast<int>(img);
    }
    return Perm(im);
  };
  long g = f.generator();
  Perm t = act(f.one(), f.one(), f.zero(), f.one());
  Perm tl = act(f.one(), f.zero(), f.one(), f.one());
  Perm dg = act(g, f.zero(), f.zero(), f.inv(g));
  return {Group::generate({t, tl, dg}, bound), {}};
}

MadeGroup make_psl33(std::size_t bound) {
  const long p = 3;
  // 13 projective points of F_3^3 (row vectors, first nonzero coordinate 1),
  // enumerated in lexicographic order of (v0,v1,v2)
  std::vector<std::array<long, 3>> points;
  for (long v0 = 0; v0 < p; ++v0)
    for (long v1 = 0; v1 < p; ++v1)
      for (long v2 = 0; v2 < p; ++v2) {
        std::array<long, 3> v{v0, v1, v2};
        long lead = v[0] ? v[0] : v[1] ? v[1] : v[2];
        if (lead != 1) continue;
        points.push_back(v);
      }
  auto point_index = [&](std::array<long, 3> v) {
    long lead = v[0] ? v[0] : v[1] ? v[1] : v[2];
    long inv = lead == 1 ? 1 : 2; // inverse mod 3
    for (auto& c : v) c = c * inv % p;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i] == v) return static_cast<int>(i);
    throw std::logic_error("PSL33: projective point lookup failed");
  };
  auto act = [&](const std::array<std::array<long, 3>, 3>& m) {
    std::vector<int> im(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::array<long, 3> w{0, 0, 0};
      for (int col = 0; col < 3; ++col)
        for (int row = 0; row < 3; ++row)
          w[static_cast<std::size_t>(col)] =
              (w[static_cast<std::size_t>(col)] +
               points[i][static_cast<std::size_t>(row)] * m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]) %
              p;
      im[i] = point_index(w);
    }
    return Perm(im);
  };
  std::vector<Perm> gens;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      std::array<std::array<long, 3>, 3> m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
      gens.push_back(act(m));
    }
  Perm r = act({{{0, 2, 0}, {1, 0, 0}, {0, 0, 1}}}); // -1 = 2 mod 3
  Perm fm = act({{{1, 0, 0}, {0, 2, 0}, {0, 0, 2}}});
  gens.push_back(r);
  gens.push_back(fm);
  MadeGroup out{Group::generate(gens, bound), {}};
  out.named.emplace("r", r);
  out.named.emplace("f", fm);
  return out;
}

MadeGroup make_fsemi(long p, std::size_t bound) {
  require(is_prime(p) && p % 4 == 1, "FSemi(p): p must be a prime congruent to 1 mod 4");
  long q = p * p;
  GaloisField f(p, 2);
  long d = (p + 1) / 2;
  long omega = f.pow(f.generator(), (q - 1) / d); // multiplicative order d
  auto translation = [&](long x) {
    std::vector<int> im(static_cast<std::size_t>(q));
    for (long a = 0; a < q; ++a) im[static_cast<std::size_t>(a)] = static_cast<int>(f.add(a, x));
    return Perm(im);
  };
  std::vector<int> mul_im(static_cast<std::size_t>(q));
  for (long x = 0; x < q; ++x) mul_im[static_cast<std::size_t>(x)] = static_cast<int>(f.mul(x, omega));
  Perm t1 = translation(f.one());
  Perm mo(mul_im);
  MadeGroup out{Group::generate({t1, mo}, bound), {}};
  out.named.emplace("t1", t1);
  out.named.emplace("momega", mo);
  return out;
}

MadeGroup make_factor(const GroupSpec::Factor& f, std::size_t bound) {
  const auto& ps = f.params;
  auto arity = [&](std::size_t lo, std::size_t hi) {
    require(ps.size() >= lo && ps.size() <= hi,
            f.family + ": expected " + std::to_string(lo) +
                (hi == lo ? "" : ".." + std::to_string(hi)) + " parameter(s)");
  };
  if (f.family == "S") {
    arity(1, 1);
    return make_sym(ps[0], bound);
  }
  if (f.family == "A") {
    arity(1, 1);
    return make_alt(ps[0], bound);
  }
  if (f.family == "C") {
    arity(1, 1);
    return make_cyclic(ps[0], bound);
  }
  if (f.family == "D") {
    arity(1, 1);
    return make_dihedral(ps[0], bound);
  }
  if (f.family == "Q8") return make_q8(bound);
  if (f.family == "Ab") {
    arity(1, 16);
    return make_abelian(ps, bound);
  }
  if (f.family == "Heis") {
    arity(1, 1);
    return make_heisenberg(ps[0], bound);
  }
  if (f.family == "AGL1") {
    arity(1, 1);
    return make_agl1(ps[0], bound);
  }
  if (f.family == "PSL2") {
    arity(1, 1);
    return make_psl2(ps[0], bound);
  }
  if (f.family == "PSL33") return make_psl33(bound);
  if (f.family == "FSemi") {
    arity(1, 1);
    return make_fsemi(ps[0], bound);
  }
  throw std::domain_error("unknown family " + f.family);
}

} // namespace

MadeGroup make_group(const GroupSpec& spec, std::size_t closure_bound) {
  require(!spec.factors.empty(), "empty group spec");
  MadeGroup acc = make_factor(spec.factors[0], closure_bound);
  for (std::size_t i = 1; i < spec.factors.size(); ++i) {
    MadeGroup next = make_factor(spec.factors[i], closure_bound);
    int da = acc.group.degree(), db = next.group.degree();
    std::vector<Perm> gens;
    for (const Perm& g : acc.group.generators()) gens.push_back(g.extended(da + db));
    for (const Perm& g : next.group.generators()) gens.push_back(g.shifted(da, da + db));
    acc = {Group::generate(gens, closure_bound), {}};
  }
  return acc;
}

MadeGroup make_group(const std::string& spec_text, std::size_t closure_bound) {
  return make_group(parse_spec(spec_text), closure_bound);
}

const std::vector<std::string>& catalog_specs() {
  static const std::vector<std::string> specs = {
      "C(1)",     "C(2)",     "C(3)",     "C(4)",    "C(6)",    "C(8)",    "C(12)",
      "Ab(2,2)",  "Ab(2,4)",  "Ab(3,3)",  "Ab(2,2,2)",
      "D(3)",     "D(4)",     "D(5)",     "D(6)",    "D(8)",    "D(12)",
      "Q8",       "Heis(3)",  "C(2) x D(4)",
      "S(3)",     "S(4)",     "S(5)",     "S(6)",
      "A(4)",     "A(5)",     "A(6)",
      "AGL1(5)",  "AGL1(7)",  "AGL1(8)",  "AGL1(9)", "AGL1(11)", "AGL1(13)", "AGL1(27)",
      "PSL2(4)",  "PSL2(5)",  "PSL2(7)",  "PSL2(8)", "PSL2(9)",
      "PSL33",    "FSemi(5)",
  };
  return specs;
}

} // namespace pnc
