#include "pnc/chartable.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>

#include "pnc/gf.hpp" // is_prime

namespace pnc {

namespace {

long mod_mul(long a, long b, long ell) { return a * b % ell; }

long mod_pow(long b, long e, long ell) {
  long acc = 1 % ell;
  b %= ell;
  while (e > 0) {
    if (e & 1) acc = mod_mul(acc, b, ell);
    b = mod_mul(b, b, ell);
    e >>= 1;
  }
  return acc;
}

long mod_inv(long a, long ell) {
  a %= ell;
  if (a < 0) a += ell;
  if (a == 0) throw std::logic_error("mod_inv of zero");
  return mod_pow(a, ell - 2, ell);
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

using Mat = std::vector<std::vector<long>>;

// Basis of { x : a x = 0 } over F_ell; a is rows x cols, kernel vectors have
// length cols.
std::vector<std::vector<long>> nullspace(Mat a, long ell) {
  const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  std::vector<int> pivot_row_of_col(cols, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && a[sel][col] % ell == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[row]);
    long inv = mod_inv(a[row][col], ell);
    for (std::size_t j = 0; j < cols; ++j) a[row][j] = mod_mul(a[row][j] % ell, inv, ell);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row) continue;
      long f = a[i][col] % ell;
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        a[i][j] = ((a[i][j] - f * a[row][j]) % ell + ell) % ell;
    }
    pivot_row_of_col[col] = static_cast<int>(row);
    ++row;
  }
  std::vector<std::vector<long>> kernel;
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivot_row_of_col[f] >= 0) continue;
    std::vector<long> x(cols, 0);
    x[f] = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      int p = pivot_row_of_col[c];
      if (p >= 0) x[c] = (ell - a[static_cast<std::size_t>(p)][f] % ell) % ell;
    }
    kernel.push_back(std::move(x));
  }
  return kernel;
}

struct TableDefect : std::logic_error {
  explicit TableDefect(const std::string& w) : std::logic_error("character table defect: " + w) {}
};

bool row_less(const ClassFunction& a, long long da, const ClassFunction& b, long long db) {
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    if (a.values()[i] != b.values()[i]) return cyc_value_less(a.values()[i], b.values()[i]);
  }
  return false;
}

CharacterTable finish_table(const Group& g, std::vector<ClassFunction> rows) {
  std::vector<long long> degrees;
  degrees.reserve(rows.size());
  std::vector<std::size_t> idx(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    idx[i] = i;
    degrees.push_back(rows[i].degree_value().rational_value().to_int());
  }
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    return row_less(rows[i], degrees[i], rows[j], degrees[j]);
  });
  CharacterTable t;
  t.group = g;
  long long sum_sq = 0;
  for (std::size_t i : idx) {
    t.irreducibles.push_back(std::move(rows[i]));
    t.degrees.push_back(degrees[i]);
    sum_sq += degrees[i] * degrees[i];
  }
  if (sum_sq != static_cast<long long>(g.order()))
    throw TableDefect("degree squares do not sum to the group order");
  if (t.irreducibles.size() != g.classes().size())
    throw TableDefect("row count differs from class count");
  if (!(t.irreducibles[0] == trivial_character(g)))
    throw TableDefect("first row is not the trivial character");
  return t;
}

CharacterTable dixon_schneider(const Group& g) {
  const auto& classes = g.classes();
  const int r = static_cast<int>(classes.size());
  const long m = g.exponent();
  const long n = static_cast<long>(g.order());

  // Smallest prime ell = 1 (mod m) with ell > 2 sqrt(|G|): the field Z/ell
  // then contains order-m roots of unity and degrees lift uniquely.
  long ell = 0;
  for (long k = 1; k < 2'000'000; ++k) {
    long cand = k * m + 1;
    if (cand * cand > 4 * n && is_prime(cand)) {
      ell = cand;
      break;
    }
  }
  if (ell == 0) throw TableDefect("no suitable lifting prime found");

  long w = 0;
  auto factors = prime_factors(ell - 1);
  for (long cand = 2; cand < ell; ++cand) {
    bool prim = true;
    for (long p : factors)
      if (mod_pow(cand, (ell - 1) / p, ell) == 1) {
        prim = false;
        break;
      }
    if (prim) {
      w = cand;
      break;
    }
  }
  const long z = mod_pow(w, (ell - 1) / m, ell);

  std::vector<long> h(static_cast<std::size_t>(r));
  std::vector<long> hinv(static_cast<std::size_t>(r));
  std::vector<int> inv_class(static_cast<std::size_t>(r));
  std::vector<std::vector<int>> pow_class(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) {
    h[static_cast<std::size_t>(k)] = static_cast<long>(classes[static_cast<std::size_t>(k)].size());
    hinv[static_cast<std::size_t>(k)] = mod_inv(h[static_cast<std::size_t>(k)], ell);
    const Perm& rep = classes[static_cast<std::size_t>(k)].representative;
    inv_class[static_cast<std::size_t>(k)] = g.class_of(rep.inverse());
    auto& pk = pow_class[static_cast<std::size_t>(k)];
    pk.resize(static_cast<std::size_t>(m));
    Perm x(g.degree());
    for (long u = 0; u < m; ++u) {
      pk[static_cast<std::size_t>(u)] = g.class_of(x);
      x = compose(x, rep);
    }
  }

  auto class_matrix = [&](int i) {
    Mat mat(static_cast<std::size_t>(r), std::vector<long>(static_cast<std::size_t>(r), 0));
    for (const Perm& x : classes[static_cast<std::size_t>(i)].members) {
      Perm xi = x.inverse();
      for (int k = 0; k < r; ++k) {
        Perm y = compose(xi, classes[static_cast<std::size_t>(k)].representative);
        mat[static_cast<std::size_t>(g.class_of(y))][static_cast<std::size_t>(k)] += 1;
      }
    }
    for (auto& row : mat)
      for (long& v : row) v %= ell;
    return mat;
  };

  // Split the coordinate space into common eigenspaces of the class-sum
  // matrices, processing matrices in class order until every subspace is a
  // line.
  std::vector<Mat> spaces;
  {
    Mat full(static_cast<std::size_t>(r), std::vector<long>(static_cast<std::size_t>(r), 0));
    for (int i = 0; i < r; ++i) full[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    spaces.push_back(std::move(full));
  }
  for (int i = 1; i < r; ++i) {
    bool all_lines = true;
    for (const Mat& b : spaces)
      if (b.size() > 1) {
        all_lines = false;
        break;
      }
    if (all_lines) break;
    Mat mat = class_matrix(i);
    std::vector<Mat> next;
    for (Mat& b : spaces) {
      const std::size_t d = b.size();
      if (d == 1) {
        next.push_back(std::move(b));
        continue;
      }
      // c = mat * b^T, r x d
      Mat c(static_cast<std::size_t>(r), std::vector<long>(d, 0));
      for (std::size_t row = 0; row < static_cast<std::size_t>(r); ++row)
        for (std::size_t col = 0; col < d; ++col) {
          long acc = 0;
          for (std::size_t k = 0; k < static_cast<std::size_t>(r); ++k)
            acc = (acc + mat[row][k] * b[col][k]) % ell;
          c[row][col] = acc;
        }
      std::size_t remaining = d;
      for (long lambda = 0; lambda < ell && remaining > 0; ++lambda) {
        Mat a(static_cast<std::size_t>(r), std::vector<long>(d, 0));
        for (std::size_t row = 0; row < static_cast<std::size_t>(r); ++row)
          for (std::size_t col = 0; col < d; ++col)
            a[row][col] = ((c[row][col] - lambda * b[col][row]) % ell + ell) % ell;
        auto kernel = nullspace(std::move(a), ell);
        if (kernel.empty()) continue;
        Mat sub;
        for (const auto& x : kernel) {
          std::vector<long> v(static_cast<std::size_t>(r), 0);
          for (std::size_t j = 0; j < d; ++j) {
            if (x[j] == 0) continue;
            for (std::size_t k = 0; k < static_cast<std::size_t>(r); ++k)
              v[k] = (v[k] + x[j] * b[j][k]) % ell;
          }
          sub.push_back(std::move(v));
        }
        remaining -= sub.size();
        next.push_back(std::move(sub));
      }
      if (remaining != 0) throw TableDefect("eigenspace splitting lost dimensions");
    }
    spaces = std::move(next);
  }
  for (const Mat& b : spaces)
    if (b.size() != 1) throw TableDefect("class matrices failed to split the space");

  // Normalize, recover degrees, then the character values mod ell.
  std::vector<std::vector<long>> cbar;
  std::vector<long long> degs;
  for (const Mat& b : spaces) {
    std::vector<long> u = b[0];
    if (u[0] % ell == 0) throw TableDefect("eigenvector vanishes on the identity class");
    long scale = mod_inv(u[0], ell);
    for (long& v : u) v = mod_mul(((v % ell) + ell) % ell, scale, ell);
    long s = 0;
    for (int k = 0; k < r; ++k)
      s = (s + mod_mul(mod_mul(u[static_cast<std::size_t>(k)],
                               u[static_cast<std::size_t>(inv_class[static_cast<std::size_t>(k)])], ell),
                       hinv[static_cast<std::size_t>(k)], ell)) %
          ell;
    long d2 = mod_mul(n % ell, mod_inv(s, ell), ell);
    long long deg = 0;
    for (long long d = 1; d * d <= n; ++d)
      if (d * d % ell == d2) {
        deg = d;
        break;
      }
    if (deg == 0 || n % deg != 0)
      throw TableDefect("irreducible degree could not be recovered");
    std::vector<long> row(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k)
      row[static_cast<std::size_t>(k)] =
          mod_mul(mod_mul(deg % ell, u[static_cast<std::size_t>(k)], ell),
                  hinv[static_cast<std::size_t>(k)], ell);
    cbar.push_back(std::move(row));
    degs.push_back(deg);
  }

  // Lift each value exactly: recover the multiset of eigenvalue exponents by
  // a discrete Fourier inversion over Z/ell, then assemble the cyclotomic.
  std::vector<long> zpow(static_cast<std::size_t>(m));
  for (long j = 0; j < m; ++j) zpow[static_cast<std::size_t>(j)] = mod_pow(z, j, ell);
  const long minv = mod_inv(m % ell, ell);
  std::vector<ClassFunction> rows;
  for (int t = 0; t < r; ++t) {
    std::vector<Cyclotomic> vals;
    vals.reserve(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) {
      std::vector<long long> dense(static_cast<std::size_t>(m), 0);
      long long total = 0;
      for (long j = 0; j < m; ++j) {
        long acc = 0;
        for (long u = 0; u < m; ++u) {
          int pc = pow_class[static_cast<std::size_t>(k)][static_cast<std::size_t>(u)];
          long zexp = (m - (j * u % m)) % m;
          acc = (acc + mod_mul(cbar[static_cast<std::size_t>(t)][static_cast<std::size_t>(pc)],
                               zpow[static_cast<std::size_t>(zexp)], ell)) %
                ell;
        }
        long mult = mod_mul(acc, minv, ell);
        if (mult > degs[static_cast<std::size_t>(t)])
          throw TableDefect("eigenvalue multiplicity exceeds the degree");
        dense[static_cast<std::size_t>(j)] = mult;
        total += mult;
      }
      if (total != degs[static_cast<std::size_t>(t)])
        throw TableDefect("eigenvalue multiplicities do not sum to the degree");
      vals.push_back(Cyclotomic::from_integer_dense(dense, m));
    }
    rows.emplace_back(g, std::move(vals));
  }
  return finish_table(g, std::move(rows));
}

std::mutex g_table_mutex;
std::map<std::uint64_t, std::vector<std::unique_ptr<CharacterTable>>> g_table_memo;
std::atomic<std::size_t> g_tables_computed{0};

const CharacterTable* find_cached(const Group& g) {
  auto it = g_table_memo.find(g.element_digest());
  if (it == g_table_memo.end()) return nullptr;
  for (const auto& t : it->second)
    if (t->group.same_elements(g)) return t.get();
  return nullptr;
}

} // namespace

CharacterTable compute_character_table(const Group& g) {
  g_tables_computed.fetch_add(1);
  if (g.is_abelian()) {
    std::vector<ClassFunction> rows = linear_characters(g);
    long m = g.exponent();
    // normalize all values into the exponent field for stable encoding
    std::vector<ClassFunction> normalized;
    for (auto& row : rows) {
      std::vector<Cyclotomic> vals;
      for (const auto& v : row.values()) vals.push_back(v.embedded(m));
      normalized.emplace_back(g, std::move(vals));
    }
    return finish_table(g, std::move(normalized));
  }
  return dixon_schneider(g);
}

const CharacterTable& character_table(const Group& g) {
  {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    if (const CharacterTable* t = find_cached(g)) return *t;
  }
  CharacterTable fresh = compute_character_table(g);
  std::lock_guard<std::mutex> lock(g_table_mutex);
  if (const CharacterTable* t = find_cached(g)) return *t;
  auto& slot = g_table_memo[g.element_digest()];
  slot.push_back(std::make_unique<CharacterTable>(std::move(fresh)));
  return *slot.back();
}

const CharacterTable& adopt_character_table(CharacterTable table) {
  const Group& g = table.group;
  if (table.irreducibles.size() != g.classes().size())
    throw std::domain_error("adopt_character_table: row count mismatch");
  long long sum_sq = 0;
  for (std::size_t i = 0; i < table.degrees.size(); ++i) {
    if (table.irreducibles[i].values().size() != g.classes().size())
      throw std::domain_error("adopt_character_table: value count mismatch");
    sum_sq += table.degrees[i] * table.degrees[i];
  }
  if (sum_sq != static_cast<long long>(g.order()))
    throw std::domain_error("adopt_character_table: degree squares do not sum to group order");
  std::lock_guard<std::mutex> lock(g_table_mutex);
  if (const CharacterTable* t = find_cached(g)) return *t;
  auto& slot = g_table_memo[g.element_digest()];
  slot.push_back(std::make_unique<CharacterTable>(std::move(table)));
  return *slot.back();
}

std::size_t character_tables_computed() { return g_tables_computed.load(); }

const CharacterTable* character_table_if_memoized(const Group& g) {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  return find_cached(g);
}

std::vector<long long> decompose(const ClassFunction& chi, const CharacterTable& table) {
  if (!chi.group().same_elements(table.group))
    throw std::domain_error("decompose: class function lives on a different group");
  std::vector<long long> mult;
  mult.reserve(table.irreducibles.size());
  for (const auto& irr : table.irreducibles) {
    Cyclotomic ip = inner_product(chi, irr, table.group);
    if (!ip.is_rational())
      throw std::domain_error("decompose: not a character (irrational multiplicity)");
    Rational r = ip.rational_value();
    if (!r.is_integer() || r.sign() < 0)
      throw std::domain_error("decompose: not a character (multiplicity " + r.str() + ")");
    mult.push_back(r.to_int());
  }
  return mult;
}

std::uint64_t table_digest(const CharacterTable& table) {
  std::uint64_t hsh = 1469598103934665603ull;
  auto feed = [&hsh](const std::string& s) {
    for (unsigned char ch : s) {
      hsh ^= ch;
      hsh *= 1099511628211ull;
    }
  };
  for (const auto& c : table.group.classes()) {
    feed(c.representative.cycle_string());
    feed(std::to_string(c.size()));
  }
  for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
    feed(std::to_string(table.degrees[i]));
    for (const auto& v : table.irreducibles[i].values()) feed(v.encode());
  }
  return hsh;
}

} // namespace pnc
