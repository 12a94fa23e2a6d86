#include "fuscat/catalog.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <regex>
#include <shared_mutex>

#include "fuscat/error.hpp"

namespace fuscat {

namespace {

using Tensor = std::vector<std::vector<std::vector<int>>>;

Tensor zero_tensor(std::size_t r) { return Tensor(r, std::vector<std::vector<int>>(r, std::vector<int>(r, 0))); }

Matrix outer(const std::vector<CycNum>& d) {
  Matrix m(d.size(), std::vector<CycNum>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) m[i][j] = d[i] * d[j];
  return m;
}

CycNum sqrt2() { return CycNum::zeta(8, 1) - CycNum::zeta(8, 3); }

CatalogEntry make_trivial() {
  FusionData d{{"1"}, Tensor{{{1}}}, {0}, std::vector<CycNum>{CycNum(1)}};
  return make_entry("trivial", std::move(d), Matrix{{CycNum(1)}}, Matrix{{CycNum(1)}}, std::vector<CycNum>{CycNum(1)},
                    "Vec: rank one.");
}

// Cyclic fusion Z_n: a (x) b = a + b mod n.
FusionData cyclic_fusion(unsigned n, std::vector<std::string> names) {
  FusionData d;
  d.names = std::move(names);
  d.tensor = zero_tensor(n);
  for (unsigned a = 0; a < n; ++a) {
    d.dual.push_back((n - a) % n);
    for (unsigned b = 0; b < n; ++b) d.tensor[a][b][(a + b) % n] = 1;
  }
  d.fpdims = std::vector<CycNum>(n, CycNum(1));
  return d;
}

Matrix cyclic_table(unsigned n) {
  Matrix t(n, std::vector<CycNum>(n));
  for (unsigned a = 0; a < n; ++a)
    for (unsigned j = 0; j < n; ++j) t[a][j] = CycNum::zeta(n, static_cast<long>(a * j));
  return t;
}

CatalogEntry make_svec() {
  return make_entry("svec", cyclic_fusion(2, {"1", "f"}), cyclic_table(2), outer({CycNum(1), CycNum(1)}),
                    std::vector<CycNum>{CycNum(1), CycNum(-1)},
                    "sVec: Z/2 fusion, S all ones, fermion twist -1.");
}

CatalogEntry make_pointed(const std::string& key, unsigned n, unsigned c) {
  std::vector<std::string> names;
  for (unsigned a = 0; a < n; ++a) names.push_back(std::to_string(a));
  Matrix s(n, std::vector<CycNum>(n));
  std::vector<CycNum> twists;
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; b < n; ++b) s[a][b] = CycNum::zeta(2 * n, static_cast<long>(2 * c * a * b));
    // q(a) = zeta_{2n}^{c a^2}; for odd n the representative zeta_n^{c a^2 (n+1)/2}
    // is well defined on Z/n and has the same associated bicharacter.
    if (n % 2 == 0) {
      twists.push_back(CycNum::zeta(2 * n, static_cast<long>(c * a * a)));
    } else {
      twists.push_back(CycNum::zeta(n, static_cast<long>(c * a * a * ((n + 1) / 2))));
    }
  }
  return make_entry(key, cyclic_fusion(n, std::move(names)), cyclic_table(n), std::move(s), std::move(twists),
                    "C(Z/" + std::to_string(n) + ", q) with q(a) = zeta_" + std::to_string(2 * n) + "^(" +
                        std::to_string(c) + " a^2), s_ab = q(a+b)/(q(a) q(b)).");
}

CatalogEntry make_ising() {
  const CycNum r2 = sqrt2();
  FusionData d;
  d.names = {"1", "eps", "sigma"};
  d.tensor = zero_tensor(3);
  d.dual = {0, 1, 2};
  for (int i = 0; i < 3; ++i) {
    d.tensor[0][i][i] = 1;
    d.tensor[i][0][i] = 1;
  }
  d.tensor[1][1][0] = 1;
  d.tensor[1][2][2] = 1;
  d.tensor[2][1][2] = 1;
  d.tensor[2][2][0] = 1;
  d.tensor[2][2][1] = 1;
  d.fpdims = std::vector<CycNum>{CycNum(1), CycNum(1), r2};
  Matrix table{{1, 1, 1}, {1, 1, -1}, {r2, -r2, 0}};
  Matrix s{{1, 1, r2}, {1, 1, -r2}, {r2, -r2, 0}};
  return make_entry("ising", std::move(d), std::move(table), std::move(s),
                    std::vector<CycNum>{CycNum(1), CycNum(-1), CycNum::zeta(16, 1)},
                    "Ising: d_sigma = zeta_8 - zeta_8^3 = sqrt 2, standard S, twist zeta_16 on sigma.");
}

CatalogEntry make_fib() {
  const CycNum phi = golden_ratio();
  FusionData d;
  d.names = {"1", "tau"};
  d.tensor = zero_tensor(2);
  d.dual = {0, 1};
  d.tensor[0][0][0] = 1;
  d.tensor[0][1][1] = 1;
  d.tensor[1][0][1] = 1;
  d.tensor[1][1][0] = 1;
  d.tensor[1][1][1] = 1;
  d.fpdims = std::vector<CycNum>{CycNum(1), phi};
  Matrix table{{1, 1}, {phi, CycNum(1) - phi}};
  Matrix s{{1, phi}, {phi, -1}};
  return make_entry("fib", std::move(d), std::move(table), std::move(s),
                    std::vector<CycNum>{CycNum(1), CycNum::zeta(5, 2)},
                    "Fibonacci: phi = (1 + sqrt 5)/2 with sqrt 5 = 1 + 2 zeta_5 + 2 zeta_5^4, S = [[1, phi], [phi, -1]].");
}

CatalogEntry make_rep_s3() {
  FusionData d;
  d.names = {"1", "sgn", "V"};
  d.tensor = zero_tensor(3);
  d.dual = {0, 1, 2};
  for (int i = 0; i < 3; ++i) {
    d.tensor[0][i][i] = 1;
    d.tensor[i][0][i] = 1;
  }
  d.tensor[1][1][0] = 1;
  d.tensor[1][2][2] = 1;
  d.tensor[2][1][2] = 1;
  d.tensor[2][2][0] = 1;
  d.tensor[2][2][1] = 1;
  d.tensor[2][2][2] = 1;
  const std::vector<CycNum> dims{CycNum(1), CycNum(1), CycNum(2)};
  d.fpdims = dims;
  // Columns: classes of e, (12), (123).
  Matrix table{{1, 1, 1}, {1, -1, 1}, {2, 0, -1}};
  return make_entry("rep-s3", std::move(d), std::move(table), outer(dims), std::vector<CycNum>(3, CycNum(1)),
                    "Rep(S_3): S_3 character table over the classes e, (12), (123); symmetric S = d d^T.");
}

// Truncated Clebsch-Gordan rule at level k.
Tensor su2_fusion(unsigned k) {
  const std::size_t r = k + 1;
  Tensor t = zero_tensor(r);
  for (unsigned i = 0; i <= k; ++i)
    for (unsigned j = 0; j <= k; ++j) {
      const unsigned lo = i > j ? i - j : j - i;
      const unsigned hi = std::min(i + j, 2 * k - i - j);
      for (unsigned l = lo; l <= hi; l += 2) t[i][j][l] = 1;
    }
  return t;
}

// [n] = (q^n - q^-n)/(q - q^-1), q = zeta_{2(k+2)}, inside Q(zeta_{4(k+2)}).
CycNum quantum_integer(unsigned k, long n) {
  const unsigned cond = 4 * (k + 2);
  const CycNum num = CycNum::zeta(cond, 2 * n) - CycNum::zeta(cond, -2 * n);
  const CycNum den = CycNum::zeta(cond, 2) - CycNum::zeta(cond, -2);
  return num / den;
}

CatalogEntry make_su2(const std::string& key, unsigned k) {
  const std::size_t r = k + 1;
  FusionData d;
  for (unsigned i = 0; i <= k; ++i) d.names.push_back("X" + std::to_string(i));
  d.tensor = su2_fusion(k);
  for (std::size_t i = 0; i < r; ++i) d.dual.push_back(i);
  Matrix s(r, std::vector<CycNum>(r));
  const double step = std::numbers::pi / (k + 2);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      s[i][j] = quantum_integer(k, static_cast<long>((i + 1) * (j + 1)));
      const double expect = std::sin((i + 1) * (j + 1) * step) / std::sin(step);
      if (std::abs(embed_complex(s[i][j]) - expect) > 1e-9) {
        throw Error(Errc::Validation, key + ": exact S entry disagrees with the sine formula at (" +
                                          std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  d.fpdims = s[0];
  Matrix table(r, std::vector<CycNum>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t m = 0; m < r; ++m) table[i][m] = s[i][m] / s[0][m];
  std::vector<CycNum> twists;
  for (unsigned j = 0; j <= k; ++j) twists.push_back(CycNum::zeta(4 * (k + 2), static_cast<long>(j * (j + 2))));
  return make_entry(key, std::move(d), std::move(table), std::move(s), std::move(twists),
                    "SU(2)_" + std::to_string(k) + ": d_i = [i+1], s_ij = [(i+1)(j+1)] with q = zeta_" +
                        std::to_string(2 * (k + 2)) + "; truncated Clebsch-Gordan fusion; mu_m(chi_i) = s_im/s_0m.");
}

// Full subcategory of SU(2)_4 on the integer spins X0, X2, X4.
CatalogEntry make_su2_4_ad() {
  const CatalogEntry& full = builtin("su2k-4");
  const std::vector<std::size_t> even{0, 2, 4};
  FusionData d;
  d.tensor = zero_tensor(3);
  for (std::size_t a = 0; a < 3; ++a) {
    d.names.push_back(full.ring.names()[even[a]]);
    d.dual.push_back(a);
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c) d.tensor[a][b][c] = full.ring.N(even[a], even[b], even[c]);
  }
  Matrix s(3, std::vector<CycNum>(3));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) s[a][b] = (*full.smatrix)(even[a], even[b]);
  d.fpdims = s[0];
  // Same fusion as Rep(S_3) with X4 ~ sgn and X2 ~ V.
  Matrix table{{1, 1, 1}, {2, 0, -1}, {1, -1, 1}};
  std::vector<CycNum> twists;
  for (auto i : even) twists.push_back((*full.twists)[i]);
  return make_entry("su2k-4-ad", std::move(d), std::move(table), std::move(s), std::move(twists),
                    "Integer-spin subcategory of SU(2)_4 with the restricted S-matrix; X4 is transparent and fixes X2.");
}

CatalogEntry build(const std::string& key) {
  static const std::regex pointed_re(R"(pointed-z([0-9]+)-q([0-9]+))");
  static const std::regex su2_re(R"(su2k-([0-9]+))");
  std::smatch m;
  if (key == "trivial") return make_trivial();
  if (key == "svec") return make_svec();
  if (key == "ising") return make_ising();
  if (key == "fib") return make_fib();
  if (key == "rep-s3") return make_rep_s3();
  if (key == "su2k-4-ad") return make_su2_4_ad();
  if (std::regex_match(key, m, su2_re)) {
    const unsigned long k = std::stoul(m[1]);
    if (k >= 1 && k <= 16) return make_su2(key, static_cast<unsigned>(k));
  }
  if (std::regex_match(key, m, pointed_re)) {
    const unsigned long n = std::stoul(m[1]);
    const unsigned long c = std::stoul(m[2]);
    if (n >= 1 && n <= 16) return make_pointed(key, static_cast<unsigned>(n), static_cast<unsigned>(c % (2 * n)));
  }
  if (auto star = key.find('*'); star != std::string::npos) {
    CatalogEntry p = product(builtin(key.substr(0, star)), builtin(key.substr(star + 1)));
    p.key = key;
    return p;
  }
  throw Error(Errc::UnknownKey, "no built-in category named '" + key + "'");
}

}  // namespace

CatalogEntry make_entry(std::string key, FusionData data, std::optional<Matrix> table, std::optional<Matrix> smatrix,
                        std::optional<std::vector<CycNum>> twists, std::string provenance) {
  if (twists && twists->size() != data.names.size()) {
    throw Error(Errc::Validation, "twists must have one entry per simple");
  }
  CatalogEntry e{std::move(key), validate_fusion_ring(std::move(data)), std::nullopt, std::nullopt, std::move(twists),
                 std::move(provenance)};
  if (table) e.table = validate_character_table(e.ring, std::move(*table));
  if (smatrix) {
    if (!e.table) throw Error(Errc::ExactDataMissing, "an S-matrix needs a character table");
    e.smatrix = validate_smatrix(e.ring, *e.table, std::move(*smatrix));
  }
  return e;
}

const std::vector<std::string>& builtin_keys() {
  static const std::vector<std::string> keys{
      "trivial",       "svec",          "ising",         "fib",           "rep-s3",
      "su2k-2",        "su2k-3",        "su2k-4",        "su2k-4-ad",     "pointed-z2-q1",
      "pointed-z3-q1", "pointed-z4-q1", "pointed-z4-q2", "ising*svec",    "svec*svec",
      "fib*svec"};
  return keys;
}

const CatalogEntry& builtin(const std::string& key) {
  static std::shared_mutex mutex;
  static std::map<std::string, std::unique_ptr<const CatalogEntry>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto fresh = std::make_unique<const CatalogEntry>(build(key));
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.try_emplace(key, std::move(fresh));
  return *it->second;
}

CatalogEntry product(const CatalogEntry& a, const CatalogEntry& b) {
  const std::size_t ra = a.ring.rank(), rb = b.ring.rank(), r = ra * rb;
  FusionData d = deligne_product(a.ring, b.ring).to_data();
  std::optional<Matrix> table, s;
  std::optional<std::vector<CycNum>> twists;
  auto tensor = [&](auto&& fa, auto&& fb) {
    Matrix m(r, std::vector<CycNum>(r));
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = 0; y < r; ++y) m[x][y] = fa(x / rb, y / rb) * fb(x % rb, y % rb);
    return m;
  };
  if (a.table && b.table) {
    table = tensor([&](auto i, auto j) { return a.table->alpha(i, j); },
                   [&](auto i, auto j) { return b.table->alpha(i, j); });
  }
  if (a.smatrix && b.smatrix) {
    s = tensor([&](auto i, auto j) { return (*a.smatrix)(i, j); }, [&](auto i, auto j) { return (*b.smatrix)(i, j); });
  }
  if (a.twists && b.twists) {
    twists.emplace();
    for (std::size_t x = 0; x < r; ++x) twists->push_back((*a.twists)[x / rb] * (*b.twists)[x % rb]);
  }
  return make_entry(a.key + "*" + b.key, std::move(d), std::move(table), std::move(s), std::move(twists),
                    "Deligne product of " + a.key + " and " + b.key + ".");
}

std::string classify(const CatalogEntry& entry) {
  if (!entry.smatrix) return "no-smatrix";
  const Subcategory center = muger_center(entry.ring, *entry.smatrix);
  if (center.is_trivial()) return "modular";
  if (center.size() == entry.ring.rank()) return "symmetric";
  if (center.size() == 2 && entry.twists) {
    const std::size_t f = center.members()[1];
    if (entry.ring.dim(f) == CycNum(1) && (*entry.twists)[f] == CycNum(-1)) return "slightly-degenerate";
  }
  return "degenerate";
}

}  // namespace fuscat
