#include "fuscat/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "fuscat/error.hpp"

namespace fuscat {

namespace {

std::string idx(std::initializer_list<std::size_t> ids) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (auto i : ids) {
    if (!first) os << ",";
    os << i;
    first = false;
  }
  os << ")";
  return os.str();
}

[[noreturn]] void invalid(const std::string& axiom, const std::string& detail) {
  throw Error(Errc::Validation, axiom + " violated at " + detail);
}

constexpr int kMaxPowerIterations = 200000;
constexpr double kPowerTolerance = 1e-12;
constexpr double kHomTolerance = 1e-8;
constexpr double kExactFloatTolerance = 1e-9;

std::vector<double> perron_dims(std::size_t r, const std::vector<int>& tensor) {
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) { return tensor[(i * r + j) * r + k]; };
  // A_{jk} = sum_i N_{ij}^k is entrywise positive, and A d = (sum_i d_i) d.
  std::vector<double> a(r * r, 0.0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) a[j * r + k] += at(i, j, k);

  std::vector<double> v(r, 1.0), w(r);
  bool converged = false;
  for (int it = 0; it < kMaxPowerIterations; ++it) {
    for (std::size_t j = 0; j < r; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < r; ++k) s += a[j * r + k] * v[k];
      w[j] = s;
    }
    const double norm = w[0];
    if (!(norm > 0.0) || !std::isfinite(norm)) break;
    double change = 0.0;
    for (std::size_t j = 0; j < r; ++j) {
      w[j] /= norm;
      change = std::max(change, std::abs(w[j] - v[j]) / std::max(1.0, std::abs(w[j])));
    }
    v.swap(w);
    if (change <= kPowerTolerance * 1e-2) {
      converged = true;
      break;
    }
  }
  if (!converged) throw Error(Errc::ConvergenceFailure, "power iteration did not stabilize");

  for (std::size_t i = 0; i < r; ++i) {
    if (!(v[i] > 0.0)) throw Error(Errc::ConvergenceFailure, "non-positive Perron entry at " + idx({i}));
    for (std::size_t j = 0; j < r; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < r; ++k) s += at(i, j, k) * v[k];
      if (std::abs(v[i] * v[j] - s) > kHomTolerance * std::max(1.0, s)) {
        throw Error(Errc::ConvergenceFailure, "dimension character residual too large at " + idx({i, j}));
      }
    }
  }
  return v;
}

}  // namespace

const CycNum& FusionRing::dim(std::size_t i) const {
  if (!fpdims_) throw Error(Errc::ExactDataMissing, "ring has no exact FP-dimensions");
  return (*fpdims_)[i];
}

FusionData FusionRing::to_data() const {
  FusionData d;
  const std::size_t r = rank();
  d.names = names_;
  d.tensor.assign(r, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) d.tensor[i][j][k] = N(i, j, k);
  d.dual = dual_;
  d.fpdims = fpdims_;
  return d;
}

FusionRing validate_fusion_ring(FusionData c) {
  const std::size_t r = c.names.size();
  if (r == 0) invalid("shape", "rank 0");
  {
    std::set<std::string> seen(c.names.begin(), c.names.end());
    if (seen.size() != r) invalid("distinct names", "names list");
  }
  if (c.tensor.size() != r) invalid("shape", "tensor outer dimension");
  if (c.dual.size() != r) invalid("shape", "dual length");

  FusionRing ring;
  ring.names_ = std::move(c.names);
  ring.tensor_.assign(r * r * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    if (c.tensor[i].size() != r) invalid("shape", "tensor row " + idx({i}));
    for (std::size_t j = 0; j < r; ++j) {
      if (c.tensor[i][j].size() != r) invalid("shape", "tensor row " + idx({i, j}));
      for (std::size_t k = 0; k < r; ++k) {
        int v = c.tensor[i][j][k];
        if (v < 0) invalid("nonnegativity", idx({i, j, k}));
        ring.tensor_[(i * r + j) * r + k] = v;
      }
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (c.dual[i] >= r) invalid("duality", "dual index out of range at " + idx({i}));
  }
  ring.dual_ = std::move(c.dual);
  const FusionRing& R = ring;

  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k) {
      const int delta = j == k ? 1 : 0;
      if (R.N(0, j, k) != delta || R.N(j, 0, k) != delta) invalid("unit axiom", idx({j, k}));
    }

  if (R.dual(0) != 0) invalid("duality", "dual(0) != 0");
  for (std::size_t i = 0; i < r; ++i) {
    if (R.dual(R.dual(i)) != i) invalid("duality", "dual is not an involution at " + idx({i}));
    for (std::size_t j = 0; j < r; ++j) {
      if (R.N(i, j, 0) != (j == R.dual(i) ? 1 : 0)) invalid("duality", idx({i, j, 0}));
    }
  }

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (R.N(i, j, k) != R.N(j, i, k)) invalid("commutativity", idx({i, j, k}));

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < r; ++l) {
          long lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < r; ++m) {
            lhs += static_cast<long>(R.N(i, j, m)) * R.N(m, k, l);
            rhs += static_cast<long>(R.N(j, k, m)) * R.N(i, m, l);
          }
          if (lhs != rhs) invalid("associativity", "(i,j,k,l) = " + idx({i, j, k, l}));
        }

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (R.N(i, j, k) != R.N(R.dual(i), k, j)) invalid("Frobenius reciprocity", idx({i, j, k}));

  ring.fpdims_float_ = perron_dims(r, ring.tensor_);

  if (c.fpdims) {
    auto& d = *c.fpdims;
    if (d.size() != r) invalid("shape", "fpdims length");
    for (std::size_t i = 0; i < r; ++i) {
      auto z = embed_complex(d[i]);
      if (std::abs(z.imag()) > kExactFloatTolerance || !(z.real() > 0.0)) {
        invalid("positive real dimensions", idx({i}));
      }
      if (std::abs(z.real() - ring.fpdims_float_[i]) > kExactFloatTolerance * std::max(1.0, z.real())) {
        invalid("exact dimension matches Perron root", idx({i}));
      }
      if (!(d[R.dual(i)] == d[i])) invalid("dimension duality", idx({i}));
    }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i; j < r; ++j) {
        CycNum rhs;
        for (std::size_t k = 0; k < r; ++k) {
          if (int n = R.N(i, j, k)) rhs += CycNum(static_cast<long>(n)) * d[k];
        }
        if (!(d[i] * d[j] == rhs)) invalid("dimension character", idx({i, j}));
      }
    ring.fpdims_ = std::move(c.fpdims);
  }
  return ring;
}

std::vector<double> fpdim_numeric(const FusionRing& ring) {
  std::vector<int> tensor(ring.rank() * ring.rank() * ring.rank());
  const std::size_t r = ring.rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) tensor[(i * r + j) * r + k] = ring.N(i, j, k);
  return perron_dims(r, tensor);
}

CycNum global_fpdim(const FusionRing& ring) {
  CycNum sum;
  for (std::size_t i = 0; i < ring.rank(); ++i) sum += ring.dim(i) * ring.dim(i);
  return sum;
}

// ---------------------------------------------------------------------------
// Subcategories

Subcategory::Subcategory(const FusionRing& ring, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != 0) {
    throw Error(Errc::Validation, "subcategory must contain the unit");
  }
  if (members.back() >= ring.rank()) throw Error(Errc::Validation, "subcategory index out of range");
  members_ = std::move(members);
  for (auto i : members_) {
    if (!contains(ring.dual(i))) throw Error(Errc::Validation, "subcategory not closed under dual at " + idx({i}));
    for (auto j : members_)
      for (std::size_t k = 0; k < ring.rank(); ++k)
        if (ring.N(i, j, k) > 0 && !contains(k)) {
          throw Error(Errc::Validation, "subcategory not fusion-closed at " + idx({i, j, k}));
        }
  }
}

bool Subcategory::contains(std::size_t i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

Subcategory full_subcategory(const FusionRing& ring) {
  std::vector<std::size_t> all(ring.rank());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return Subcategory(ring, std::move(all));
}

Subcategory subcategory_closure(const FusionRing& ring, std::span<const std::size_t> generators) {
  const std::size_t r = ring.rank();
  std::vector<bool> in(r, false);
  in[0] = true;
  for (auto g : generators) {
    if (g >= r) throw Error(Errc::Validation, "generator index out of range: " + idx({g}));
    in[g] = true;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < r; ++i) {
      if (!in[i]) continue;
      if (!in[ring.dual(i)]) in[ring.dual(i)] = changed = true;
      for (std::size_t j = 0; j < r; ++j) {
        if (!in[j]) continue;
        for (std::size_t k = 0; k < r; ++k)
          if (!in[k] && ring.N(i, j, k) > 0) in[k] = changed = true;
      }
    }
  }
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < r; ++i)
    if (in[i]) members.push_back(i);
  return Subcategory(Subcategory::Trusted{}, std::move(members));
}

Subcategory intersect(const FusionRing& ring, const Subcategory& a, const Subcategory& b) {
  std::vector<std::size_t> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(common));
  return Subcategory(ring, std::move(common));
}

bool is_subset(const Subcategory& a, const Subcategory& b) {
  return std::includes(b.members().begin(), b.members().end(), a.members().begin(), a.members().end());
}

CycNum subcategory_fpdim(const FusionRing& ring, const Subcategory& sub) {
  CycNum sum;
  for (auto i : sub.members()) sum += ring.dim(i) * ring.dim(i);
  return sum;
}

std::vector<Subcategory> enumerate_subcategories(const FusionRing& ring, std::size_t max_rank) {
  if (ring.rank() > max_rank) {
    throw Error(Errc::RankTooLarge,
                "rank " + std::to_string(ring.rank()) + " exceeds bound " + std::to_string(max_rank));
  }
  // Every subcategory T is reached from Vec by repeatedly adjoining one of
  // its simples and closing.
  std::set<Subcategory> found;
  std::vector<Subcategory> frontier{subcategory_closure(ring, {})};
  found.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Subcategory> next;
    for (const auto& s : frontier) {
      for (std::size_t i = 0; i < ring.rank(); ++i) {
        if (s.contains(i)) continue;
        std::vector<std::size_t> gens = s.members();
        gens.push_back(i);
        auto t = subcategory_closure(ring, gens);
        if (found.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subcategory> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Subcategory& a, const Subcategory& b) { return a.size() < b.size(); });
  return out;
}

Subcategory pointed_part(const FusionRing& ring) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    bool invertible = std::abs(ring.fpdims_float()[i] - 1.0) <= 1e-9;
    if (invertible && ring.has_exact_dims()) invertible = ring.dim(i) == CycNum(1);
    if (invertible) members.push_back(i);
  }
  return Subcategory(ring, std::move(members));
}

FusionRing restrict_to(const FusionRing& ring, const Subcategory& sub) {
  const auto& m = sub.members();
  const std::size_t r = m.size();
  std::vector<std::size_t> pos(ring.rank(), r);
  for (std::size_t a = 0; a < r; ++a) pos[m[a]] = a;
  FusionData d;
  d.tensor.assign(r, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
  for (std::size_t a = 0; a < r; ++a) {
    d.names.push_back(ring.names()[m[a]]);
    d.dual.push_back(pos[ring.dual(m[a])]);
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c) d.tensor[a][b][c] = ring.N(m[a], m[b], m[c]);
  }
  if (ring.has_exact_dims()) {
    std::vector<CycNum> dims;
    for (auto i : m) dims.push_back(ring.dim(i));
    d.fpdims = std::move(dims);
  }
  return validate_fusion_ring(std::move(d));
}

FusionRing deligne_product(const FusionRing& a, const FusionRing& b) {
  const std::size_t ra = a.rank(), rb = b.rank(), r = ra * rb;
  FusionData d;
  d.tensor.assign(r, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t ip = 0; ip < rb; ++ip) {
      d.names.push_back("(" + a.names()[i] + "," + b.names()[ip] + ")");
      d.dual.push_back(a.dual(i) * rb + b.dual(ip));
    }
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < r; ++y)
      for (std::size_t z = 0; z < r; ++z)
        d.tensor[x][y][z] = a.N(x / rb, y / rb, z / rb) * b.N(x % rb, y % rb, z % rb);
  if (a.has_exact_dims() && b.has_exact_dims()) {
    std::vector<CycNum> dims;
    for (std::size_t x = 0; x < r; ++x) dims.push_back(a.dim(x / rb) * b.dim(x % rb));
    d.fpdims = std::move(dims);
  }
  return validate_fusion_ring(std::move(d));
}

// ---------------------------------------------------------------------------
// K(C)

KElement basis_element(const FusionRing& ring, std::size_t i) {
  KElement e{std::vector<CycNum>(ring.rank())};
  e.coeffs[i] = CycNum(1);
  return e;
}

KElement multiply(const FusionRing& ring, const KElement& x, const KElement& y) {
  const std::size_t r = ring.rank();
  KElement out{std::vector<CycNum>(r)};
  for (std::size_t i = 0; i < r; ++i) {
    if (x.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (y.coeffs[j].is_zero()) continue;
      CycNum p = x.coeffs[i] * y.coeffs[j];
      for (std::size_t k = 0; k < r; ++k)
        if (int n = ring.N(i, j, k)) out.coeffs[k] += CycNum(static_cast<long>(n)) * p;
    }
  }
  return out;
}

KElement scale(const KElement& x, const CycNum& s) {
  KElement out = x;
  for (auto& c : out.coeffs) c *= s;
  return out;
}

}  // namespace fuscat
