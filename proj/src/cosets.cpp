#include "fuscat/cosets.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "fuscat/error.hpp"

namespace fuscat {

namespace {

using Partition = std::vector<std::vector<std::size_t>>;

void canonicalize(Partition& p) {
  for (auto& b : p) std::sort(b.begin(), b.end());
  std::sort(p.begin(), p.end());
}

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

Partition bfs_blocks(const FusionRing& ring, const Subcategory& sub) {
  const std::size_t r = ring.rank();
  std::vector<bool> seen(r, false);
  Partition out;
  for (std::size_t start = 0; start < r; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> block;
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      block.push_back(x);
      for (auto s : sub.members())
        for (std::size_t k = 0; k < r; ++k)
          if (!seen[k] && ring.N(x, s, k) > 0) {
            seen[k] = true;
            queue.push_back(k);
          }
    }
    out.push_back(std::move(block));
  }
  canonicalize(out);
  return out;
}

Partition union_find_blocks(const FusionRing& ring, const Subcategory& sub) {
  const std::size_t r = ring.rank();
  DisjointSet ds(r);
  for (std::size_t i = 0; i < r; ++i)
    for (auto s : sub.members())
      for (std::size_t k = 0; k < r; ++k)
        if (ring.N(i, s, k) > 0) ds.unite(i, k);
  std::vector<std::vector<std::size_t>> by_root(r);
  for (std::size_t i = 0; i < r; ++i) by_root[ds.find(i)].push_back(i);
  Partition out;
  for (auto& b : by_root)
    if (!b.empty()) out.push_back(std::move(b));
  canonicalize(out);
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> coset_blocks(const FusionRing& ring, const Subcategory& sub) {
  Partition bfs = bfs_blocks(ring, sub);
  if (bfs != union_find_blocks(ring, sub)) {
    throw Error(Errc::InconsistentCoset, "breadth-first and union-find coset partitions differ");
  }
  // The one-step relation must already be an equivalence.
  for (const auto& block : bfs)
    for (auto x : block)
      for (auto y : block) {
        bool related = false;
        for (auto s : sub.members())
          if (ring.N(y, s, x) > 0) related = true;
        if (!related) {
          throw Error(Errc::InconsistentCoset, "simples " + std::to_string(x) + " and " + std::to_string(y) +
                                                   " share a block but are not directly related");
        }
      }
  return bfs;
}

CosetDecomposition coset_partition(const FusionRing& ring, const Subcategory& sub) {
  if (!ring.has_exact_dims()) throw Error(Errc::ExactDataMissing, "coset decomposition needs exact FP-dimensions");
  CosetDecomposition dec;
  dec.blocks = coset_blocks(ring, sub);
  const std::size_t n = dec.blocks.size();
  dec.block_of.assign(ring.rank(), 0);
  for (std::size_t t = 0; t < n; ++t)
    for (auto i : dec.blocks[t]) dec.block_of[i] = t;

  dec.dual_block.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    dec.dual_block[t] = dec.block_of[ring.dual(dec.blocks[t].front())];
    for (auto i : dec.blocks[t]) {
      if (dec.block_of[ring.dual(i)] != dec.dual_block[t]) {
        throw Error(Errc::InconsistentCoset, "dual of block " + std::to_string(t) + " is not a block");
      }
    }
  }

  // Smallest index in each dual pair of blocks; the partner block takes its
  // dual.  A self-dual block prefers its smallest self-dual member.
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  dec.rep.assign(n, unset);
  for (std::size_t t = 0; t < n; ++t) {
    if (dec.rep[t] != unset) continue;
    const auto& block = dec.blocks[t];
    if (dec.dual_block[t] == t) {
      auto it = std::find_if(block.begin(), block.end(), [&](std::size_t i) { return ring.dual(i) == i; });
      dec.rep[t] = it != block.end() ? *it : block.front();
    } else {
      dec.rep[t] = block.front();
      dec.rep[dec.dual_block[t]] = ring.dual(block.front());
    }
  }

  for (const auto& block : dec.blocks) {
    CycNum s;
    for (auto z : block) s += ring.dim(z) * ring.dim(z);
    dec.reg_dim.push_back(s);
  }
  return dec;
}

KElement regular_element(const FusionRing& ring, const std::vector<std::size_t>& members) {
  KElement r{std::vector<CycNum>(ring.rank())};
  for (auto z : members) r.coeffs[z] = ring.dim(z);
  return r;
}

ProportionalityReport verify_regular_proportionality(const FusionRing& ring, const Subcategory& sub,
                                                     const CosetDecomposition& dec) {
  const std::size_t r = ring.rank();
  const KElement reg_d = regular_element(ring, sub.members());
  const CycNum dim_d = subcategory_fpdim(ring, sub);
  std::vector<KElement> v(r);
  for (std::size_t x = 0; x < r; ++x) {
    v[x] = scale(multiply(ring, basis_element(ring, x), reg_d), ring.dim(x).inverse());
  }
  ProportionalityReport out;
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = x; y < r; ++y) {
      const bool same = dec.block_of[x] == dec.block_of[y];
      const bool equal = v[x] == v[y];
      out.pairs.push_back({x, y, same, equal, same == equal});
      out.pass = out.pass && same == equal;
    }
  for (std::size_t x = 0; x < r; ++x) {
    const std::size_t t = dec.block_of[x];
    KElement rhs = scale(regular_element(ring, dec.blocks[t]), dim_d / dec.reg_dim[t]);
    const bool ok = v[x] == rhs;
    out.normalized.push_back({x, v[x], std::move(rhs), ok});
    out.pass = out.pass && ok;
  }
  return out;
}

HeckeAlgebra hecke_constants(const FusionRing& ring, const CosetDecomposition& dec) {
  const std::size_t n = dec.size();
  std::vector<KElement> e;
  for (std::size_t t = 0; t < n; ++t) {
    e.push_back(scale(regular_element(ring, dec.blocks[t]), dec.reg_dim[t].inverse()));
  }
  HeckeAlgebra h;
  h.H.assign(n, std::vector<std::vector<CycNum>>(n, std::vector<CycNum>(n)));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t q = 0; q < n; ++q) {
      const KElement prod = multiply(ring, e[m], e[q]);
      for (std::size_t p = 0; p < n; ++p) {
        const auto& block = dec.blocks[p];
        const CycNum coeff = prod.coeffs[block.front()] / e[p].coeffs[block.front()];
        for (auto z : block) {
          if (!(prod.coeffs[z] == coeff * e[p].coeffs[z])) {
            throw Error(Errc::InconsistentCoset, "product of blocks " + std::to_string(m) + "," + std::to_string(q) +
                                                     " is not proportional on block " + std::to_string(p));
          }
        }
        h.H[m][q][p] = coeff;
      }
    }
  return h;
}

HeckeReport check_hecke(const FusionRing& ring, const CosetDecomposition& dec, const HeckeAlgebra& hecke) {
  const std::size_t n = dec.size();
  const auto& H = hecke.H;
  HeckeReport rep;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t q = 0; q < n; ++q) {
      CycNum sum;
      for (std::size_t p = 0; p < n; ++p) sum += H[m][q][p];
      rep.rows_sum_to_one = rep.rows_sum_to_one && sum == CycNum(1);

      for (auto x : dec.blocks[m])
        for (auto y : dec.blocks[q]) {
          const CycNum denom = ring.dim(x) * ring.dim(y);
          for (std::size_t p = 0; p < n; ++p) {
            CycNum closed;
            for (auto z : dec.blocks[p])
              if (int c = ring.N(x, y, z)) closed += CycNum(static_cast<long>(c)) * ring.dim(z);
            closed /= denom;
            rep.representative_independent = rep.representative_independent && closed == H[m][q][p];
          }
        }

      for (std::size_t p = 0; p < n; ++p) {
        rep.commutative = rep.commutative && H[m][q][p] == H[q][m][p];
        rep.dual_symmetric = rep.dual_symmetric &&
                             H[m][q][p] == H[dec.dual_block[q]][dec.dual_block[m]][dec.dual_block[p]];
      }
    }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t s = 0; s < n; ++s) {
          CycNum lhs, rhs;
          for (std::size_t x = 0; x < n; ++x) {
            lhs += H[m][q][x] * H[x][p][s];
            rhs += H[q][p][x] * H[m][x][s];
          }
          rep.associative = rep.associative && lhs == rhs;
        }
  return rep;
}

ScalarCheck check_hecke_dimension(const FusionRing& ring, const CharacterTable& table, const Subcategory& sub,
                                  const CosetDecomposition& dec) {
  const auto jd = support_JD(ring, table, sub);
  return ScalarCheck::compare(CycNum(static_cast<long>(dec.size())), CycNum(static_cast<long>(jd.size())));
}

ScalarCheck first_orthogonality(const FusionRing& ring, const CharacterTable& table, const Subcategory& sub,
                                const CosetDecomposition& dec, std::size_t k, std::size_t l) {
  const auto jd = support_JD(ring, table, sub);
  for (auto idx : {k, l}) {
    if (!std::binary_search(jd.begin(), jd.end(), idx)) {
      throw Error(Errc::IndexNotInJD, "column " + std::to_string(idx) + " is not in J_D");
    }
  }
  CycNum lhs;
  for (std::size_t t = 0; t < dec.size(); ++t) {
    const std::size_t x = dec.rep[t];
    const CycNum dx = ring.dim(x);
    lhs += dec.reg_dim[t] / (dx * dx) * table.alpha(x, k) * table.alpha(ring.dual(x), l);
  }
  CycNum rhs = k == l ? global_fpdim(ring) / table.class_dims()[k] : CycNum();
  return ScalarCheck::compare(std::move(lhs), std::move(rhs));
}

ScalarCheck second_orthogonality(const FusionRing& ring, const CharacterTable& table, const Subcategory& sub,
                                 const CosetDecomposition& dec, std::size_t t, std::size_t s) {
  const auto jd = support_JD(ring, table, sub);
  const std::size_t xt = dec.rep[t], xs = dec.rep[s];
  CycNum lhs;
  for (auto k : jd) lhs += table.class_dims()[k] * table.alpha(xt, k) * table.alpha(ring.dual(xs), k);
  CycNum rhs = t == s ? ring.dim(xt) * ring.dim(xs) * global_fpdim(ring) / dec.reg_dim[t] : CycNum();
  return ScalarCheck::compare(std::move(lhs), std::move(rhs));
}

std::vector<CosetIntegrality> coset_integrality(const FusionRing& ring, const CosetDecomposition& dec) {
  const CycNum total = global_fpdim(ring);
  std::vector<CosetIntegrality> out;
  for (std::size_t t = 0; t < dec.size(); ++t)
    for (auto x : dec.blocks[t]) {
      out.push_back({t, x, IntegralityCheck::of(ring.dim(x) * ring.dim(x) * total / dec.reg_dim[t])});
    }
  return out;
}

bool acts_freely(const FusionRing& ring, const Subcategory& sub) {
  for (auto g : sub.members()) {
    if (g == 0) continue;
    for (std::size_t i = 0; i < ring.rank(); ++i)
      if (ring.N(g, i, i) > 0) return false;
  }
  return true;
}

std::vector<FreeActionIntegrality> free_action_integrality(const FusionRing& ring, const CharacterTable& table,
                                                           const Subcategory& sub) {
  if (!is_subset(sub, pointed_part(ring))) {
    throw Error(Errc::PreconditionFailed, "subcategory is not pointed");
  }
  if (!acts_freely(ring, sub)) throw Error(Errc::PreconditionFailed, "free-action: some simple is fixed");
  const CycNum base = global_fpdim(ring) / subcategory_fpdim(ring, sub);
  std::vector<FreeActionIntegrality> out;
  for (auto j : support_JD(ring, table, sub)) {
    out.push_back({j, IntegralityCheck::of(base / table.class_dims()[j])});
  }
  return out;
}

RestrictionReport check_coset_restriction(const FusionRing& ring, const Subcategory& d, const Subcategory& a) {
  RestrictionReport out;
  for (const auto& block : coset_blocks(ring, d)) {
    std::vector<std::size_t> meet;
    for (auto i : block)
      if (a.contains(i)) meet.push_back(i);
    if (!meet.empty()) out.intersections.push_back(std::move(meet));
  }
  canonicalize(out.intersections);

  const FusionRing sub_ring = restrict_to(ring, a);
  const auto& members = a.members();
  std::vector<std::size_t> local;
  for (std::size_t pos = 0; pos < members.size(); ++pos)
    if (d.contains(members[pos])) local.push_back(pos);
  const Subcategory inner(sub_ring, std::move(local));
  for (const auto& block : coset_blocks(sub_ring, inner)) {
    std::vector<std::size_t> mapped;
    for (auto pos : block) mapped.push_back(members[pos]);
    out.restricted.push_back(std::move(mapped));
  }
  canonicalize(out.restricted);
  out.pass = out.intersections == out.restricted;
  return out;
}

bool refines(const std::vector<std::vector<std::size_t>>& fine, const std::vector<std::vector<std::size_t>>& coarse) {
  std::size_t n = 0;
  for (const auto& b : coarse)
    for (auto i : b) n = std::max(n, i + 1);
  std::vector<std::size_t> owner(n, static_cast<std::size_t>(-1));
  for (std::size_t c = 0; c < coarse.size(); ++c)
    for (auto i : coarse[c]) owner[i] = c;
  for (const auto& b : fine)
    for (auto i : b)
      if (i >= n || owner[i] != owner[b.front()]) return false;
  return true;
}

}  // namespace fuscat
