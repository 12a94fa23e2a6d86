#include <doctest.h>

#include "fuscat/catalog.hpp"
#include "fuscat/cosets.hpp"
#include "fuscat/error.hpp"
#include "oracles.hpp"

using namespace fuscat;

namespace {

using Blocks = std::vector<std::vector<std::size_t>>;

CycNum sqrt2() { return CycNum::zeta(8) - CycNum::zeta(8, 3); }

std::size_t column_with(const CharacterTable& t, std::size_t row, const CycNum& v) {
  for (std::size_t j = 0; j < t.rank(); ++j)
    if (t.alpha(row, j) == v) return j;
  FAIL("no column");
  return 0;
}

}  // namespace

TEST_CASE("coset partitions") {
  const CatalogEntry& ising = builtin("ising");
  CHECK(coset_blocks(ising.ring, Subcategory(ising.ring, {0, 1})) == Blocks{{0, 1}, {2}});
  const CatalogEntry& su = builtin("su2k-4");
  CHECK(coset_blocks(su.ring, Subcategory(su.ring, {0, 4})) == Blocks{{0, 4}, {1, 3}, {2}});
  for (const auto& key : builtin_keys()) {
    const FusionRing& r = builtin(key).ring;
    CHECK(coset_blocks(r, Subcategory()).size() == r.rank());
  }
}

TEST_CASE("coset partitions agree with the Warshall closure") {
  for (const auto& key : builtin_keys()) {
    const FusionRing& r = builtin(key).ring;
    for (const auto& d : enumerate_subcategories(r)) {
      const auto expected =
          oracle::closure_partition(r.rank(), d.members(), [&](auto i, auto s, auto k) { return r.N(i, s, k); });
      CHECK_MESSAGE(coset_blocks(r, d) == expected, key);
    }
  }
}

TEST_CASE("regular element proportionality") {
  const CatalogEntry& ising = builtin("ising");
  const Subcategory d(ising.ring, {0, 1});
  const CosetDecomposition dec = coset_partition(ising.ring, d);
  const ProportionalityReport rep = verify_regular_proportionality(ising.ring, d, dec);
  CHECK(rep.pass);
  for (const auto& n : rep.normalized) {
    if (n.x != 2) continue;
    CHECK(n.lhs.coeffs == std::vector<CycNum>{0, 0, sqrt2()});
    CHECK(n.rhs == n.lhs);
  }
  bool saw_unit_sigma = false;
  for (const auto& p : rep.pairs) {
    if (p.x == p.y) CHECK(p.equal);
    if (p.x == 0 && p.y == 2) {
      saw_unit_sigma = true;
      CHECK_FALSE(p.equal);
      CHECK(p.pass);
    }
  }
  CHECK(saw_unit_sigma);
  for (const auto& key : builtin_keys()) {
    const FusionRing& r = builtin(key).ring;
    for (const auto& sub : enumerate_subcategories(r)) {
      CHECK_MESSAGE(verify_regular_proportionality(r, sub, coset_partition(r, sub)).pass, key);
    }
  }
}

TEST_CASE("Hecke constants") {
  const CatalogEntry& ising = builtin("ising");
  const CosetDecomposition dec = coset_partition(ising.ring, Subcategory(ising.ring, {0, 1}));
  const HeckeAlgebra h = hecke_constants(ising.ring, dec);
  CHECK(h.H[1][1][0] == CycNum(1));
  CHECK(h.H[1][1][1] == CycNum(0));
  CHECK(h.H[0][1][1] == CycNum(1));
  const CosetDecomposition whole = coset_partition(ising.ring, full_subcategory(ising.ring));
  CHECK(hecke_constants(ising.ring, whole).H[0][0][0] == CycNum(1));

  for (const auto& key : builtin_keys()) {
    const FusionRing& r = builtin(key).ring;
    for (const auto& sub : enumerate_subcategories(r)) {
      const CosetDecomposition dc = coset_partition(r, sub);
      const HeckeAlgebra hk = hecke_constants(r, dc);
      const HeckeReport rep = check_hecke(r, dc, hk);
      CHECK_MESSAGE(rep.pass(), key);
      CHECK(rep.dual_symmetric);
      const std::size_t a = dc.block_of[0];
      for (std::size_t n = 0; n < hk.size(); ++n)
        for (std::size_t p = 0; p < hk.size(); ++p) CHECK(hk.H[a][n][p] == CycNum(n == p ? 1 : 0));
    }
  }
}

TEST_CASE("Hecke constants from every representative pair") {
  // Independent recomputation: multiply [X][Y] in K(C) and sum the dimension-weighted mass per block.
  for (const auto& key : builtin_keys()) {
    const FusionRing& r = builtin(key).ring;
    for (const auto& sub : enumerate_subcategories(r)) {
      const CosetDecomposition dc = coset_partition(r, sub);
      const HeckeAlgebra hk = hecke_constants(r, dc);
      for (std::size_t m = 0; m < dc.size(); ++m)
        for (std::size_t n = 0; n < dc.size(); ++n)
          for (auto x : dc.blocks[m])
            for (auto y : dc.blocks[n]) {
              const KElement xy = multiply(r, basis_element(r, x), basis_element(r, y));
              for (std::size_t p = 0; p < dc.size(); ++p) {
                CycNum mass;
                for (auto z : dc.blocks[p]) mass += xy.coeffs[z] * r.dim(z);
                CHECK(mass / (r.dim(x) * r.dim(y)) == hk.H[m][n][p]);
              }
            }
    }
  }
}

TEST_CASE("Hecke dimension equals |J_D|") {
  const CatalogEntry& ising = builtin("ising");
  const Subcategory d(ising.ring, {0, 1});
  CHECK(check_hecke_dimension(ising.ring, *ising.table, d, coset_partition(ising.ring, d)).pass);
  const CatalogEntry& s3 = builtin("rep-s3");
  const Subcategory ds(s3.ring, {0, 1});
  const CosetDecomposition dec = coset_partition(s3.ring, ds);
  CHECK(dec.blocks == Blocks{{0, 1}, {2}});
  CHECK(check_hecke_dimension(s3.ring, *s3.table, ds, dec).pass);
  for (const auto& key : builtin_keys()) {
    const CatalogEntry& e = builtin(key);
    for (const auto& sub : enumerate_subcategories(e.ring)) {
      CHECK_MESSAGE(check_hecke_dimension(e.ring, *e.table, sub, coset_partition(e.ring, sub)).pass, key);
    }
  }
}

TEST_CASE("orthogonality relations on Ising") {
  const CatalogEntry& ising = builtin("ising");
  const CharacterTable& t = *ising.table;
  const Subcategory d(ising.ring, {0, 1});
  const CosetDecomposition dec = coset_partition(ising.ring, d);
  const std::size_t fp = t.fp_column(), neg = column_with(t, 2, -sqrt2()), odd = column_with(t, 1, -1);

  const ScalarCheck a = first_orthogonality(ising.ring, t, d, dec, fp, fp);
  CHECK(a.pass);
  CHECK(a.lhs == CycNum(4));
  const ScalarCheck b = first_orthogonality(ising.ring, t, d, dec, fp, neg);
  CHECK(b.pass);
  CHECK(b.lhs == CycNum(0));
  try {
    first_orthogonality(ising.ring, t, d, dec, fp, odd);
    FAIL("expected IndexNotInJD");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IndexNotInJD);
  }

  const ScalarCheck s = second_orthogonality(ising.ring, t, d, dec, 1, 1);
  CHECK(s.pass);
  CHECK(s.lhs == CycNum(4));
  const ScalarCheck u = second_orthogonality(ising.ring, t, d, dec, 0, 1);
  CHECK(u.pass);
  CHECK(u.lhs == CycNum(0));

  const Subcategory whole = full_subcategory(ising.ring);
  const CosetDecomposition one = coset_partition(ising.ring, whole);
  CHECK(first_orthogonality(ising.ring, t, whole, one, fp, fp).pass);
  CHECK(second_orthogonality(ising.ring, t, whole, one, 0, 0).pass);
}

TEST_CASE("orthogonality relations on every subcategory") {
  for (const auto& key : builtin_keys()) {
    const CatalogEntry& e = builtin(key);
    for (const auto& sub : enumerate_subcategories(e.ring)) {
      const CosetDecomposition dec = coset_partition(e.ring, sub);
      const auto jd = support_JD(e.ring, *e.table, sub);
      for (auto k : jd)
        for (auto l : jd) CHECK_MESSAGE(first_orthogonality(e.ring, *e.table, sub, dec, k, l).pass, key);
      for (std::size_t t = 0; t < dec.size(); ++t)
        for (std::size_t s = 0; s < dec.size(); ++s)
          CHECK_MESSAGE(second_orthogonality(e.ring, *e.table, sub, dec, t, s).pass, key);
    }
  }
}

TEST_CASE("coset integrality") {
  const CatalogEntry& ising = builtin("ising");
  const Subcategory d(ising.ring, {0, 1});
  for (const auto& c : coset_integrality(ising.ring, coset_partition(ising.ring, d))) {
    CHECK(c.check.integral);
    if (c.member == 2) CHECK(c.check.value == CycNum(4));
  }
  CHECK_FALSE(acts_freely(ising.ring, d));
  try {
    free_action_integrality(ising.ring, *ising.table, d);
    FAIL("expected PreconditionFailed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionFailed);
  }
  const CatalogEntry& p = builtin("ising*svec");
  const Subcategory f(p.ring, {0, 1});
  REQUIRE(acts_freely(p.ring, f));
  const auto values = free_action_integrality(p.ring, *p.table, f);
  CHECK(values.size() == support_JD(p.ring, *p.table, f).size());
  for (const auto& v : values) CHECK(v.check.integral);
}

TEST_CASE("restriction of cosets and refinement") {
  const CatalogEntry& ising = builtin("ising");
  const Subcategory pe(ising.ring, {0, 1});
  CHECK(check_coset_restriction(ising.ring, pe, pe).pass);
  const CatalogEntry& su = builtin("su2k-4");
  const RestrictionReport r =
      check_coset_restriction(su.ring, Subcategory(su.ring, {0, 4}), Subcategory(su.ring, {0, 2, 4}));
  CHECK(r.pass);
  CHECK(r.intersections == Blocks{{0, 4}, {2}});
  CHECK(check_coset_restriction(su.ring, Subcategory(su.ring, {0, 4}), Subcategory()).intersections == Blocks{{0}});

  for (const auto& key : builtin_keys()) {
    const FusionRing& ring = builtin(key).ring;
    const auto subs = enumerate_subcategories(ring);
    for (const auto& d : subs)
      for (const auto& a : subs) {
        CHECK_MESSAGE(check_coset_restriction(ring, d, a).pass, key);
        if (is_subset(d, a)) CHECK(refines(coset_blocks(ring, d), coset_blocks(ring, a)));
      }
  }
}
