// One PASS/FAIL line per acceptance criterion.  Exit status is nonzero when
// any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "fuscat/catalog.hpp"
#include "fuscat/premod.hpp"
#include "fuscat/serialize.hpp"
#include "fuscat/suite.hpp"
#include "oracles.hpp"

using namespace fuscat;

namespace {

using Blocks = std::vector<std::vector<std::size_t>>;

int failures = 0;

void line(int n, bool ok, const std::string& what, const std::string& detail = {}) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " [" << n << "] " << what;
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
}

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  RunResult r;
  const std::string cmd = std::string("\"") + FUSCAT_CLI + "\" " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::vector<double> doubles(const CycNum& x) {
  std::vector<double> c;
  for (const auto& q : x.coeffs()) c.push_back(q.get_d());
  return c;
}

std::string str(const CycNum& x) { return approx_string(x); }

template <class F>
void guarded(int n, const std::string& what, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    line(n, false, what, std::string("exception: ") + e.what());
  }
}

PremodAnalysis analysis(const CatalogEntry& e) { return m_map(e.ring, *e.table, *e.smatrix); }

void criterion1() {
  guarded(1, "rep-s3 class dimensions equal S3 conjugacy class sizes", [] {
    const RunResult r = run_cli("verify rep-s3 --format json");
    const json j = json::parse(r.out);
    std::multiset<std::size_t> got;
    bool exact_integers = true;
    for (const auto& d : j["analysis"]["class_dims"]) {
      const CycNum v = cycnum_from_json(d["exact"]);
      if (!v.is_rational() || v.rational_value().get_den() != 1) exact_integers = false;
      else got.insert(v.rational_value().get_num().get_ui());
    }
    const auto expected = oracle::symmetric_group_class_sizes(3);
    std::ostringstream os;
    for (auto x : got) os << x << " ";
    line(1, r.status == 0 && exact_integers && got == expected, "rep-s3 class dimensions equal S3 conjugacy class sizes",
         "class dims " + os.str());
  });
}

void criterion2() {
  guarded(2, "class-dimension sum over J_D equals FPdim(C)/FPdim(D)", [] {
    std::size_t count = 0;
    std::string bad;
    for (const auto& key : builtin_keys()) {
      const CatalogEntry& e = builtin(key);
      for (const auto& d : enumerate_subcategories(e.ring)) {
        ++count;
        const ScalarCheck c = check_class_dim_sum(e.ring, *e.table, d);
        if (!c.pass || c.rhs != global_fpdim(e.ring) / subcategory_fpdim(e.ring, d)) bad += key + " ";
      }
    }
    line(2, bad.empty(), "class-dimension sum over J_D equals FPdim(C)/FPdim(D)",
         std::to_string(count) + " (entry, D) pairs" + (bad.empty() ? "" : "; failing: " + bad));
  });
}

void criterion3() {
  guarded(3, "both coset orthogonality relations", [] {
    std::vector<std::pair<std::string, std::vector<std::size_t>>> cases{
        {"ising", {0, 1}}, {"rep-s3", {0, 1}}, {"su2k-4", {0, 4}}};
    for (const auto& key : builtin_keys()) {
      const FusionRing& r = builtin(key).ring;
      cases.push_back({key, {0}});
      cases.push_back({key, full_subcategory(r).members()});
    }
    std::size_t relations = 0;
    std::string bad;
    for (const auto& [key, members] : cases) {
      const CatalogEntry& e = builtin(key);
      const Subcategory d(e.ring, members);
      const CosetDecomposition dec = coset_partition(e.ring, d);
      const auto jd = support_JD(e.ring, *e.table, d);
      bool ok = true;
      for (auto k : jd)
        for (auto l : jd) {
          ++relations;
          ok = ok && first_orthogonality(e.ring, *e.table, d, dec, k, l).pass;
        }
      for (std::size_t t = 0; t < dec.size(); ++t)
        for (std::size_t s = 0; s < dec.size(); ++s) {
          ++relations;
          ok = ok && second_orthogonality(e.ring, *e.table, d, dec, t, s).pass;
        }
      if (!ok) bad += key + format_set(members) + " ";
    }
    line(3, bad.empty(), "both coset orthogonality relations",
         std::to_string(relations) + " exact identities" + (bad.empty() ? "" : "; failing: " + bad));
  });
}

void criterion4() {
  guarded(4, "Hecke constants well defined, rows sum to 1, associative", [] {
    std::size_t pairs = 0;
    std::string bad;
    for (const auto& key : builtin_keys()) {
      const FusionRing& r = builtin(key).ring;
      for (const auto& sub : enumerate_subcategories(r)) {
        ++pairs;
        const CosetDecomposition dc = coset_partition(r, sub);
        const HeckeAlgebra hk = hecke_constants(r, dc);
        bool ok = check_hecke(r, dc, hk).pass();
        for (std::size_t m = 0; m < dc.size(); ++m)
          for (std::size_t n = 0; n < dc.size(); ++n) {
            CycNum row;
            for (std::size_t p = 0; p < dc.size(); ++p) row += hk.H[m][n][p];
            ok = ok && row == CycNum(1);
            for (auto x : dc.blocks[m])
              for (auto y : dc.blocks[n]) {
                const KElement xy = multiply(r, basis_element(r, x), basis_element(r, y));
                for (std::size_t p = 0; p < dc.size(); ++p) {
                  CycNum mass;
                  for (auto z : dc.blocks[p]) mass += xy.coeffs[z] * r.dim(z);
                  ok = ok && mass / (r.dim(x) * r.dim(y)) == hk.H[m][n][p];
                }
              }
          }
        for (std::size_t a = 0; a < dc.size(); ++a)
          for (std::size_t b = 0; b < dc.size(); ++b)
            for (std::size_t c = 0; c < dc.size(); ++c)
              for (std::size_t q = 0; q < dc.size(); ++q) {
                CycNum left, right;
                for (std::size_t p = 0; p < dc.size(); ++p) {
                  left += hk.H[a][b][p] * hk.H[p][c][q];
                  right += hk.H[b][c][p] * hk.H[a][p][q];
                }
                ok = ok && left == right;
              }
        if (!ok) bad += key + format_set(sub.members()) + " ";
      }
    }
    line(4, bad.empty(), "Hecke constants well defined, rows sum to 1, associative",
         std::to_string(pairs) + " (ring, D) pairs" + (bad.empty() ? "" : "; failing: " + bad));
  });
}

void criterion5() {
  guarded(5, "M-fibers equal Muger-center cosets", [] {
    const std::vector<std::pair<std::string, Blocks>> expected{
        {"svec", {{0, 1}}},
        {"ising", {{0}, {1}, {2}}},
        {"su2k-4", {{0, 4}, {1, 3}, {2}}},
        {"ising*svec", {{0, 1}, {2, 3}, {4, 5}}},
        {"rep-s3", {{0, 1, 2}}}};
    bool ok = true;
    std::string detail;
    for (const auto& [key, blocks] : expected) {
      const CatalogEntry& e = builtin(key);
      const PremodAnalysis pa = analysis(e);
      const CenterCosetReport r = check_center_cosets(e.ring, *e.table, *e.smatrix, pa);
      const auto jz = support_JD(e.ring, *e.table, pa.center);
      const bool here = r.pass() && pa.fibers == blocks && r.cosets == blocks && pa.fibers.size() == pa.J2.size() &&
                        pa.J2.size() == jz.size();
      if (!here) {
        ok = false;
        std::string got;
        for (const auto& f : pa.fibers) got += format_set(f);
        std::string want;
        for (const auto& f : blocks) want += format_set(f);
        detail += key + ": fibers " + got + " expected " + want + ", center " + format_set(pa.center.members()) + "; ";
      }
    }
    line(5, ok, "M-fibers equal Muger-center cosets", detail);
  });
}

void criterion6() {
  guarded(6, "central image of each character equals d_i/dim(C^M(i)) C_M(i)", [] {
    std::size_t n = 0;
    std::string bad;
    for (const auto& key : builtin_keys()) {
      const CatalogEntry& e = builtin(key);
      for (const auto& c : check_class_sum_formula(e.ring, *e.table, *e.smatrix, analysis(e))) {
        ++n;
        if (!c.pass) bad += key + " ";
      }
    }
    line(6, bad.empty(), "central image of each character equals d_i/dim(C^M(i)) C_M(i)",
         std::to_string(n) + " simples" + (bad.empty() ? "" : "; failing: " + bad));
  });
}

void criterion7() {
  guarded(7, "divisibility verdicts", [] {
    std::vector<std::string> notes;
    bool ok = true;

    {
      const CatalogEntry& fib = builtin("fib");
      const CosetDimReport r = coset_dim_formulas(fib.ring, *fib.table, *fib.smatrix, analysis(fib),
                                                  full_subcategory(fib.ring));
      const CycNum target = (CycNum(5) - sqrt5()) / CycNum(2);
      bool found = false;
      for (const auto& p : r.pieces)
        if (p.integrality.value == target) found = p.integrality.integral;
      const auto poly = oracle::poly_from_roots(oracle::conjugates(target.conductor(), doubles(target)));
      const bool oracle_ok = poly.size() == 5 && std::abs(poly[0] - 25.0) < 1e-9 && std::abs(poly[1] + 50.0) < 1e-9 &&
                             minimal_polynomial(target).to_string() == "x^2 - 5x + 5";
      const bool a = found && oracle_ok;
      ok = ok && a;
      notes.push_back(std::string("(a) ") + (a ? "pass" : "fail"));
    }
    {
      const CatalogEntry& su = builtin("su2k-4");
      const PremodAnalysis pa = analysis(su);
      bool b = false;
      std::string why;
      if (!pa.stabilizers.empty()) {
        const PointedCenterReport r = check_pointed_center_divisibility(su.ring, *su.table, *su.smatrix, pa);
        const auto& y1 = r.entries[1];
        const auto& y2 = r.entries[2];
        b = y1.item1.value == CycNum(8) && y1.item1.integral && y2.item1.value == CycNum(6) && y2.item1.integral &&
            y2.stabilizer.size() == 2 && y2.class_dim.pass;
        why = "values " + str(y1.item1.value) + " (X1), " + str(y2.item1.value) + " (X2), |G_X2| = " +
              std::to_string(y2.stabilizer.size()) + ", center " + format_set(pa.center.members());
      }
      ok = ok && b;
      notes.push_back(std::string("(b) ") + (b ? "pass" : "fail: " + why));
    }
    {
      const CatalogEntry& p = builtin("ising*svec");
      const PointedCenterReport r = check_pointed_center_divisibility(p.ring, *p.table, *p.smatrix, analysis(p));
      const bool c = r.free_action && r.entries[4].item2 && r.entries[4].item2->value == CycNum(2) &&
                     r.entries[4].item2->integral;
      ok = ok && c;
      notes.push_back(std::string("(c) ") + (c ? "pass" : "fail"));
    }
    {
      const CatalogEntry& ising = builtin("ising");
      bool d = false;
      for (const auto& c : coset_integrality(ising.ring, coset_partition(ising.ring, Subcategory(ising.ring, {0, 1}))))
        if (c.member == 2) d = c.check.value == CycNum(4) && c.check.integral;
      ok = ok && d;
      notes.push_back(std::string("(d) ") + (d ? "pass" : "fail"));
    }
    {
      const CatalogEntry& su = builtin("su2k-4");
      const PremodAnalysis pa = analysis(su);
      bool e = false;
      std::string why;
      if (!pa.stabilizers.empty()) {
        const PointedCenterReport r = check_pointed_center_divisibility(su.ring, *su.table, *su.smatrix, pa);
        const auto& f = r.entries[1].fiber_integrality;
        e = f.value == CycNum(6) && f.integral;
        why = "value " + str(f.value) + " for X1";
      }
      ok = ok && e;
      notes.push_back(std::string("(e) ") + (e ? "pass" : "fail: " + why));
    }
    std::string detail;
    for (const auto& n : notes) detail += (detail.empty() ? "" : "; ") + n;
    line(7, ok, "divisibility verdicts", detail);
  });
}

void criterion8() {
  guarded(8, "integrality tester calibration", [] {
    bool ok = !is_algebraic_integer(CycNum(Rational(1, 2))) && !is_algebraic_integer(CycNum(Rational(3, 5)));
    for (unsigned n = 1; n <= 24; ++n) ok = ok && is_algebraic_integer(CycNum::zeta(n));
    ok = ok && is_algebraic_integer(CycNum::zeta(8) - CycNum::zeta(8, 3)) && is_algebraic_integer(golden_ratio());
    ok = ok && minimal_polynomial(golden_ratio()).to_string() == "x^2 - x - 1";
    line(8, ok, "integrality tester calibration");
  });
}

void criterion9() {
  guarded(9, "numeric characters within 1e-8 and FP dims within 1e-9", [] {
    std::string bad;
    double worst = 0;
    for (const auto& key : builtin_keys()) {
      const CatalogEntry& e = builtin(key);
      if (match_columns(*e.table, characters_numeric(e.ring, 0), 1e-8).empty()) bad += key + "(chars) ";
      const auto v = fpdim_numeric(e.ring);
      for (std::size_t i = 0; i < e.ring.rank(); ++i) {
        const double err = std::abs(v[i] - embed_complex(e.ring.dim(i)).real());
        worst = std::max(worst, err);
        if (err > 1e-9) bad += key + "(dims) ";
      }
    }
    std::ostringstream os;
    os << "max FP dim error " << worst;
    line(9, bad.empty(), "numeric characters within 1e-8 and FP dims within 1e-9",
         os.str() + (bad.empty() ? "" : "; failing: " + bad));
  });
}

void criterion10() {
  guarded(10, "coset restriction to subcategories and refinement monotonicity", [] {
    std::size_t pairs = 0;
    std::string bad;
    for (const auto& key : builtin_keys()) {
      const FusionRing& ring = builtin(key).ring;
      const auto subs = enumerate_subcategories(ring);
      for (const auto& d : subs)
        for (const auto& a : subs) {
          ++pairs;
          bool ok = check_coset_restriction(ring, d, a).pass;
          if (is_subset(d, a)) ok = ok && refines(coset_blocks(ring, d), coset_blocks(ring, a));
          if (!ok) bad += key + format_set(d.members()) + format_set(a.members()) + " ";
        }
    }
    line(10, bad.empty(), "coset restriction to subcategories and refinement monotonicity",
         std::to_string(pairs) + " (D, A) pairs" + (bad.empty() ? "" : "; failing: " + bad));
  });
}

void criterion11() {
  guarded(11, "verify JSON byte-identical across runs", [] {
    std::string bad;
    for (const auto& key : builtin_keys()) {
      const std::string args = "verify '" + key + "' --all-subcategories --format json";
      const RunResult a = run_cli(args), b = run_cli(args);
      if (a.out.empty() || a.out != b.out || a.status != b.status) bad += key + " ";
    }
    line(11, bad.empty(), "verify JSON byte-identical across runs",
         std::to_string(builtin_keys().size()) + " keys" + (bad.empty() ? "" : "; differing: " + bad));
  });
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
