#include <doctest.h>

#include <future>
#include <random>
#include <set>

#include "fuscat/catalog.hpp"
#include "fuscat/error.hpp"
#include "fuscat/serialize.hpp"
#include "fuscat/suite.hpp"

using namespace fuscat;

namespace {

const CheckResult* find_check(const VerificationReport& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("CycNum JSON round trip") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
  for (unsigned n : {1u, 5u, 8u, 12u, 21u}) {
    for (int t = 0; t < 10; ++t) {
      std::vector<Rational> c(euler_phi(n));
      for (auto& x : c) x = Rational(num(rng), den(rng));
      const CycNum v(n, c);
      CHECK(cycnum_from_json(cycnum_to_json(v)) == v);
    }
  }
  const CycNum big = CycNum(Rational(Integer("123456789012345678901234567890"), Integer(7)));
  const json j = cycnum_to_json(big);
  CHECK(j["coeffs"][0][0].is_string());
  CHECK(cycnum_from_json(j) == big);
  CHECK_THROWS_AS(cycnum_from_json(json::parse(R"({"conductor": 4, "coeffs": [[1, 1]]})")), Error);
  CHECK_THROWS_AS(cycnum_from_json(json::parse(R"({"conductor": 1, "coeffs": [[2, 4]]})")), Error);
  CHECK(cycnum_from_json(json(3)) == CycNum(3));
}

TEST_CASE("entry JSON round trip for every built-in") {
  for (const auto& key : builtin_keys()) {
    const CatalogEntry& e = builtin(key);
    const CatalogEntry back = entry_from_json(json::parse(entry_to_json(e).dump()), key);
    CHECK(back.ring.to_data().tensor == e.ring.to_data().tensor);
    CHECK(back.ring.fpdims() == e.ring.fpdims());
    CHECK(back.table->matrix() == e.table->matrix());
    CHECK(back.smatrix->matrix() == e.smatrix->matrix());
    CHECK(back.twists == e.twists);
    CHECK(entry_to_json(back) == entry_to_json(e));
  }
}

TEST_CASE("schema errors") {
  json j = entry_to_json(builtin("ising"));
  j.erase("tensor");
  try {
    entry_from_json(j, "x");
    FAIL("expected Schema");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Schema);
  }
  j = entry_to_json(builtin("ising"));
  j["rank"] = 4;
  CHECK_THROWS_AS(entry_from_json(j, "x"), Error);
  j = entry_to_json(builtin("ising"));
  j["smatrix"][2][2] = 1;
  try {
    entry_from_json(j, "x");
    FAIL("expected PsiNotCharacter");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PsiNotCharacter);
  }
  CHECK_THROWS_AS(load_entry_file("/nonexistent/file.json"), Error);
}

TEST_CASE("verify ising over all subcategories") {
  VerifyOptions o;
  o.mode = VerifyOptions::Subcategories::All;
  const VerificationReport r = verify(builtin("ising"), o);
  CHECK(r.ok());
  const ReportSummary s = r.summary();
  CHECK(s.failed == 0);
  CHECK(s.total == r.checks.size());
  const CheckResult* item1 = find_check(r, "thm-1.3-item1");
  REQUIRE(item1 != nullptr);
  CHECK_FALSE(item1->skipped());
}

TEST_CASE("verify rep-s3 skips the pointed-center statements") {
  const VerificationReport r = verify(builtin("rep-s3"), {});
  CHECK(r.ok());
  for (const auto& c : r.checks) {
    if (c.id.starts_with("thm-1.3") || c.id == "eq-4.23" || c.id == "rem-4.25") {
      CHECK(c.skipped());
      CHECK(*c.skipped_reason == "center-not-pointed");
    }
  }
  std::multiset<std::string> dims;
  for (const auto& d : r.analysis["class_dims"]) dims.insert(d["approx"].get<std::string>());
  CHECK(dims == std::multiset<std::string>{"1", "2", "3"});
}

TEST_CASE("check selection") {
  VerifyOptions o;
  o.checks = {"thm-1.3"};
  const VerificationReport r = verify(builtin("ising*svec"), o);
  CHECK(r.ok());
  bool saw_item2 = false;
  for (const auto& c : r.checks) {
    CHECK(c.id.starts_with("thm-1.3"));
    if (c.id == "thm-1.3-item2" && c.params.value("Y", 99) == 4) {
      saw_item2 = true;
      CHECK(c.pass);
      CHECK(c.lhs["approx"] == "2");
    }
  }
  CHECK(saw_item2);
  o.checks = {"no-such-check"};
  CHECK_THROWS_AS(verify(builtin("ising"), o), Error);
  VerifyOptions bad;
  bad.mode = VerifyOptions::Subcategories::Explicit;
  bad.members = {0, 2};
  CHECK_THROWS_AS(verify(builtin("ising"), bad), Error);
}

TEST_CASE("report JSON round trip and determinism") {
  VerifyOptions o;
  o.mode = VerifyOptions::Subcategories::All;
  for (const auto& key : builtin_keys()) {
    const VerificationReport a = verify(builtin(key), o);
    const std::string text = report_to_json(a).dump(2);
    CHECK(report_from_json(json::parse(text)) == a);
    CHECK(report_to_json(verify(builtin(key), o)).dump(2) == text);
  }
}

TEST_CASE("concurrent verification gives identical reports") {
  VerifyOptions o;
  o.mode = VerifyOptions::Subcategories::All;
  const std::string expected = report_to_json(verify(builtin("su2k-3"), o)).dump();
  std::vector<std::future<std::string>> runs;
  for (int t = 0; t < 4; ++t) {
    runs.push_back(std::async(std::launch::async, [&] { return report_to_json(verify(builtin("su2k-3"), o)).dump(); }));
  }
  for (auto& f : runs) CHECK(f.get() == expected);
}

TEST_CASE("markdown and overview rendering") {
  const std::string md = report_to_markdown(verify(builtin("fib"), {}));
  CHECK(md.find("| check |") != std::string::npos);
  const std::string overview = render_overview(builtin("ising"));
  CHECK(overview.find("H_{bb}^a = 1") != std::string::npos);
  CHECK(render_overview(builtin("su2k-4-ad")).find("cosets wrt center: {0,2} {1}") != std::string::npos);
  CHECK(render_builtin_list().find("fib") != std::string::npos);
  CHECK(format_set({0, 4}) == "{0,4}");
}
