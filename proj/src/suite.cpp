#include "fuscat/suite.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <future>
#include <map>
#include <sstream>

#include "fuscat/cosets.hpp"
#include "fuscat/error.hpp"

namespace fuscat {

namespace {

const std::map<std::string, std::vector<std::string>>& aliases() {
  static const std::map<std::string, std::vector<std::string>> a{
      {"thm-3.5", {"eq-3.6", "eq-3.7"}},
      {"thm-3.5-first", {"eq-3.6"}},
      {"thm-3.5-second", {"eq-3.7"}},
  };
  return a;
}

std::size_t legend_index(const std::string& id) {
  const auto& legend = check_legend();
  for (std::size_t i = 0; i < legend.size(); ++i)
    if (legend[i].first == id) return i;
  return legend.size();
}

class Selector {
 public:
  explicit Selector(std::vector<std::string> requests) : requests_(std::move(requests)) {
    for (const auto& r : requests_) {
      bool known = aliases().contains(r);
      for (const auto& [id, text] : check_legend()) known = known || matches(r, id);
      if (!known) throw Error(Errc::Validation, "unknown check id '" + r + "'");
    }
  }

  bool operator()(const std::string& id) const {
    if (requests_.empty()) return true;
    for (const auto& r : requests_) {
      if (matches(r, id)) return true;
      if (auto it = aliases().find(r); it != aliases().end()) {
        if (std::find(it->second.begin(), it->second.end(), id) != it->second.end()) return true;
      }
    }
    return false;
  }

 private:
  static bool matches(const std::string& request, const std::string& id) {
    return id == request || id.starts_with(request + "-");
  }
  std::vector<std::string> requests_;
};

json set_json(const std::vector<std::size_t>& s) { return s; }

json partition_json(const std::vector<std::vector<std::size_t>>& p) {
  json out = json::array();
  for (const auto& b : p) out.push_back(set_json(b));
  return out;
}

json values_json(const std::vector<CycNum>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(exact_value(x));
  return out;
}

json matrix_values_json(const Matrix& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(values_json(row));
  return out;
}

json minpoly_json(const CycNum& x) { return {{"minimal_polynomial", minimal_polynomial(x).to_string()}}; }

CheckResult scalar(std::string id, json params, const ScalarCheck& c) {
  return {std::move(id), std::move(params), exact_value(c.lhs), exact_value(c.rhs), c.pass, std::nullopt};
}

CheckResult integrality(std::string id, json params, const IntegralityCheck& c) {
  return {std::move(id), std::move(params), exact_value(c.value), minpoly_json(c.value), c.integral, std::nullopt};
}

CheckResult skip(std::string id, json params, std::string reason) {
  return {std::move(id), std::move(params), nullptr, nullptr, false, std::move(reason)};
}

struct Context {
  const CatalogEntry& entry;
  const FusionRing& ring;
  const CharacterTable* table = nullptr;
  const SMatrix* s = nullptr;
  std::optional<PremodAnalysis> pa;
  Selector select;
};

// Runs body for a selected id; a library error inside it becomes a failed entry.
class Sink {
 public:
  explicit Sink(const Context& ctx) : ctx_(ctx) {}

  void run(const std::string& id, const json& params, const std::function<void()>& body) {
    if (!ctx_.select(id)) return;
    try {
      body();
    } catch (const Error& e) {
      out.push_back({id, params, json{{"error", e.what()}}, nullptr, false, std::nullopt});
    }
  }
  void skip_if(const std::string& id, const json& params, const std::string& reason) {
    if (ctx_.select(id)) out.push_back(skip(id, params, reason));
  }
  void add(CheckResult r) { out.push_back(std::move(r)); }

  std::vector<CheckResult> out;

 private:
  const Context& ctx_;
};

const char* kNoTable = "no character table";
const char* kNoS = "no S-matrix";

std::vector<CheckResult> subcategory_checks(const Context& ctx, const Subcategory& d) {
  Sink sink(ctx);
  const FusionRing& ring = ctx.ring;
  const json base{{"D", d.members()}};
  auto with = [&](std::initializer_list<std::pair<const char*, json>> extra) {
    json p = base;
    for (const auto& [k, v] : extra) p[k] = v;
    return p;
  };

  const CosetDecomposition dec = coset_partition(ring, d);

  sink.run("eq-3.1", base, [&] {
    const ProportionalityReport rep = verify_regular_proportionality(ring, d, dec);
    json lhs = json::array(), rhs = json::array();
    for (const auto& n : rep.normalized) {
      lhs.push_back({{"X", n.x}, {"value", values_json(n.lhs.coeffs)}});
      rhs.push_back({{"X", n.x}, {"value", values_json(n.rhs.coeffs)}});
    }
    const bool pairs_ok = std::all_of(rep.pairs.begin(), rep.pairs.end(), [](const auto& p) { return p.pass; });
    sink.add({"eq-3.1", base, std::move(lhs), std::move(rhs), rep.pass && pairs_ok, std::nullopt});
  });

  sink.run("eq-3.3", base, [&] {
    const HeckeAlgebra h = hecke_constants(ring, dec);
    const HeckeReport rep = check_hecke(ring, dec, h);
    json lhs = json::array();
    for (const auto& plane : h.H) {
      json p = json::array();
      for (const auto& row : plane) p.push_back(values_json(row));
      lhs.push_back(std::move(p));
    }
    json rhs{{"rows_sum_to_one", rep.rows_sum_to_one},
             {"representative_independent", rep.representative_independent},
             {"commutative", rep.commutative},
             {"associative", rep.associative},
             {"dual_symmetric", rep.dual_symmetric}};
    sink.add({"eq-3.3", with({{"blocks", partition_json(dec.blocks)}}), std::move(lhs), std::move(rhs), rep.pass(),
              std::nullopt});
  });

  sink.run("cor-3.9-1", base, [&] {
    for (const auto& c : coset_integrality(ring, dec)) {
      sink.add(integrality("cor-3.9-1", with({{"block", dec.blocks[c.block]}, {"X", c.member}}), c.check));
    }
  });

  if (ctx.table) {
    const CharacterTable& t = *ctx.table;
    sink.run("eq-2.7", base, [&] { sink.add(scalar("eq-2.7", base, check_class_dim_sum(ring, t, d))); });
    sink.run("prop-3.4", base, [&] { sink.add(scalar("prop-3.4", base, check_hecke_dimension(ring, t, d, dec))); });
    sink.run("eq-3.6", base, [&] {
      const auto jd = support_JD(ring, t, d);
      for (auto k : jd)
        for (auto l : jd) sink.add(scalar("eq-3.6", with({{"k", k}, {"l", l}}), first_orthogonality(ring, t, d, dec, k, l)));
    });
    sink.run("eq-3.7", base, [&] {
      for (std::size_t a = 0; a < dec.size(); ++a)
        for (std::size_t b = 0; b < dec.size(); ++b)
          sink.add(scalar("eq-3.7", with({{"t", dec.blocks[a]}, {"s", dec.blocks[b]}}),
                          second_orthogonality(ring, t, d, dec, a, b)));
    });
    sink.run("cor-3.9-2", base, [&] {
      try {
        for (const auto& f : free_action_integrality(ring, t, d))
          sink.add(integrality("cor-3.9-2", with({{"j", f.column}}), f.check));
      } catch (const Error& e) {
        if (e.code() != Errc::PreconditionFailed) throw;
        sink.add(skip("cor-3.9-2", base, e.detail()));
      }
    });
  } else {
    for (const char* id : {"eq-2.7", "prop-3.4", "eq-3.6", "eq-3.7", "cor-3.9-2"}) sink.skip_if(id, base, kNoTable);
  }

  if (ctx.s) {
    const CharacterTable& t = *ctx.table;
    const SMatrix& s = *ctx.s;
    const PremodAnalysis& pa = *ctx.pa;
    std::optional<CosetDimReport> cd;
    auto dims = [&]() -> const CosetDimReport& {
      if (!cd) cd = coset_dim_formulas(ring, t, s, pa, d);
      return *cd;
    };
    sink.run("prop-4.12", base, [&] {
      const auto& r = dims();
      json got = json::array(), want = json::array();
      bool ok = r.support_matches;
      for (const auto& p : r.pieces) {
        got.push_back({{"j", p.column}, {"members", p.members}, {"dim", exact_value(p.dim.lhs)}});
        want.push_back({{"j", p.column}, {"dim", exact_value(p.dim.rhs)}});
        ok = ok && p.dim.pass;
      }
      sink.add({"prop-4.12", base, {{"j_centralizer", r.j_centralizer}, {"pieces", std::move(got)}},
                {{"m_image", r.m_image}, {"pieces", std::move(want)}}, ok, std::nullopt});
    });
    sink.run("eq-4.15", base, [&] {
      sink.add(scalar("eq-4.15", with({{"centralizer", dims().centralizer_of_d.members()}}), dims().product_formula));
    });
    sink.run("cor-4.16", base, [&] {
      for (const auto& p : dims().pieces) sink.add(integrality("cor-4.16", with({{"j", p.column}}), p.integrality));
    });
    sink.run("prop-4.21", base, [&] {
      const auto& r = dims();
      json lhs{{"pieces", partition_json(r.pieces_nonempty)},
               {"dim_sum", exact_value(r.pieces_fill_d.lhs)},
               {"class_dim_sum", exact_value(r.class_sum_over_jd.lhs)},
               {"index", exact_value(r.class_sum_reduced.lhs)}};
      json rhs{{"cosets", partition_json(r.restricted_cosets)},
               {"dim_sum", exact_value(r.pieces_fill_d.rhs)},
               {"class_dim_sum", exact_value(r.class_sum_over_jd.rhs)},
               {"index", exact_value(r.class_sum_reduced.rhs)}};
      const bool ok = r.decomposition_matches && r.pieces_fill_d.pass && r.class_sum_over_jd.pass &&
                      r.class_sum_reduced.pass;
      sink.add({"prop-4.21", base, std::move(lhs), std::move(rhs), ok, std::nullopt});
    });
    sink.run("cor-4.18", base, [&] {
      const SquarefreeReport r = check_squarefree_pointed(ring, pa, d);
      json lhs{{"applicable", r.applicable}};
      if (!r.applicable) lhs["vacuous_because"] = r.reason;
      sink.add({"cor-4.18", base, std::move(lhs), {{"pointed", r.pointed}}, r.pass(), std::nullopt});
    });
    sink.run("thm-1.1", base, [&] {
      try {
        const TrivialMeetReport r = check_trivial_meet_divisibility(ring, t, s, pa, d);
        for (const auto& e : r.entries) {
          CheckResult c = integrality("thm-1.1", with({{"Y", e.simple}}), e.check);
          c.rhs["singleton_pieces"] = r.singleton_pieces;
          c.pass = c.pass && r.singleton_pieces;
          sink.add(std::move(c));
        }
      } catch (const Error& e) {
        if (e.code() != Errc::PreconditionFailed) throw;
        sink.add(skip("thm-1.1", base, e.detail()));
      }
    });
  } else {
    for (const char* id : {"prop-4.12", "eq-4.15", "cor-4.16", "prop-4.21", "cor-4.18", "thm-1.1"})
      sink.skip_if(id, base, kNoS);
  }
  return std::move(sink.out);
}

std::vector<CheckResult> global_checks(const Context& ctx, const std::vector<Subcategory>& subs) {
  Sink sink(ctx);
  const FusionRing& ring = ctx.ring;
  const json none = json::object();

  if (ctx.table) {
    sink.run("eq-2.4", none, [&] {
      const MatrixCheck m = check_second_orthogonality(ring, *ctx.table);
      sink.add({"eq-2.4", none, matrix_values_json(m.lhs), matrix_values_json(m.rhs), m.pass, std::nullopt});
    });
  } else {
    sink.skip_if("eq-2.4", none, kNoTable);
  }

  sink.run("lemma-3.12", none, [&] {
    for (const auto& d : subs)
      for (const auto& a : subs) {
        const RestrictionReport r = check_coset_restriction(ring, d, a);
        sink.add({"lemma-3.12", {{"D", d.members()}, {"A", a.members()}}, partition_json(r.intersections),
                  partition_json(r.restricted), r.pass, std::nullopt});
      }
  });

  if (!ctx.s) {
    for (const char* id : {"eq-4.3", "thm-4.6", "thm-4.10", "eq-4.20", "eq-4.23", "thm-1.3-item1", "thm-1.3-item2",
                           "rem-4.25"})
      sink.skip_if(id, none, kNoS);
    return std::move(sink.out);
  }
  const CharacterTable& t = *ctx.table;
  const SMatrix& s = *ctx.s;
  const PremodAnalysis& pa = *ctx.pa;

  sink.run("eq-4.3", none, [&] {
    const RowRatioReport r = check_row_ratios(ring, t, s, pa);
    sink.add({"eq-4.3", none,
              {{"symmetric_ratio", r.symmetric_ratio}, {"expansion", r.expansion}, {"multiplicative", r.multiplicative}},
              {{"symmetric_ratio", true}, {"expansion", true}, {"multiplicative", true}}, r.pass(), std::nullopt});
  });
  sink.run("thm-4.6", none, [&] {
    const auto checks = check_class_sum_formula(ring, t, s, pa);
    for (std::size_t i = 0; i < checks.size(); ++i) {
      sink.add({"thm-4.6", {{"i", i}, {"M", pa.M[i]}}, values_json(checks[i].lhs), values_json(checks[i].rhs),
                checks[i].pass, std::nullopt});
    }
  });
  sink.run("thm-4.10", none, [&] {
    const CenterCosetReport r = check_center_cosets(ring, t, s, pa);
    sink.add({"thm-4.10", {{"center", pa.center.members()}},
              {{"cosets", partition_json(r.cosets)}, {"coset_count", r.coset_count}, {"j_center", r.j_center}},
              {{"fibers", partition_json(r.fibers)}, {"j2_size", r.j2_size}, {"j2", r.j2}}, r.pass(), std::nullopt});
  });
  sink.run("eq-4.20", none, [&] {
    const auto checks = check_center_fiber_dims(ring, t, pa);
    for (std::size_t f = 0; f < checks.size(); ++f) {
      sink.add(scalar("eq-4.20", {{"j", pa.J2[f]}, {"fiber", pa.fibers[f]}}, checks[f]));
    }
  });

  const char* pointed_ids[] = {"eq-4.23", "thm-1.3-item1", "thm-1.3-item2", "rem-4.25"};
  std::optional<PointedCenterReport> pc;
  try {
    pc = check_pointed_center_divisibility(ring, t, s, pa);
  } catch (const Error& e) {
    if (e.code() != Errc::PreconditionFailed) throw;
    for (const char* id : pointed_ids) sink.skip_if(id, none, e.detail());
    return std::move(sink.out);
  }
  for (const auto& e : pc->entries) {
    const json params{{"Y", e.simple}, {"G_Y", e.stabilizer}};
    sink.run("eq-4.23", params, [&] { sink.add(scalar("eq-4.23", params, e.class_dim)); });
    sink.run("thm-1.3-item1", params, [&] {
      CheckResult c = integrality("thm-1.3-item1", params, e.item1);
      c.rhs["stabilizer_scaled"] = exact_value(e.stabilizer_scaled.value);
      c.rhs["stabilizer_scaled_integral"] = e.stabilizer_scaled.integral;
      c.pass = c.pass && e.stabilizer_scaled.integral;
      sink.add(std::move(c));
    });
    if (e.item2) {
      sink.run("thm-1.3-item2", params, [&] { sink.add(integrality("thm-1.3-item2", params, *e.item2)); });
    }
    sink.run("rem-4.25", params, [&] { sink.add(integrality("rem-4.25", params, e.fiber_integrality)); });
  }
  if (!pc->free_action) sink.skip_if("thm-1.3-item2", none, "the Muger center does not act freely on simples");
  return std::move(sink.out);
}

std::vector<Subcategory> default_subcategories(const CatalogEntry& e, const std::optional<PremodAnalysis>& pa) {
  std::vector<Subcategory> subs{Subcategory(), full_subcategory(e.ring), pointed_part(e.ring)};
  if (pa) subs.push_back(pa->center);
  std::sort(subs.begin(), subs.end(), [](const Subcategory& a, const Subcategory& b) {
    return std::pair(a.size(), a.members()) < std::pair(b.size(), b.members());
  });
  subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
  return subs;
}

json build_analysis(const Context& ctx, const std::vector<Subcategory>& subs, std::uint64_t seed) {
  const FusionRing& ring = ctx.ring;
  json a;
  a["rank"] = ring.rank();
  a["names"] = ring.names();
  a["fpdims"] = values_json(*ring.fpdims());
  a["global_fpdim"] = exact_value(global_fpdim(ring));
  {
    const std::vector<double> num = fpdim_numeric(ring);
    bool ok = true;
    for (std::size_t i = 0; i < ring.rank(); ++i) ok = ok && std::abs(num[i] - embed_complex(ring.dim(i)).real()) <= 1e-9;
    a["fpdims_numeric_match"] = ok;
  }
  if (ctx.table) {
    a["fp_column"] = ctx.table->fp_column();
    a["class_dims"] = values_json(ctx.table->class_dims());
    a["codegrees"] = values_json(ctx.table->codegrees());
    json numeric{{"seed", seed}};
    try {
      const NumericTable nt = characters_numeric(ring, seed);
      numeric["attempts"] = nt.attempts;
      numeric["columns_match"] = !match_columns(*ctx.table, nt, 1e-8).empty();
    } catch (const Error& e) {
      numeric["error"] = e.what();
    }
    a["numeric_characters"] = std::move(numeric);
  }
  json sj = json::array();
  for (const auto& d : subs) sj.push_back(d.members());
  a["subcategories"] = std::move(sj);
  if (ctx.pa) {
    const PremodAnalysis& pa = *ctx.pa;
    a["premodular"] = {{"classification", classify(ctx.entry)}, {"center", pa.center.members()},
                       {"M", pa.M},
                       {"J2", pa.J2},
                       {"fibers", partition_json(pa.fibers)},
                       {"stabilizers", partition_json(pa.stabilizers)}};
  }
  if (ctx.entry.twists) a["twists"] = "present; not read by any check";
  return a;
}

std::string humanize(const json& j) {
  if (j.is_null()) return "";
  if (j.is_object() && j.contains("exact") && j.contains("approx")) return j.at("approx").get<std::string>();
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + humanize(j[i]);
    return s + "]";
  }
  if (j.is_object()) {
    std::string s;
    for (auto it = j.begin(); it != j.end(); ++it) s += (s.empty() ? "" : "; ") + it.key() + ": " + humanize(it.value());
    return s;
  }
  return j.dump();
}

std::string md_cell(std::string s) {
  std::string out;
  for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
  return out;
}

std::string block_label(std::size_t t) { return t < 26 ? std::string(1, static_cast<char>('a' + t)) : "b" + std::to_string(t); }

std::string format_partition(const std::vector<std::vector<std::size_t>>& p) {
  std::string s;
  for (const auto& b : p) s += (s.empty() ? "" : " ") + format_set(b);
  return s;
}

}  // namespace

std::string format_set(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

const std::vector<std::pair<std::string, std::string>>& check_legend() {
  static const std::vector<std::pair<std::string, std::string>> legend{
      {"eq-2.4", "sum_i mu_l(chi_i) mu_k(chi_i*) = delta_lk FPdim(C)/dim(C^k)"},
      {"eq-2.7", "sum over J_D of dim(C^j) = FPdim(C)/FPdim(D)"},
      {"eq-3.1", "[X]R_D/d_X = FPdim(D) R_t/FPdim(R_t), equal within a coset and distinct across cosets"},
      {"eq-3.3", "Hecke constants: rows sum to 1, independent of representatives, commutative, associative"},
      {"prop-3.4", "number of cosets = |J_D|"},
      {"eq-3.6", "sum_t FPdim(R_t)/d_{X_t}^2 mu_k(chi_t) mu_l(chi_t*) = delta_lk FPdim(C)/dim(C^k)"},
      {"eq-3.7", "sum over J_D of dim(C^k) mu_k(chi_t) mu_k(chi_s*) = delta_st d_{X_t} d_{X_s} FPdim(C)/FPdim(R_t)"},
      {"cor-3.9-1", "d_X^2 FPdim(C)/FPdim(R_t) is an algebraic integer for every X in t"},
      {"cor-3.9-2", "FPdim(C)/(FPdim(D) dim(C^j)) is an algebraic integer when D is pointed and acts freely"},
      {"lemma-3.12", "nonempty A meet (cosets of C by D) = cosets of A by A meet D"},
      {"eq-4.3", "alpha_{i M(i')}/d_i = s_ii'/(d_i d_i'); central image expansion; central image multiplicative"},
      {"thm-4.6", "central image of chi_i = d_i/dim(C^{M(i)}) times the class sum C_{M(i)}"},
      {"thm-4.10", "cosets by the Muger center = fibers of M; #cosets = |J_2|; J_2 = J of the center"},
      {"prop-4.12", "J_{D'} = M(Irr D) and dim R(D)_j = dim(D meet C') dim(C^j)"},
      {"eq-4.15", "dim(D) dim(D') = dim(C) dim(D meet C')"},
      {"cor-4.16", "dim(C) dim(C' meet D)/dim R(D)_j is an algebraic integer"},
      {"cor-4.18", "integral, squarefree FPdim(C), D meet C' = Vec imply D pointed"},
      {"eq-4.20", "dim R_j = dim(C') dim(C^j)"},
      {"prop-4.21", "pieces R(D)_j = cosets of D by D meet C'; dimensions add up to dim(D)"},
      {"eq-4.23", "dim(C^{M(Y)}) = d_Y^2/|G_Y| for a pointed Muger center"},
      {"thm-1.1", "FPdim(C)/d_Y^2 is an algebraic integer for Y in D when D meet C' = Vec"},
      {"thm-1.3-item1", "FPdim(C) FPdim(C')/d_Y^2 is an algebraic integer for a pointed Muger center"},
      {"thm-1.3-item2", "FPdim(C)/(FPdim(C') d_Y^2) is an algebraic integer when the center acts freely"},
      {"rem-4.25", "d_Y^2 FPdim(C)/(FPdim(C') dim(C^{M(Y)})) is an algebraic integer"},
  };
  return legend;
}

ReportSummary VerificationReport::summary() const {
  ReportSummary s;
  for (const auto& c : checks) {
    ++s.total;
    if (c.skipped()) {
      ++s.skipped;
    } else if (c.pass) {
      ++s.passed;
    } else {
      ++s.failed;
    }
  }
  return s;
}

VerificationReport verify(const CatalogEntry& entry, const VerifyOptions& options) {
  Context ctx{entry, entry.ring, entry.table ? &*entry.table : nullptr, entry.smatrix ? &*entry.smatrix : nullptr,
              std::nullopt, Selector(options.checks)};
  if (!entry.ring.has_exact_dims()) throw Error(Errc::ExactDataMissing, "verification needs exact FP-dimensions");
  if (ctx.s) ctx.pa = m_map(entry.ring, *ctx.table, *ctx.s);

  std::vector<Subcategory> subs;
  switch (options.mode) {
    case VerifyOptions::Subcategories::Default: subs = default_subcategories(entry, ctx.pa); break;
    case VerifyOptions::Subcategories::All: subs = enumerate_subcategories(entry.ring); break;
    case VerifyOptions::Subcategories::Explicit: {
      std::vector<std::size_t> m = options.members;
      std::sort(m.begin(), m.end());
      m.erase(std::unique(m.begin(), m.end()), m.end());
      for (auto i : m)
        if (i >= entry.ring.rank()) throw Error(Errc::Validation, "subcategory member " + std::to_string(i) + " out of range");
      subs.emplace_back(entry.ring, std::move(m));
      break;
    }
  }

  std::vector<std::future<std::vector<CheckResult>>> jobs;
  for (const auto& d : subs) {
    jobs.push_back(std::async(std::launch::async, [&ctx, &d] { return subcategory_checks(ctx, d); }));
  }
  VerificationReport report;
  report.target = entry.key;
  report.checks = global_checks(ctx, subs);
  for (auto& j : jobs) {
    auto part = j.get();
    report.checks.insert(report.checks.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return legend_index(a.id) < legend_index(b.id); });
  report.analysis = build_analysis(ctx, subs, options.seed);
  return report;
}

json report_to_json(const VerificationReport& report) {
  const ReportSummary s = report.summary();
  json legend = json::object();
  for (const auto& [id, text] : check_legend()) legend[id] = text;
  json checks = json::array();
  for (const auto& c : report.checks) {
    json e{{"check", c.id}, {"params", c.params}, {"lhs", c.lhs}, {"rhs", c.rhs}};
    e["pass"] = c.skipped() ? json(nullptr) : json(c.pass);
    if (c.skipped_reason) e["skipped_reason"] = *c.skipped_reason;
    checks.push_back(std::move(e));
  }
  return {{"target", report.target},
          {"summary", {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}, {"skipped", s.skipped}}},
          {"legend", std::move(legend)},
          {"analysis", report.analysis},
          {"checks", std::move(checks)}};
}

VerificationReport report_from_json(const json& j) {
  auto need = [&](const json& o, const char* k) -> const json& {
    if (!o.is_object() || !o.contains(k)) throw Error(Errc::Schema, std::string("report is missing '") + k + "'");
    return o.at(k);
  };
  VerificationReport r;
  const json& target = need(j, "target");
  if (!target.is_string()) throw Error(Errc::Schema, "target must be a string");
  r.target = target.get<std::string>();
  r.analysis = need(j, "analysis");
  const json& checks = need(j, "checks");
  if (!checks.is_array()) throw Error(Errc::Schema, "checks must be an array");
  for (const auto& e : checks) {
    CheckResult c;
    const json& id = need(e, "check");
    if (!id.is_string()) throw Error(Errc::Schema, "check id must be a string");
    c.id = id.get<std::string>();
    c.params = need(e, "params");
    c.lhs = need(e, "lhs");
    c.rhs = need(e, "rhs");
    const json& pass = need(e, "pass");
    if (e.contains("skipped_reason")) {
      if (!e.at("skipped_reason").is_string()) throw Error(Errc::Schema, "skipped_reason must be a string");
      c.skipped_reason = e.at("skipped_reason").get<std::string>();
    } else if (!pass.is_boolean()) {
      throw Error(Errc::Schema, "pass must be a boolean");
    } else {
      c.pass = pass.get<bool>();
    }
    r.checks.push_back(std::move(c));
  }
  return r;
}

std::string report_to_markdown(const VerificationReport& report) {
  const ReportSummary s = report.summary();
  std::ostringstream os;
  os << "# Verification of " << report.target << "\n\n";
  os << s.total << " checks: " << s.passed << " passed, " << s.failed << " failed, " << s.skipped << " skipped.\n\n";
  os << "| check | params | lhs | rhs | result |\n|---|---|---|---|---|\n";
  for (const auto& c : report.checks) {
    std::string result = c.skipped() ? "skipped: " + *c.skipped_reason : (c.pass ? "pass" : "FAIL");
    os << "| " << c.id << " | " << md_cell(humanize(c.params)) << " | " << md_cell(humanize(c.lhs)) << " | "
       << md_cell(humanize(c.rhs)) << " | " << md_cell(result) << " |\n";
  }
  os << "\n## Legend\n\n";
  for (const auto& [id, text] : check_legend()) os << "- `" << id << "`: " << text << "\n";
  return os.str();
}

std::string render_overview(const CatalogEntry& entry) {
  const FusionRing& ring = entry.ring;
  if (!ring.has_exact_dims()) throw Error(Errc::ExactDataMissing, "report needs exact FP-dimensions");
  std::ostringstream os;
  os << "# " << entry.key << "\n\n";
  os << "rank " << ring.rank() << ", FPdim(C) = " << approx_string(global_fpdim(ring)) << "\n\n";
  os << "## Simples\n\n| i | name | d_i | dual |\n|---|---|---|---|\n";
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    os << "| " << i << " | " << md_cell(ring.names()[i]) << " | " << approx_string(ring.dim(i)) << " | " << ring.dual(i)
       << " |\n";
  }

  std::optional<PremodAnalysis> pa;
  if (entry.table) {
    const CharacterTable& t = *entry.table;
    os << "\n## Characters\n\n| j | dim(C^j) | codegree |\n|---|---|---|\n";
    for (std::size_t j = 0; j < t.rank(); ++j) {
      os << "| " << j << (j == t.fp_column() ? " (FP)" : "") << " | " << approx_string(t.class_dims()[j]) << " | "
         << approx_string(t.codegrees()[j]) << " |\n";
    }
    if (entry.smatrix) pa = m_map(ring, t, *entry.smatrix);
  }

  if (pa) {
    os << "\n## Premodular data\n\n";
    os << "classification: " << classify(entry) << "\n\n";
    os << "Muger center: " << format_set(pa->center.members()) << "\n\n";
    std::vector<std::size_t> m = pa->M;
    os << "M: " << format_set(m) << "\n\n";
    os << "M-fibers: " << format_partition(pa->fibers) << "\n\n";
    os << "cosets wrt center: " << format_partition(coset_blocks(ring, pa->center)) << "\n\n";
    const bool pointed = is_subset(pa->center, pointed_part(ring));
    if (pointed) {
      os << "| Y | G_Y | FPdim(C)FPdim(C')/d_Y^2 |\n|---|---|---|\n";
      const CycNum scale = global_fpdim(ring) * subcategory_fpdim(ring, pa->center);
      for (std::size_t y = 0; y < ring.rank(); ++y) {
        os << "| " << y << " | " << format_set(pa->stabilizers[y]) << " | "
           << approx_string(scale / (ring.dim(y) * ring.dim(y))) << " |\n";
      }
    } else {
      os << "center not pointed\n";
    }
  }

  os << "\n## Subcategories\n";
  std::vector<Subcategory> subs;
  try {
    subs = enumerate_subcategories(ring);
  } catch (const Error&) {
    subs = {Subcategory(), full_subcategory(ring)};
  }
  for (const auto& d : subs) {
    const CosetDecomposition dec = coset_partition(ring, d);
    os << "\n### D = " << format_set(d.members()) << "\n\n";
    os << "cosets wrt D: " << format_partition(dec.blocks) << "\n\n";
    os << "| block | members | X_t | FPdim(R_t) | d_X^2 FPdim(C)/FPdim(R_t) |\n|---|---|---|---|---|\n";
    const CycNum total = global_fpdim(ring);
    for (std::size_t t = 0; t < dec.size(); ++t) {
      const CycNum& x = ring.dim(dec.rep[t]);
      os << "| " << block_label(t) << " | " << format_set(dec.blocks[t]) << " | " << dec.rep[t] << " | "
         << approx_string(dec.reg_dim[t]) << " | " << approx_string(x * x * total / dec.reg_dim[t]) << " |\n";
    }
    os << "\nHecke constants (nonzero):\n\n";
    const HeckeAlgebra h = hecke_constants(ring, dec);
    for (std::size_t a = 0; a < h.size(); ++a)
      for (std::size_t b = 0; b < h.size(); ++b)
        for (std::size_t p = 0; p < h.size(); ++p) {
          if (h.H[a][b][p].is_zero()) continue;
          os << "- H_{" << block_label(a) << block_label(b) << "}^" << block_label(p) << " = "
             << approx_string(h.H[a][b][p]) << "\n";
        }
  }
  return os.str();
}

std::string render_builtin_list() {
  std::ostringstream os;
  for (const auto& key : builtin_keys()) {
    const CatalogEntry& e = builtin(key);
    std::size_t center = 0;
    if (e.smatrix) center = muger_center(e.ring, *e.smatrix).size();
    os << key << "  rank " << e.ring.rank() << "  FPdim " << approx_string(global_fpdim(e.ring)) << "  center "
       << center << "  " << classify(e) << "\n";
  }
  return os.str();
}

CatalogEntry resolve_target(const std::string& target) {
  try {
    return builtin(target);
  } catch (const Error& e) {
    if (e.code() != Errc::UnknownKey) throw;
    if (!std::filesystem::exists(target)) throw;
  }
  return load_entry_file(target);
}

}  // namespace fuscat
