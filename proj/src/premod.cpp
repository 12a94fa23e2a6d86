#include "fuscat/premod.hpp"

#include <algorithm>
#include <set>

#include "fuscat/error.hpp"

namespace fuscat {

namespace {

std::string pair_str(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

CycNum piece_dim(const FusionRing& ring, const std::vector<std::size_t>& members) {
  CycNum s;
  for (auto i : members) s += ring.dim(i) * ring.dim(i);
  return s;
}

bool squarefree(const Integer& n) {
  if (n <= 0) return false;
  Integer m = n;
  for (Integer p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return false;
    }
  }
  return true;
}

}  // namespace

SMatrix validate_smatrix(const FusionRing& ring, const CharacterTable& table, Matrix raw) {
  const std::size_t r = ring.rank();
  if (raw.size() != r) throw Error(Errc::Validation, "S-matrix must have one row per simple");
  for (const auto& row : raw)
    if (row.size() != r) throw Error(Errc::Validation, "S-matrix must be square");

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (!(raw[i][j] == raw[j][i])) throw Error(Errc::AsymmetricS, "s at " + pair_str(i, j));
  for (std::size_t i = 0; i < r; ++i)
    if (!(raw[0][i] == ring.dim(i))) throw Error(Errc::BadFirstRow, "s_0i != d_i at i = " + std::to_string(i));

  SMatrix s;
  for (std::size_t i = 0; i < r; ++i) {
    const CycNum inv = ring.dim(i).inverse();
    std::vector<CycNum> psi(r);
    for (std::size_t k = 0; k < r; ++k) psi[k] = raw[i][k] * inv;
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = a; b < r; ++b) {
        CycNum rhs;
        for (std::size_t c = 0; c < r; ++c)
          if (int n = ring.N(a, b, c)) rhs += CycNum(static_cast<long>(n)) * psi[c];
        if (!(psi[a] * psi[b] == rhs)) {
          throw Error(Errc::PsiNotCharacter, "row " + std::to_string(i) + " fails on " + pair_str(a, b));
        }
      }
    std::size_t match = r;
    for (std::size_t j = 0; j < r && match == r; ++j) {
      bool eq = true;
      for (std::size_t k = 0; k < r && eq; ++k) eq = table.alpha(k, j) == psi[k];
      if (eq) match = j;
    }
    if (match == r) throw Error(Errc::NoMatchingColumn, "row " + std::to_string(i) + " matches no table column");
    s.psi_column_.push_back(match);
  }
  s.s_ = std::move(raw);
  return s;
}

Subcategory centralizer(const FusionRing& ring, const SMatrix& s, const Subcategory& sub) {
  std::vector<std::size_t> members;
  for (std::size_t j = 0; j < ring.rank(); ++j) {
    bool central = true;
    for (auto i : sub.members()) {
      if (!(s(i, j) == ring.dim(i) * ring.dim(j))) {
        central = false;
        break;
      }
    }
    if (central) members.push_back(j);
  }
  return Subcategory(ring, std::move(members));
}

Subcategory muger_center(const FusionRing& ring, const SMatrix& s) {
  return centralizer(ring, s, full_subcategory(ring));
}

CentralElement central_image(const FusionRing& ring, const SMatrix& s, const ClassFunction& cf) {
  const std::size_t r = ring.rank();
  CentralElement out{std::vector<CycNum>(r)};
  for (std::size_t j = 0; j < r; ++j) {
    CycNum acc;
    for (std::size_t i = 0; i < r; ++i)
      if (!cf.chi_coords[i].is_zero()) acc += cf.chi_coords[i] * s(i, j);
    out.e_coords[j] = acc / ring.dim(j);
  }
  return out;
}

CentralElement class_sum(const FusionRing& ring, const CharacterTable& table, std::size_t column) {
  const std::size_t r = ring.rank();
  CentralElement out{std::vector<CycNum>(r)};
  for (std::size_t i = 0; i < r; ++i) {
    out.e_coords[i] = table.class_dims()[column] * table.alpha(i, column) / ring.dim(i);
  }
  return out;
}

std::size_t PremodAnalysis::fiber_of_column(std::size_t j) const {
  auto it = std::lower_bound(J2.begin(), J2.end(), j);
  if (it == J2.end() || *it != j) return fibers.size();
  return static_cast<std::size_t>(it - J2.begin());
}

PremodAnalysis m_map(const FusionRing& ring, const CharacterTable& table, const SMatrix& s) {
  (void)table;
  PremodAnalysis pa;
  const std::size_t r = ring.rank();
  for (std::size_t i = 0; i < r; ++i) pa.M.push_back(s.psi_column(i));
  pa.J2 = pa.M;
  std::sort(pa.J2.begin(), pa.J2.end());
  pa.J2.erase(std::unique(pa.J2.begin(), pa.J2.end()), pa.J2.end());
  pa.fibers.assign(pa.J2.size(), {});
  for (std::size_t i = 0; i < r; ++i) pa.fibers[pa.fiber_of_column(pa.M[i])].push_back(i);
  pa.center = muger_center(ring, s);
  if (is_subset(pa.center, pointed_part(ring))) {
    pa.stabilizers.assign(r, {});
    for (std::size_t y = 0; y < r; ++y)
      for (auto g : pa.center.members())
        if (ring.N(g, y, y) >= 1) pa.stabilizers[y].push_back(g);
  }
  return pa;
}

RowRatioReport check_row_ratios(const FusionRing& ring, const CharacterTable& table, const SMatrix& s,
                                const PremodAnalysis& pa) {
  const std::size_t r = ring.rank();
  RowRatioReport rep;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t ip = 0; ip < r; ++ip) {
      const CycNum left = table.alpha(i, pa.M[ip]) / ring.dim(i);
      const CycNum mid = s(i, ip) / (ring.dim(i) * ring.dim(ip));
      const CycNum right = table.alpha(ip, pa.M[i]) / ring.dim(ip);
      rep.symmetric_ratio = rep.symmetric_ratio && left == mid && mid == right;
    }
  std::vector<CentralElement> images;
  for (std::size_t i = 0; i < r; ++i) {
    images.push_back(central_image(ring, s, class_function_from_chi(table, basis_element(ring, i).coeffs)));
    std::vector<CycNum> expansion(r);
    for (std::size_t ip = 0; ip < r; ++ip) expansion[ip] = table.alpha(i, pa.M[ip]);
    rep.expansion = rep.expansion && images.back().e_coords == expansion;
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = i; k < r; ++k) {
      KElement prod = multiply(ring, basis_element(ring, i), basis_element(ring, k));
      CentralElement lhs = central_image(ring, s, class_function_from_chi(table, prod.coeffs));
      std::vector<CycNum> rhs(r);
      for (std::size_t j = 0; j < r; ++j) rhs[j] = images[i].e_coords[j] * images[k].e_coords[j];
      rep.multiplicative = rep.multiplicative && lhs.e_coords == rhs;
    }
  return rep;
}

std::vector<VectorCheck> check_class_sum_formula(const FusionRing& ring, const CharacterTable& table,
                                                 const SMatrix& s, const PremodAnalysis& pa) {
  std::vector<VectorCheck> out;
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    CentralElement lhs = central_image(ring, s, class_function_from_chi(table, basis_element(ring, i).coeffs));
    const std::size_t j = pa.M[i];
    CentralElement cj = class_sum(ring, table, j);
    const CycNum factor = ring.dim(i) / table.class_dims()[j];
    for (auto& c : cj.e_coords) c *= factor;
    out.push_back(VectorCheck::compare(std::move(lhs.e_coords), std::move(cj.e_coords)));
  }
  return out;
}

CenterCosetReport check_center_cosets(const FusionRing& ring, const CharacterTable& table, const SMatrix& s,
                                      const PremodAnalysis& pa) {
  (void)s;
  CenterCosetReport rep;
  rep.cosets = coset_blocks(ring, pa.center);
  rep.fibers = pa.fibers;
  std::sort(rep.fibers.begin(), rep.fibers.end());
  rep.partitions_equal = rep.cosets == rep.fibers;
  rep.coset_count = rep.cosets.size();
  rep.j2 = pa.J2;
  rep.j2_size = pa.J2.size();
  rep.j_center = support_JD(ring, table, pa.center);
  return rep;
}

bool CosetDimReport::dims_pass() const {
  bool ok = support_matches && product_formula.pass && class_sum_over_jd.pass && class_sum_reduced.pass &&
            pieces_fill_d.pass;
  for (const auto& p : pieces) ok = ok && p.dim.pass;
  return ok;
}

bool CosetDimReport::integrality_pass() const {
  return std::all_of(pieces.begin(), pieces.end(), [](const Piece& p) { return p.integrality.integral; });
}

bool CosetDimReport::pass() const { return dims_pass() && integrality_pass() && decomposition_matches; }

CosetDimReport coset_dim_formulas(const FusionRing& ring, const CharacterTable& table, const SMatrix& s,
                                  const PremodAnalysis& pa, const Subcategory& sub) {
  CosetDimReport rep{.centralizer_of_d = centralizer(ring, s, sub), .d_meet_center = intersect(ring, sub, pa.center)};
  rep.j_centralizer = support_JD(ring, table, rep.centralizer_of_d);
  for (auto i : sub.members()) rep.m_image.push_back(pa.M[i]);
  std::sort(rep.m_image.begin(), rep.m_image.end());
  rep.m_image.erase(std::unique(rep.m_image.begin(), rep.m_image.end()), rep.m_image.end());
  rep.support_matches = rep.m_image == rep.j_centralizer;

  const CycNum dim_c = global_fpdim(ring);
  const CycNum dim_d = subcategory_fpdim(ring, sub);
  const CycNum dim_dp = subcategory_fpdim(ring, rep.centralizer_of_d);
  const CycNum dim_meet = subcategory_fpdim(ring, rep.d_meet_center);

  CycNum pieces_total, class_total;
  for (auto j : rep.j_centralizer) {
    CosetDimReport::Piece piece;
    piece.column = j;
    const std::size_t f = pa.fiber_of_column(j);
    if (f < pa.fibers.size()) {
      for (auto i : pa.fibers[f])
        if (sub.contains(i)) piece.members.push_back(i);
    }
    const CycNum pd = piece_dim(ring, piece.members);
    piece.dim = ScalarCheck::compare(pd, dim_meet * table.class_dims()[j]);
    piece.integrality = pd.is_zero() ? IntegralityCheck{CycNum(), false} : IntegralityCheck::of(dim_c * dim_meet / pd);
    pieces_total += pd;
    class_total += table.class_dims()[j];
    if (!piece.members.empty()) rep.pieces_nonempty.push_back(piece.members);
    rep.pieces.push_back(std::move(piece));
  }
  rep.product_formula = ScalarCheck::compare(dim_d * dim_dp, dim_c * dim_meet);
  rep.class_sum_over_jd = ScalarCheck::compare(class_total, dim_c / dim_dp);
  rep.class_sum_reduced = ScalarCheck::compare(dim_c / dim_dp, dim_d / dim_meet);
  rep.pieces_fill_d = ScalarCheck::compare(pieces_total, dim_d);

  std::sort(rep.pieces_nonempty.begin(), rep.pieces_nonempty.end());
  rep.restricted_cosets = check_coset_restriction(ring, pa.center, sub).restricted;
  rep.decomposition_matches = rep.pieces_nonempty == rep.restricted_cosets;
  return rep;
}

std::vector<ScalarCheck> check_center_fiber_dims(const FusionRing& ring, const CharacterTable& table,
                                                 const PremodAnalysis& pa) {
  const CycNum dim_center = subcategory_fpdim(ring, pa.center);
  std::vector<ScalarCheck> out;
  for (std::size_t f = 0; f < pa.J2.size(); ++f) {
    out.push_back(ScalarCheck::compare(piece_dim(ring, pa.fibers[f]), dim_center * table.class_dims()[pa.J2[f]]));
  }
  return out;
}

SquarefreeReport check_squarefree_pointed(const FusionRing& ring, const PremodAnalysis& pa, const Subcategory& sub) {
  SquarefreeReport rep;
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    const CycNum& d = ring.dim(i);
    if (!d.is_rational() || d.rational_value().get_den() != 1) {
      rep.reason = "not integral";
      return rep;
    }
  }
  const CycNum total = global_fpdim(ring);
  if (!squarefree(total.rational_value().get_num())) {
    rep.reason = "FPdim(C) is not squarefree";
    return rep;
  }
  if (!intersect(ring, sub, pa.center).is_trivial()) {
    rep.reason = "subcategory meets the Muger center";
    return rep;
  }
  rep.applicable = true;
  rep.pointed = is_subset(sub, pointed_part(ring));
  return rep;
}

bool TrivialMeetReport::pass() const {
  return singleton_pieces &&
         std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.check.integral; });
}

TrivialMeetReport check_trivial_meet_divisibility(const FusionRing& ring, const CharacterTable& table,
                                                  const SMatrix& s, const PremodAnalysis& pa, const Subcategory& sub) {
  if (!intersect(ring, sub, pa.center).is_trivial()) {
    throw Error(Errc::PreconditionFailed, "subcategory meets the Muger center nontrivially");
  }
  TrivialMeetReport rep;
  const CycNum total = global_fpdim(ring);
  for (auto y : sub.members()) {
    rep.entries.push_back({y, IntegralityCheck::of(total / (ring.dim(y) * ring.dim(y)))});
  }
  const CosetDimReport dims = coset_dim_formulas(ring, table, s, pa, sub);
  rep.singleton_pieces = std::all_of(dims.pieces.begin(), dims.pieces.end(), [&](const CosetDimReport::Piece& p) {
    return p.members.size() == 1 && piece_dim(ring, p.members) == ring.dim(p.members[0]) * ring.dim(p.members[0]);
  });
  return rep;
}

bool PointedCenterReport::item1_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.item1.integral && e.stabilizer_scaled.integral; });
}

bool PointedCenterReport::item2_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return !e.item2 || e.item2->integral; });
}

bool PointedCenterReport::class_dim_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.class_dim.pass; });
}

bool PointedCenterReport::fiber_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.fiber_integrality.integral; });
}

PointedCenterReport check_pointed_center_divisibility(const FusionRing& ring, const CharacterTable& table,
                                                      const SMatrix& s, const PremodAnalysis& pa) {
  (void)s;
  if (!is_subset(pa.center, pointed_part(ring))) {
    throw Error(Errc::PreconditionFailed, "center-not-pointed");
  }
  PointedCenterReport rep;
  const CycNum total = global_fpdim(ring);
  const CycNum dim_center = subcategory_fpdim(ring, pa.center);
  rep.free_action = acts_freely(ring, pa.center);
  for (std::size_t y = 0; y < ring.rank(); ++y) {
    PointedCenterReport::Entry e;
    e.simple = y;
    e.stabilizer = pa.stabilizers[y];
    const CycNum d2 = ring.dim(y) * ring.dim(y);
    const CycNum order(static_cast<long>(e.stabilizer.size()));
    const CycNum& class_dim = table.class_dims()[pa.M[y]];
    e.item1 = IntegralityCheck::of(total * dim_center / d2);
    e.class_dim = ScalarCheck::compare(class_dim, d2 / order);
    e.stabilizer_scaled = IntegralityCheck::of(total * order / d2);
    if (rep.free_action) e.item2 = IntegralityCheck::of(total / (dim_center * d2));
    e.fiber_integrality = IntegralityCheck::of(d2 * total / (dim_center * class_dim));
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace fuscat
