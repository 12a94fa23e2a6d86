#pragma once

// Premodular data at the level of the S-matrix: Muger centralizers, the
// braided map from class functions to central elements, the partition of
// simples by which character their S-row induces, and the dimension and
// divisibility statements that follow from it.

#include <optional>
#include <string>
#include <vector>

#include "fuscat/chartab.hpp"
#include "fuscat/cosets.hpp"
#include "fuscat/fusion.hpp"
#include "fuscat/report.hpp"

namespace fuscat {

class SMatrix {
 public:
  const CycNum& operator()(std::size_t i, std::size_t j) const { return s_[i][j]; }
  const Matrix& matrix() const { return s_; }
  std::size_t rank() const { return s_.size(); }
  /// Column of the character table equal to the character chi_j -> s_ij/d_i.
  std::size_t psi_column(std::size_t i) const { return psi_column_[i]; }

 private:
  friend SMatrix validate_smatrix(const FusionRing& ring, const CharacterTable& table, Matrix raw);
  Matrix s_;
  std::vector<std::size_t> psi_column_;
};

/// Checks symmetry, s_0i = d_i, that each row ratio is an algebra map, and
/// that each such map is a column of the table.
SMatrix validate_smatrix(const FusionRing& ring, const CharacterTable& table, Matrix raw);

/// Simples j with s_ij = d_i d_j for every i in sub.
Subcategory centralizer(const FusionRing& ring, const SMatrix& s, const Subcategory& sub);
Subcategory muger_center(const FusionRing& ring, const SMatrix& s);

/// Element of CE(C) in the basis of primitive idempotents E_i.
struct CentralElement {
  std::vector<CycNum> e_coords;
  friend bool operator==(const CentralElement&, const CentralElement&) = default;
};

/// chi_i -> sum_j (s_ij/d_j) E_j, extended linearly.
CentralElement central_image(const FusionRing& ring, const SMatrix& s, const ClassFunction& cf);

/// C_j = dim(C^j) sum_i (alpha_ij/d_i) E_i.
CentralElement class_sum(const FusionRing& ring, const CharacterTable& table, std::size_t column);

struct PremodAnalysis {
  /// M(i): table column of the character induced by S-row i.
  std::vector<std::size_t> M;
  /// Image of M, sorted.
  std::vector<std::size_t> J2;
  /// Fibers of M, listed in the order of J2.
  std::vector<std::vector<std::size_t>> fibers;
  Subcategory center;
  /// G_Y: invertible transparent g with g (x) Y = Y; empty when the center is not pointed.
  std::vector<std::vector<std::size_t>> stabilizers;

  std::size_t fiber_of_column(std::size_t j) const;
};

PremodAnalysis m_map(const FusionRing& ring, const CharacterTable& table, const SMatrix& s);

struct RowRatioReport {
  /// alpha_{i M(i')}/d_i = s_ii'/(d_i d_i') = alpha_{i' M(i)}/d_i' for all pairs.
  bool symmetric_ratio = true;
  /// central_image(chi_i) = sum_i' alpha_{i M(i')} E_i' for all i.
  bool expansion = true;
  /// central_image is multiplicative on basis pairs.
  bool multiplicative = true;
  bool pass() const { return symmetric_ratio && expansion && multiplicative; }
};

RowRatioReport check_row_ratios(const FusionRing& ring, const CharacterTable& table, const SMatrix& s,
                                const PremodAnalysis& pa);

/// central_image(chi_i) against d_i/dim(C^{M(i)}) C_{M(i)}, for every simple i.
std::vector<VectorCheck> check_class_sum_formula(const FusionRing& ring, const CharacterTable& table,
                                                 const SMatrix& s, const PremodAnalysis& pa);

struct CenterCosetReport {
  std::vector<std::vector<std::size_t>> cosets;
  std::vector<std::vector<std::size_t>> fibers;
  bool partitions_equal = false;
  std::size_t coset_count = 0;
  std::size_t j2_size = 0;
  std::vector<std::size_t> j2;
  std::vector<std::size_t> j_center;
  bool pass() const { return partitions_equal && coset_count == j2_size && j2 == j_center; }
};

/// Cosets with respect to the Muger center coincide with the fibers of M.
CenterCosetReport check_center_cosets(const FusionRing& ring, const CharacterTable& table, const SMatrix& s,
                                      const PremodAnalysis& pa);

struct CosetDimReport {
  Subcategory centralizer_of_d;
  Subcategory d_meet_center;
  std::vector<std::size_t> j_centralizer{};  ///< J_{D'}
  std::vector<std::size_t> m_image{};      ///< {M(i) : i in D}
  bool support_matches = false;            ///< J_{D'} == {M(i) : i in D}

  struct Piece {
    std::size_t column;
    std::vector<std::size_t> members;  ///< R(D)_j = D \cap fiber_j
    ScalarCheck dim;                   ///< dim R(D)_j against dim(D \cap C') dim(C^j)
    IntegralityCheck integrality;      ///< dim(C) dim(C' \cap D)/dim R(D)_j
  };
  std::vector<Piece> pieces{};  ///< one per j in J_{D'}

  ScalarCheck product_formula{};     ///< dim(D) dim(D') against dim(C) dim(D \cap C')
  ScalarCheck class_sum_over_jd{};   ///< sum_{J_D'} dim(C^j) against dim(C)/dim(D')
  ScalarCheck class_sum_reduced{};   ///< dim(C)/dim(D') against dim(D)/dim(D \cap C')
  ScalarCheck pieces_fill_d{};       ///< sum_j dim R(D)_j against dim(D)
  /// Nonempty pieces equal the cosets of D by D \cap C' computed inside D.
  std::vector<std::vector<std::size_t>> pieces_nonempty{};
  std::vector<std::vector<std::size_t>> restricted_cosets{};
  bool decomposition_matches = false;

  bool dims_pass() const;
  bool integrality_pass() const;
  bool pass() const;
};

CosetDimReport coset_dim_formulas(const FusionRing& ring, const CharacterTable& table, const SMatrix& s,
                                  const PremodAnalysis& pa, const Subcategory& sub);

/// dim(R_j) against dim(C') dim(C^j) for j in J2.
std::vector<ScalarCheck> check_center_fiber_dims(const FusionRing& ring, const CharacterTable& table,
                                                 const PremodAnalysis& pa);

struct SquarefreeReport {
  bool applicable = false;
  std::string reason;  ///< why the hypotheses fail, when not applicable
  bool pointed = false;
  bool pass() const { return !applicable || pointed; }
};

/// Integral, squarefree FPdim(C), and D \cap Z_2(C) trivial imply D pointed.
SquarefreeReport check_squarefree_pointed(const FusionRing& ring, const PremodAnalysis& pa, const Subcategory& sub);

struct TrivialMeetReport {
  struct Entry {
    std::size_t simple;
    IntegralityCheck check;  ///< FPdim(C)/d_Y^2
  };
  std::vector<Entry> entries;
  /// Every R(D)_j, j in J_{D'}, is a single simple Y with dim d_Y^2.
  bool singleton_pieces = false;
  bool pass() const;
};

/// For D with D \cap Z_2(C) = Vec; throws PreconditionFailed otherwise.
TrivialMeetReport check_trivial_meet_divisibility(const FusionRing& ring, const CharacterTable& table,
                                                  const SMatrix& s, const PremodAnalysis& pa, const Subcategory& sub);

struct PointedCenterReport {
  struct Entry {
    std::size_t simple;
    std::vector<std::size_t> stabilizer;
    IntegralityCheck item1;                    ///< FPdim(C) FPdim(Z_2)/d_Y^2
    ScalarCheck class_dim;                     ///< dim(C^{M(Y)}) against d_Y^2/|G_Y|
    IntegralityCheck stabilizer_scaled;        ///< FPdim(C)|G_Y|/d_Y^2
    std::optional<IntegralityCheck> item2;     ///< FPdim(C)/(FPdim(Z_2) d_Y^2), free action only
    IntegralityCheck fiber_integrality;        ///< d_Y^2 FPdim(C)/(FPdim(C') dim(C^{M(Y)}))
  };
  std::vector<Entry> entries;
  bool free_action = false;
  bool item1_pass() const;
  bool item2_pass() const;
  bool class_dim_pass() const;
  bool fiber_pass() const;
  bool pass() const { return item1_pass() && item2_pass() && class_dim_pass() && fiber_pass(); }
};

/// Requires a pointed Muger center; throws PreconditionFailed otherwise.
PointedCenterReport check_pointed_center_divisibility(const FusionRing& ring, const CharacterTable& table,
                                                      const SMatrix& s, const PremodAnalysis& pa);

}  // namespace fuscat
