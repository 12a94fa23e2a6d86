#pragma once

// Right cosets of the simples with respect to a fusion subcategory D,
// their regular elements R_t, and the Hecke algebra spanned by the
// normalized elements e_t = R_t / FPdim(R_t).

#include <vector>

#include "fuscat/chartab.hpp"
#include "fuscat/fusion.hpp"
#include "fuscat/report.hpp"

namespace fuscat {

struct CosetDecomposition {
  /// Blocks sorted by smallest member; each block sorted.
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of;
  /// Representative X_t per block.
  std::vector<std::size_t> rep;
  /// FPdim(R_t) = sum_{Z in t} d_Z^2.
  std::vector<CycNum> reg_dim;
  /// t -> t* = {dual(i) : i in t}.
  std::vector<std::size_t> dual_block;

  std::size_t size() const { return blocks.size(); }
};

/// X ~ Y iff X is a constituent of Y (x) S for some simple S of D.  The
/// breadth-first partition is cross-checked against a union-find build, and
/// the one-step relation is checked to be transitive already.
CosetDecomposition coset_partition(const FusionRing& ring, const Subcategory& sub);
/// Partition only (no exact data needed).
std::vector<std::vector<std::size_t>> coset_blocks(const FusionRing& ring, const Subcategory& sub);

/// R_t as an element of K(C).
KElement regular_element(const FusionRing& ring, const std::vector<std::size_t>& members);

struct ProportionalityReport {
  struct Pair {
    std::size_t x, y;
    bool same_block;
    bool equal;  ///< [X]R_D/d_X == [Y]R_D/d_Y
    bool pass;
  };
  struct Normalized {
    std::size_t x;
    KElement lhs;  ///< [X]R_D/d_X
    KElement rhs;  ///< FPdim(D) R_t/FPdim(R_t)
    bool pass;
  };
  std::vector<Pair> pairs;
  std::vector<Normalized> normalized;
  bool pass = true;
};

ProportionalityReport verify_regular_proportionality(const FusionRing& ring, const Subcategory& sub,
                                                     const CosetDecomposition& dec);

struct HeckeAlgebra {
  /// H[m][n][p]
  std::vector<std::vector<std::vector<CycNum>>> H;
  std::size_t size() const { return H.size(); }
};

/// Structure constants of e_m e_n = sum_p H_mn^p e_p.  Throws
/// InconsistentCoset when a product is not a combination of the e_p.
HeckeAlgebra hecke_constants(const FusionRing& ring, const CosetDecomposition& dec);

struct HeckeReport {
  bool rows_sum_to_one = true;
  /// Closed form sum_{Z in p} d_Z N_XY^Z/(d_X d_Y) agrees for every X in m, Y in n.
  bool representative_independent = true;
  bool commutative = true;
  bool associative = true;
  /// H_mn^p = H_{n* m*}^{p*}; informational.
  bool dual_symmetric = true;
  bool pass() const { return rows_sum_to_one && representative_independent && commutative && associative; }
};

HeckeReport check_hecke(const FusionRing& ring, const CosetDecomposition& dec, const HeckeAlgebra& hecke);

/// Number of cosets against |J_D|.
ScalarCheck check_hecke_dimension(const FusionRing& ring, const CharacterTable& table, const Subcategory& sub,
                                  const CosetDecomposition& dec);

/// sum_t FPdim(R_t)/d_{X_t}^2 mu_k(chi_t) mu_l(chi_{t*}) against
/// delta_{lk} FPdim(C)/dim(C^k).  Throws IndexNotInJD.
ScalarCheck first_orthogonality(const FusionRing& ring, const CharacterTable& table, const Subcategory& sub,
                                const CosetDecomposition& dec, std::size_t k, std::size_t l);

/// sum_{k in J_D} dim(C^k) mu_k(chi_t) mu_k(chi_{s*}) against
/// delta_{st} d_{X_t} d_{X_s} FPdim(C)/FPdim(R_t).
ScalarCheck second_orthogonality(const FusionRing& ring, const CharacterTable& table, const Subcategory& sub,
                                 const CosetDecomposition& dec, std::size_t t, std::size_t s);

struct CosetIntegrality {
  std::size_t block;
  std::size_t member;
  IntegralityCheck check;  ///< d_X^2 FPdim(C)/FPdim(R_t)
};

/// Every block with every member taken as representative.
std::vector<CosetIntegrality> coset_integrality(const FusionRing& ring, const CosetDecomposition& dec);

/// True when no non-unit simple of sub fixes a simple of the ring.
bool acts_freely(const FusionRing& ring, const Subcategory& sub);

struct FreeActionIntegrality {
  std::size_t column;
  IntegralityCheck check;  ///< FPdim(C)/(FPdim(D) dim(C^j))
};

/// For a pointed D acting freely; throws PreconditionFailed otherwise.
std::vector<FreeActionIntegrality> free_action_integrality(const FusionRing& ring, const CharacterTable& table,
                                                           const Subcategory& sub);

struct RestrictionReport {
  /// Nonempty A \cap m over cosets m of C by D (indices of C).
  std::vector<std::vector<std::size_t>> intersections;
  /// Cosets of A by A \cap D computed inside A (mapped back to indices of C).
  std::vector<std::vector<std::size_t>> restricted;
  bool pass = false;
};

RestrictionReport check_coset_restriction(const FusionRing& ring, const Subcategory& d, const Subcategory& a);

/// True when every block of fine lies inside a block of coarse.
bool refines(const std::vector<std::vector<std::size_t>>& fine, const std::vector<std::vector<std::size_t>>& coarse);

}  // namespace fuscat
