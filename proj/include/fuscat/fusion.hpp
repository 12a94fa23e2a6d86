#pragma once

// Fusion rings: validated structure constants N_{ij}^k, duality, exact and
// numeric Frobenius-Perron dimensions, and fusion subcategories.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuscat/exactnum.hpp"

namespace fuscat {

/// Unvalidated fusion data as read from a file or built by a generator.
/// tensor[i][j][k] = N_{ij}^k.
struct FusionData {
  std::vector<std::string> names;
  std::vector<std::vector<std::vector<int>>> tensor;
  std::vector<std::size_t> dual;
  std::optional<std::vector<CycNum>> fpdims;
};

class FusionRing {
 public:
  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  int N(std::size_t i, std::size_t j, std::size_t k) const { return tensor_[(i * rank() + j) * rank() + k]; }
  std::size_t dual(std::size_t i) const { return dual_[i]; }

  bool has_exact_dims() const { return fpdims_.has_value(); }
  /// Exact FP-dimension of simple i; throws ExactDataMissing without exact data.
  const CycNum& dim(std::size_t i) const;
  const std::optional<std::vector<CycNum>>& fpdims() const { return fpdims_; }
  const std::vector<double>& fpdims_float() const { return fpdims_float_; }

  FusionData to_data() const;

 private:
  friend FusionRing validate_fusion_ring(FusionData candidate);

  std::vector<std::string> names_;
  std::vector<int> tensor_;
  std::vector<std::size_t> dual_;
  std::optional<std::vector<CycNum>> fpdims_;
  std::vector<double> fpdims_float_;
};

/// Checks every fusion-ring axiom (unit, duality, commutativity,
/// associativity, Frobenius reciprocity, and the exact dimension character
/// when present).  Throws Error(Validation) naming the first violated axiom
/// and its witnessing indices.
FusionRing validate_fusion_ring(FusionData candidate);

/// Perron roots of the fusion matrices, by power iteration on the strictly
/// positive matrix sum_i N_i whose Perron vector is the FP-dimension vector.
std::vector<double> fpdim_numeric(const FusionRing& ring);

/// sum_i d_i^2, exactly.
CycNum global_fpdim(const FusionRing& ring);

/// A fusion subcategory, stored as its sorted simple indices.
class Subcategory {
 public:
  Subcategory() : members_{0} {}
  /// Validates the subcategory axioms against ring.
  Subcategory(const FusionRing& ring, std::vector<std::size_t> members);

  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(std::size_t i) const;
  bool is_trivial() const { return members_.size() == 1; }

  friend bool operator==(const Subcategory&, const Subcategory&) = default;
  friend auto operator<=>(const Subcategory&, const Subcategory&) = default;

 private:
  struct Trusted {};
  Subcategory(Trusted, std::vector<std::size_t> members) : members_(std::move(members)) {}
  friend Subcategory subcategory_closure(const FusionRing&, std::span<const std::size_t>);

  std::vector<std::size_t> members_;
};

Subcategory full_subcategory(const FusionRing& ring);
Subcategory subcategory_closure(const FusionRing& ring, std::span<const std::size_t> generators);
Subcategory intersect(const FusionRing& ring, const Subcategory& a, const Subcategory& b);
bool is_subset(const Subcategory& a, const Subcategory& b);
/// FPdim(D) = sum_{i in D} d_i^2, exactly.
CycNum subcategory_fpdim(const FusionRing& ring, const Subcategory& sub);

inline constexpr std::size_t kDefaultEnumerationBound = 16;
/// All fusion subcategories, sorted by size then members.
std::vector<Subcategory> enumerate_subcategories(const FusionRing& ring,
                                                 std::size_t max_rank = kDefaultEnumerationBound);

/// Invertible simples (d_i = 1).
Subcategory pointed_part(const FusionRing& ring);

/// The fusion ring of the full subcategory on sub's simples, with simples
/// renumbered in sorted order.
FusionRing restrict_to(const FusionRing& ring, const Subcategory& sub);

/// Simple (i, i') of the product is index i * b.rank() + i'.
FusionRing deligne_product(const FusionRing& a, const FusionRing& b);

/// An element of K(C) tensored with a cyclotomic field, in the basis of simples.
struct KElement {
  std::vector<CycNum> coeffs;

  friend bool operator==(const KElement&, const KElement&) = default;
};

KElement basis_element(const FusionRing& ring, std::size_t i);
KElement multiply(const FusionRing& ring, const KElement& x, const KElement& y);
KElement scale(const KElement& x, const CycNum& s);

}  // namespace fuscat
