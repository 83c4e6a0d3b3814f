#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rankmetric/field.hpp"
#include "rankmetric/linalg.hpp"

namespace rankmetric {

/// Ordered basis of GF(q^m) over GF(q). Construction checks GF(q)-linear
/// independence of the coordinate rows.
class ExtensionBasis {
 public:
  ExtensionBasis(TowerPtr tower, std::vector<ExtCoords> elements);

  const TowerPtr& tower() const { return tower_; }
  const std::vector<ExtCoords>& elements() const { return elements_; }
  std::uint32_t m() const { return tower_->m(); }

  /// Row i holds the power-basis coordinates of element i.
  Mat<GFq> coord_matrix() const;

  friend bool operator==(const ExtensionBasis& a, const ExtensionBasis& b) {
    return a.tower_->same(*b.tower_) && a.elements_ == b.elements_;
  }

 private:
  TowerPtr tower_;
  std::vector<ExtCoords> elements_;
};

/// Entry (i, j) = Tr(aᵢ·aⱼ). Symmetric, invertible for a basis.
Mat<GFq> gram_matrix(const ExtensionBasis& b);

/// Entry (i, j) = Tr(aᵢ·a'ⱼ) for two bases of the same tower.
Mat<GFq> pairing_matrix(const ExtensionBasis& a, const ExtensionBasis& b);

/// The unique basis B' with Tr(aᵢ·a'ⱼ) = δᵢⱼ, via a'ⱼ = Σᵢ (T⁻¹)ⱼᵢ aᵢ
/// where T is the Gram matrix.
ExtensionBasis dual_basis(const ExtensionBasis& b);

bool is_self_dual(const ExtensionBasis& b);

/// Returns a when the Gram matrix is diag(1, …, 1, a) with a ≠ 0
/// (self-dual is the a = 1 case), std::nullopt otherwise.
std::optional<GFq> is_almost_self_dual(const ExtensionBasis& b);

enum class BasisKind { self_dual, almost_self_dual, not_exists };

std::string to_string(BasisKind k);

struct BasisSearchResult {
  BasisKind kind;
  std::optional<ExtensionBasis> basis;
  GFq a = 0;  // diag tail entry; 1 for self-dual results
  std::uint64_t seed = 0;
};

/// Self-dual bases exist iff q is even or both q and m are odd; the
/// parity-excluded case reports not_exists rather than failing. The search
/// is a deterministic greedy orthogonalization of the trace form with
/// seeded randomized restarts.
BasisSearchResult find_self_dual_basis(const TowerPtr& t, std::uint64_t seed = 0);

/// Requires odd q (EvenCharacteristicError otherwise); always succeeds.
BasisSearchResult find_almost_self_dual_basis(const TowerPtr& t, std::uint64_t seed = 0);

/// n×m matrix M over GF(q) with vᵢ = Σⱼ M(i,j)·bⱼ row-wise.
Mat<GFq> expand_vector(const std::vector<ExtCoords>& v, const ExtensionBasis& b);

/// Tower-checked variant.
Mat<GFq> expand_vector(const std::vector<FieldElement>& v, const ExtensionBasis& b);

/// Visits every ordered basis of GF(q^m) over GF(q); the visitor returns
/// false to stop. Intended for exhaustive desk-scale checks.
void for_each_ordered_basis(const TowerPtr& t,
                            const std::function<bool(const std::vector<ExtCoords>&)>& fn);

/// All ordered bases with Gram matrix exactly the identity, found by a
/// depth-first sweep pruned by the partial Gram constraints.
std::vector<ExtensionBasis> all_self_dual_bases(const TowerPtr& t);

}  // namespace rankmetric
