#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rankmetric/basis.hpp"
#include "rankmetric/delsarte.hpp"
#include "rankmetric/field.hpp"
#include "rankmetric/linalg.hpp"

namespace rankmetric {

/// GF(q^m)-linear code of length n, held by a k×n generator matrix with
/// independent rows. k = 0 is the distinguished zero code (the dual of the
/// full space), so hull and LCD logic stay total.
class VectorCode {
 public:
  static VectorCode from_generator(TowerPtr tower, Mat<ExtCoords> generator);
  static VectorCode zero(TowerPtr tower, std::size_t n);

  const TowerPtr& tower() const { return tower_; }
  std::size_t k() const { return gen_.rows(); }
  std::size_t n() const { return n_; }
  const Mat<ExtCoords>& generator() const { return gen_; }

  /// Canonical (reduced row echelon) basis of the row space.
  Mat<ExtCoords> row_space_basis() const;
  bool same_code(const VectorCode& other) const;

 private:
  VectorCode(TowerPtr tower, std::size_t n, Mat<ExtCoords> gen)
      : tower_(std::move(tower)), n_(n), gen_(std::move(gen)) {}

  TowerPtr tower_;
  std::size_t n_;
  Mat<ExtCoords> gen_;
};

struct RankProfile {
  std::uint32_t min_rank = 0;  // 0 for the zero code
  std::map<std::uint32_t, std::uint64_t> counts;
};

/// Row i = (g₁^(qⁱ), …, gₙ^(qⁱ)) for i = 0..k-1. The gᵢ must be
/// GF(q)-independent (which forces n ≤ m) and 1 ≤ k ≤ n.
Mat<ExtCoords> moore_matrix(const TowerPtr& t, const std::vector<ExtCoords>& g,
                            std::size_t k);

VectorCode gabidulin_code(const TowerPtr& t, const std::vector<ExtCoords>& g,
                          std::size_t k);

/// GF(q)-dimension of the span of the coordinates.
std::uint32_t vector_rank(const FieldTower& t, const std::vector<ExtCoords>& v);

/// Exact rank distribution over all q^(mk) codewords.
RankProfile min_rank_distance(const VectorCode& c, std::uint64_t cap = kDefaultEnumCap);

/// Minimum rank of a nonzero codeword; may stop once rank 1 is seen.
std::uint32_t min_rank(const VectorCode& c, std::uint64_t cap = kDefaultEnumCap);

/// Euclidean dual over GF(q^m), canonical generator. k = n gives the zero
/// code; the zero code's dual is the full space.
VectorCode dual_code(const VectorCode& c);

/// det(G·Gᵀ) ≠ 0, equivalent to trivial hull.
bool is_lcd_massey(const VectorCode& c);

/// Canonical basis of C ∩ C⊥ (possibly the zero code).
VectorCode hull(const VectorCode& c);

/// Rank-metric Singleton bound met with equality: d_r = n − k + 1.
bool is_mrd(const VectorCode& c, std::uint64_t cap = kDefaultEnumCap);

/// s-fold cartesian product, block-diagonal generator of shape sk × sn.
VectorCode cartesian_power(const VectorCode& c, std::size_t s);

/// Basis-wise expansion of every codeword; the resulting matrix code has
/// GF(q)-dimension m·k and the same rank distribution.
MatrixCode expand_code(const VectorCode& c, const ExtensionBasis& basis);

Mat<ExtCoords> gram_of_generator(const VectorCode& c);  // G·Gᵀ

}  // namespace rankmetric
