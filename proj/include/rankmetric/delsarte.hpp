#pragma once

#include <cstdint>
#include <vector>

#include "rankmetric/field.hpp"
#include "rankmetric/linalg.hpp"

namespace rankmetric {

/// GF(q)-linear space of n×m matrices over GF(q), stored as the reduced
/// row echelon form of the row-major vectorizations of its generators.
/// The canonical form makes equality a literal comparison.
class MatrixCode {
 public:
  static MatrixCode from_generators(BaseFieldPtr field, std::size_t n, std::size_t m,
                                    const Mat<GFq>& raw_vectorized);
  static MatrixCode from_matrices(BaseFieldPtr field, std::size_t n, std::size_t m,
                                  const std::vector<Mat<GFq>>& mats);
  static MatrixCode zero(BaseFieldPtr field, std::size_t n, std::size_t m);
  static MatrixCode full(BaseFieldPtr field, std::size_t n, std::size_t m);

  const BaseFieldPtr& field() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t dim() const { return gens_.rows(); }
  const Mat<GFq>& generators() const { return gens_; }

  Mat<GFq> generator_matrix(std::size_t i) const;

  friend bool operator==(const MatrixCode& a, const MatrixCode& b) {
    return a.field_->same(*b.field_) && a.n_ == b.n_ && a.m_ == b.m_ &&
           a.gens_ == b.gens_;
  }

 private:
  MatrixCode(BaseFieldPtr field, std::size_t n, std::size_t m, Mat<GFq> gens)
      : field_(std::move(field)), n_(n), m_(m), gens_(std::move(gens)) {}

  BaseFieldPtr field_;
  std::size_t n_, m_;
  Mat<GFq> gens_;  // dim × (n·m), reduced row echelon form
};

/// ⟨A, B⟩ = Tra(A·Bᵀ); coincides with the entrywise dot product.
GFq trace_inner_product(const BaseField& f, const Mat<GFq>& a, const Mat<GFq>& b);

MatrixCode dual(const MatrixCode& c);
MatrixCode intersect(const MatrixCode& a, const MatrixCode& b);
MatrixCode code_sum(const MatrixCode& a, const MatrixCode& b);
bool is_lcd(const MatrixCode& c);

struct RankRange {
  std::uint32_t min_rank = 0;  // 0 when the code has no nonzero word
  std::uint32_t max_rank = 0;
  bool has_nonzero = false;
};

/// Exact min/max rank by enumerating all q^dim codewords.
RankRange rank_range(const MatrixCode& c, std::uint64_t cap = kDefaultEnumCap);

/// Minimum rank of a nonzero codeword. May stop scanning once rank 1 is
/// seen (a proven minimum); otherwise requires the full enumeration to fit
/// under the cap.
std::uint32_t min_rank(const MatrixCode& c, std::uint64_t cap = kDefaultEnumCap);

/// dim = max{n,m}·(min{n,m} − d_r + 1), the matrix-side Singleton-like bound
/// met with equality.
bool is_mrd_delsarte(const MatrixCode& c, std::uint64_t cap = kDefaultEnumCap);

/// dim = max{n,m}·maxrk met with equality.
bool is_optimal_anticode(const MatrixCode& c, std::uint64_t cap = kDefaultEnumCap);

/// minrk(C) > min{n,m} − maxrk(C); sufficient (not necessary) for LCD.
/// Requires a nonzero optimal anticode.
bool lcd_anticode_criterion(const MatrixCode& c, std::uint64_t cap = kDefaultEnumCap);

/// Subspace of GF(q)^n in canonical (reduced row echelon) form.
class Subspace {
 public:
  static Subspace from_rows(BaseFieldPtr field, std::size_t n, const Mat<GFq>& rows);
  static Subspace zero(BaseFieldPtr field, std::size_t n);
  static Subspace full(BaseFieldPtr field, std::size_t n);

  const BaseFieldPtr& field() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat<GFq>& basis() const { return basis_; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_->same(*b.field_) && a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(BaseFieldPtr field, std::size_t n, Mat<GFq> basis)
      : field_(std::move(field)), n_(n), basis_(std::move(basis)) {}

  BaseFieldPtr field_;
  std::size_t n_;
  Mat<GFq> basis_;
};

/// All n×m matrices whose column space lies in U; dimension m·dim(U).
MatrixCode ambient_restriction(const Subspace& u, std::size_t m);

Subspace subspace_dual(const Subspace& u);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool is_lcd_subspace(const Subspace& u);

/// Every subspace of GF(q)^n, in a deterministic order.
std::vector<Subspace> all_subspaces(const BaseFieldPtr& field, std::size_t n);

}  // namespace rankmetric
