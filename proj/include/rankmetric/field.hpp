#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rankmetric/linalg.hpp"

namespace rankmetric {

/// Element of GF(q), q = p^e, encoded as the integer Σ cᵢ·pⁱ where the cᵢ
/// are the coefficients of the residue polynomial, low degree first.
using GFq = std::uint32_t;

/// Element of GF(q^m): m coordinates over GF(q), low degree first.
using ExtCoords = std::vector<GFq>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define RANKMETRIC_ERROR(NAME)                  \
  struct NAME : Error {                         \
    using Error::Error;                         \
  }

RANKMETRIC_ERROR(NonPrimeError);
RANKMETRIC_ERROR(BudgetExceededError);
RANKMETRIC_ERROR(TowerMismatchError);
RANKMETRIC_ERROR(DivisionByZeroError);
RANKMETRIC_ERROR(DependentGeneratorsError);
RANKMETRIC_ERROR(BadDimensionError);
RANKMETRIC_ERROR(EnumerationTooLargeError);
RANKMETRIC_ERROR(ShapeMismatchError);
RANKMETRIC_ERROR(AmbientMismatchError);
RANKMETRIC_ERROR(NotOptimalAnticodeError);
RANKMETRIC_ERROR(EvenCharacteristicError);
RANKMETRIC_ERROR(ZeroCodeError);
RANKMETRIC_ERROR(ConfigError);
RANKMETRIC_ERROR(SearchError);

#undef RANKMETRIC_ERROR

/// Codeword-enumeration budget shared by the whole library.
inline constexpr std::uint64_t kDefaultEnumCap = std::uint64_t{1} << 20;

/// GF(q) with q = p^e, p prime. The modulus is the monic irreducible
/// polynomial of degree e over GF(p) with the smallest coefficient code
/// Σ cᵢ·pⁱ, so two instances with equal (p, e) are interchangeable.
class BaseField {
 public:
  static std::shared_ptr<const BaseField> make(std::uint32_t p, std::uint32_t e);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }

  /// Monic degree-e modulus over GF(p), low degree first, length e+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  GFq add(GFq a, GFq b) const {
    return tables_ ? add_tab_[a * q_ + b] : add_slow(a, b);
  }
  GFq sub(GFq a, GFq b) const { return add(a, neg(b)); }
  GFq neg(GFq a) const { return tables_ ? neg_tab_[a] : neg_slow(a); }
  GFq mul(GFq a, GFq b) const {
    return tables_ ? mul_tab_[a * q_ + b] : mul_slow(a, b);
  }
  GFq inv(GFq a) const;
  GFq div(GFq a, GFq b) const { return mul(a, inv(b)); }

  /// Smallest r with r² = a, if one exists.
  bool sqrt(GFq a, GFq* root) const;

  std::vector<std::uint32_t> digits(GFq a) const;
  GFq from_digits(const std::vector<std::uint32_t>& d) const;

  bool same(const BaseField& other) const {
    return p_ == other.p_ && e_ == other.e_;
  }

 private:
  BaseField(std::uint32_t p, std::uint32_t e);
  GFq add_slow(GFq a, GFq b) const;
  GFq neg_slow(GFq a) const;
  GFq mul_slow(GFq a, GFq b) const;
  GFq inv_slow(GFq a) const;

  std::uint32_t p_, e_, q_;
  std::vector<std::uint32_t> modulus_;
  bool tables_ = false;
  std::vector<GFq> add_tab_, mul_tab_, neg_tab_, inv_tab_, sqrt_tab_;
};

using BaseFieldPtr = std::shared_ptr<const BaseField>;

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

/// The tower GF(p) ⊂ GF(q = p^e) ⊂ GF(q^m). Owns the extension modulus
/// (chosen by the same minimal-code rule as BaseField) and the m×m matrix
/// of the map x ↦ x^q over GF(q). Immutable after construction.
class FieldTower {
 public:
  static TowerPtr make(std::uint32_t p, std::uint32_t e, std::uint32_t m,
                       std::uint64_t budget = kDefaultEnumCap);

  const BaseField& base() const { return *base_; }
  const BaseFieldPtr& base_ptr() const { return base_; }
  std::uint32_t p() const { return base_->p(); }
  std::uint32_t e() const { return base_->e(); }
  std::uint32_t q() const { return base_->q(); }
  std::uint32_t m() const { return m_; }
  std::uint64_t card() const { return card_; }

  /// Monic degree-m modulus over GF(q), low degree first, length m+1.
  const std::vector<GFq>& ext_modulus() const { return ext_modulus_; }
  const Mat<GFq>& frobenius_matrix() const { return frob_; }

  bool same(const FieldTower& o) const {
    return base_->same(*o.base_) && m_ == o.m_;
  }

  // Raw coordinate arithmetic on GF(q^m).
  ExtCoords zero() const { return ExtCoords(m_, 0); }
  ExtCoords one() const { return from_base(1); }
  ExtCoords from_base(GFq c) const;
  bool is_zero(const ExtCoords& a) const;
  bool in_base(const ExtCoords& a) const;
  bool is_scalar(const ExtCoords& a) const { return in_base(a); }

  ExtCoords add(const ExtCoords& a, const ExtCoords& b) const;
  ExtCoords sub(const ExtCoords& a, const ExtCoords& b) const;
  ExtCoords neg(const ExtCoords& a) const;
  ExtCoords mul(const ExtCoords& a, const ExtCoords& b) const;
  ExtCoords scalar_mul(GFq c, const ExtCoords& a) const;
  ExtCoords inv(const ExtCoords& a) const;
  ExtCoords div(const ExtCoords& a, const ExtCoords& b) const { return mul(a, inv(b)); }
  ExtCoords pow(const ExtCoords& a, std::uint64_t k) const;

  /// a^(q^i); i is reduced mod m, negatives allowed.
  ExtCoords frobenius(const ExtCoords& a, long long i) const;

  /// Tr(a) = a + a^q + … + a^(q^(m-1)), a GF(q)-linear surjection onto GF(q).
  GFq trace(const ExtCoords& a) const;

  std::uint64_t to_code(const ExtCoords& a) const;
  ExtCoords from_code(std::uint64_t code) const;

  /// Whole-field lookup tables, built for small towers; enumeration-heavy
  /// callers use them to work on integer codes without allocation.
  bool has_code_tables() const { return !code_mul_.empty(); }
  std::uint32_t code_add(std::uint32_t a, std::uint32_t b) const {
    return code_add_[a * card_ + b];
  }
  std::uint32_t code_mul(std::uint32_t a, std::uint32_t b) const {
    return code_mul_[a * card_ + b];
  }
  GFq code_trace(std::uint32_t a) const { return code_trace_[a]; }
  const GFq* code_coords(std::uint32_t a) const { return &code_coords_[a * m_]; }

 private:
  FieldTower(BaseFieldPtr base, std::uint32_t m);
  ExtCoords reduce(std::vector<GFq> poly) const;  // deg < 2m-1 input

  BaseFieldPtr base_;
  std::uint32_t m_;
  std::uint64_t card_;
  std::vector<GFq> ext_modulus_;
  std::vector<ExtCoords> xpow_;  // x^(m+i) mod modulus, i in [0, m)
  Mat<GFq> frob_;
  std::vector<std::uint32_t> code_add_, code_mul_;
  std::vector<GFq> code_trace_, code_coords_;
};

/// Convenience value type pairing coordinates with their tower. Mixed-tower
/// arithmetic raises TowerMismatchError.
class FieldElement {
 public:
  FieldElement(TowerPtr tower, ExtCoords coords);
  static FieldElement zero(TowerPtr t) { return {t, t->zero()}; }
  static FieldElement one(TowerPtr t) { return {t, t->one()}; }
  static FieldElement from_code(TowerPtr t, std::uint64_t code) {
    return {t, t->from_code(code)};
  }

  const ExtCoords& coords() const { return coords_; }
  const TowerPtr& tower() const { return tower_; }
  std::uint64_t code() const { return tower_->to_code(coords_); }
  bool is_zero() const { return tower_->is_zero(coords_); }

  FieldElement frobenius(long long i) const {
    return {tower_, tower_->frobenius(coords_, i)};
  }
  GFq trace() const { return tower_->trace(coords_); }
  FieldElement pow(std::uint64_t k) const { return {tower_, tower_->pow(coords_, k)}; }
  FieldElement inverse() const { return {tower_, tower_->inv(coords_)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.tower_->same(*b.tower_) && a.coords_ == b.coords_;
  }

 private:
  TowerPtr tower_;
  ExtCoords coords_;
};

void require_same_tower(const FieldTower& a, const FieldTower& b);

/// Ops adapters plugging the two coefficient rings into linalg.hpp.
struct GfOps {
  const BaseField* f;
  using Elem = GFq;
  GFq zero() const { return 0; }
  GFq one() const { return 1; }
  GFq add(GFq a, GFq b) const { return f->add(a, b); }
  GFq sub(GFq a, GFq b) const { return f->sub(a, b); }
  GFq mul(GFq a, GFq b) const { return f->mul(a, b); }
  GFq inv(GFq a) const { return f->inv(a); }
  GFq neg(GFq a) const { return f->neg(a); }
};

struct ExtOps {
  const FieldTower* t;
  using Elem = ExtCoords;
  ExtCoords zero() const { return t->zero(); }
  ExtCoords one() const { return t->one(); }
  ExtCoords add(const ExtCoords& a, const ExtCoords& b) const { return t->add(a, b); }
  ExtCoords sub(const ExtCoords& a, const ExtCoords& b) const { return t->sub(a, b); }
  ExtCoords mul(const ExtCoords& a, const ExtCoords& b) const { return t->mul(a, b); }
  ExtCoords inv(const ExtCoords& a) const { return t->inv(a); }
  ExtCoords neg(const ExtCoords& a) const { return t->neg(a); }
};

}  // namespace rankmetric
