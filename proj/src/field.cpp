#include "rankmetric/field.hpp"

#include <algorithm>
#include <cstddef>

namespace rankmetric {
namespace {

constexpr std::uint32_t kTableLimit = 512;

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over a small field, coefficients low degree first.
// CoefOps must provide q(), add, sub, mul, inv, neg on GFq codes. Used both
// for GF(p)[x] (modulus search, GF(q) arithmetic) and GF(q)[x] (extension
// modulus search, inversion in GF(q^m)).
using Poly = std::vector<GFq>;

template <typename CoefOps>
int poly_deg(const CoefOps&, const Poly& a) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != 0) return static_cast<int>(i);
  return -1;
}

template <typename CoefOps>
Poly poly_trim(const CoefOps& f, Poly a) {
  a.resize(static_cast<std::size_t>(poly_deg(f, a) + 1));
  return a;
}

template <typename CoefOps>
Poly poly_mul(const CoefOps& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  return poly_trim(f, std::move(out));
}

template <typename CoefOps>
std::pair<Poly, Poly> poly_divmod(const CoefOps& f, Poly a, const Poly& b) {
  const int db = poly_deg(f, b);
  Poly quot;
  int da = poly_deg(f, a);
  if (da < db) return {Poly{}, poly_trim(f, std::move(a))};
  quot.assign(static_cast<std::size_t>(da - db + 1), 0);
  const GFq lead_inv = f.inv(b[static_cast<std::size_t>(db)]);
  while (da >= db) {
    const GFq c = f.mul(a[static_cast<std::size_t>(da)], lead_inv);
    const std::size_t shift = static_cast<std::size_t>(da - db);
    quot[shift] = c;
    for (int i = 0; i <= db; ++i) {
      const std::size_t k = shift + static_cast<std::size_t>(i);
      a[k] = f.sub(a[k], f.mul(c, b[static_cast<std::size_t>(i)]));
    }
    da = poly_deg(f, a);
  }
  return {poly_trim(f, std::move(quot)), poly_trim(f, std::move(a))};
}

template <typename CoefOps>
Poly poly_mod(const CoefOps& f, Poly a, const Poly& b) {
  return poly_divmod(f, std::move(a), b).second;
}

// Monic polynomial of degree d whose non-leading coefficients are the
// base-q digits of `code`, low degree first.
template <typename CoefOps>
Poly poly_from_code(const CoefOps& f, std::uint64_t code, std::uint32_t d) {
  Poly out(d + 1, 0);
  for (std::uint32_t i = 0; i < d; ++i) {
    out[i] = static_cast<GFq>(code % f.q());
    code /= f.q();
  }
  out[d] = 1;
  return out;
}

// Trial division by every monic polynomial of degree 1..deg/2.
template <typename CoefOps>
bool poly_is_irreducible(const CoefOps& f, const Poly& poly) {
  const int d = poly_deg(f, poly);
  if (d < 1) return false;
  for (std::uint32_t dd = 1; dd <= static_cast<std::uint32_t>(d) / 2; ++dd) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < dd; ++i) count *= f.q();
    for (std::uint64_t code = 0; code < count; ++code) {
      const Poly div = poly_from_code(f, code, dd);
      if (poly_mod(f, poly, div).empty()) return false;
    }
  }
  return true;
}

// Smallest monic irreducible of degree d, ordered by the coefficient code
// Σ cᵢ·qⁱ with c₀ least significant.
template <typename CoefOps>
Poly min_irreducible(const CoefOps& f, std::uint32_t d) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < d; ++i) count *= f.q();
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly cand = poly_from_code(f, code, d);
    if (poly_is_irreducible(f, cand)) return cand;
  }
  throw Error("no irreducible polynomial found");  // unreachable for d >= 1
}

// Extended Euclid: returns (g, u) with u*a ≡ g (mod b), g = gcd(a, b).
template <typename CoefOps>
std::pair<Poly, Poly> poly_half_gcd(const CoefOps& f, Poly a, Poly b) {
  Poly r0 = poly_trim(f, std::move(a)), r1 = poly_trim(f, std::move(b));
  Poly u0{1}, u1{};
  while (!r1.empty()) {
    auto [q, r2] = poly_divmod(f, r0, r1);
    Poly qu1 = poly_mul(f, q, u1);
    Poly u2 = u0;
    if (u2.size() < qu1.size()) u2.resize(qu1.size(), 0);
    for (std::size_t i = 0; i < qu1.size(); ++i) u2[i] = f.sub(u2[i], qu1[i]);
    u2 = poly_trim(f, std::move(u2));
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  return {r0, u0};
}

struct PrimeOps {
  std::uint32_t p;
  std::uint32_t q() const { return p; }
  GFq add(GFq a, GFq b) const { return (a + b) % p; }
  GFq sub(GFq a, GFq b) const { return (a + p - b) % p; }
  GFq neg(GFq a) const { return a == 0 ? 0 : p - a; }
  GFq mul(GFq a, GFq b) const {
    return static_cast<GFq>((static_cast<std::uint64_t>(a) * b) % p);
  }
  GFq inv(GFq a) const {
    if (a == 0) throw DivisionByZeroError("inverse of zero in GF(p)");
    GFq r = 1, base = a;
    std::uint32_t k = p - 2;
    while (k) {
      if (k & 1) r = mul(r, base);
      base = mul(base, base);
      k >>= 1;
    }
    return r;
  }
};

struct BaseOps {
  const BaseField* f;
  std::uint32_t q() const { return f->q(); }
  GFq add(GFq a, GFq b) const { return f->add(a, b); }
  GFq sub(GFq a, GFq b) const { return f->sub(a, b); }
  GFq neg(GFq a) const { return f->neg(a); }
  GFq mul(GFq a, GFq b) const { return f->mul(a, b); }
  GFq inv(GFq a) const { return f->inv(a); }
};

}  // namespace

BaseFieldPtr BaseField::make(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw NonPrimeError("p = " + std::to_string(p) + " is not prime");
  if (e < 1) throw BadDimensionError("extension degree e must be >= 1");
  return BaseFieldPtr(new BaseField(p, e));
}

BaseField::BaseField(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > (std::uint64_t{1} << 20))
      throw BudgetExceededError("q = p^e exceeds the enumeration budget");
  }
  q_ = static_cast<std::uint32_t>(q);
  PrimeOps ops{p_};
  modulus_ = min_irreducible(ops, e_);
  modulus_.resize(e_ + 1, 0);

  if (q_ <= kTableLimit) {
    tables_ = true;
    add_tab_.resize(std::size_t{q_} * q_);
    mul_tab_.resize(std::size_t{q_} * q_);
    neg_tab_.resize(q_);
    inv_tab_.assign(q_, 0);
    sqrt_tab_.assign(q_, q_);  // q_ = "no root" sentinel
    for (GFq a = 0; a < q_; ++a) {
      neg_tab_[a] = neg_slow(a);
      for (GFq b = 0; b < q_; ++b) {
        add_tab_[std::size_t{a} * q_ + b] = add_slow(a, b);
        mul_tab_[std::size_t{a} * q_ + b] = mul_slow(a, b);
      }
    }
    for (GFq a = 1; a < q_; ++a) inv_tab_[a] = inv_slow(a);
    for (GFq a = 0; a < q_; ++a) {
      const GFq sq = mul_tab_[std::size_t{a} * q_ + a];
      if (sqrt_tab_[sq] == q_) sqrt_tab_[sq] = a;
    }
  }
}

std::vector<std::uint32_t> BaseField::digits(GFq a) const {
  std::vector<std::uint32_t> d(e_, 0);
  for (std::uint32_t i = 0; i < e_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

GFq BaseField::from_digits(const std::vector<std::uint32_t>& d) const {
  GFq a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + (d[i] % p_);
  return a;
}

GFq BaseField::add_slow(GFq a, GFq b) const {
  GFq out = 0, mult = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((a % p_ + b % p_) % p_) * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

GFq BaseField::neg_slow(GFq a) const {
  GFq out = 0, mult = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    const GFq d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

GFq BaseField::mul_slow(GFq a, GFq b) const {
  PrimeOps ops{p_};
  const auto da = digits(a), db = digits(b);
  Poly pa = poly_trim(ops, Poly(da.begin(), da.end()));
  Poly pb = poly_trim(ops, Poly(db.begin(), db.end()));
  Poly prod = poly_mod(ops, poly_mul(ops, pa, pb), modulus_);
  prod.resize(e_, 0);
  return from_digits(std::vector<std::uint32_t>(prod.begin(), prod.end()));
}

GFq BaseField::inv_slow(GFq a) const {
  if (a == 0) throw DivisionByZeroError("inverse of zero in GF(q)");
  PrimeOps ops{p_};
  const auto da = digits(a);
  Poly pa = poly_trim(ops, Poly(da.begin(), da.end()));
  auto [g, u] = poly_half_gcd(ops, pa, modulus_);
  // gcd with an irreducible modulus is a nonzero constant
  Poly out = poly_mod(ops, poly_mul(ops, u, Poly{ops.inv(g[0])}), modulus_);
  out.resize(e_, 0);
  return from_digits(std::vector<std::uint32_t>(out.begin(), out.end()));
}

GFq BaseField::inv(GFq a) const {
  if (a == 0) throw DivisionByZeroError("inverse of zero in GF(q)");
  return tables_ ? inv_tab_[a] : inv_slow(a);
}

bool BaseField::sqrt(GFq a, GFq* root) const {
  if (tables_) {
    if (sqrt_tab_[a] == q_) return false;
    if (root) *root = sqrt_tab_[a];
    return true;
  }
  for (GFq r = 0; r < q_; ++r) {
    if (mul(r, r) == a) {
      if (root) *root = r;
      return true;
    }
  }
  return false;
}

TowerPtr FieldTower::make(std::uint32_t p, std::uint32_t e, std::uint32_t m,
                          std::uint64_t budget) {
  BaseFieldPtr base = BaseField::make(p, e);
  if (m < 1) throw BadDimensionError("extension degree m must be >= 1");
  std::uint64_t card = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    card *= base->q();
    if (card > budget)
      throw BudgetExceededError("q^m exceeds budget " + std::to_string(budget));
  }
  return TowerPtr(new FieldTower(std::move(base), m));
}

FieldTower::FieldTower(BaseFieldPtr base, std::uint32_t m)
    : base_(std::move(base)), m_(m) {
  card_ = 1;
  for (std::uint32_t i = 0; i < m_; ++i) card_ *= base_->q();

  BaseOps ops{base_.get()};
  ext_modulus_ = min_irreducible(ops, m_);
  ext_modulus_.resize(m_ + 1, 0);

  // x^(m+i) mod f, built incrementally from x^m = -(c_0 + ... + c_{m-1}x^{m-1}).
  ExtCoords xm(m_, 0);
  for (std::uint32_t i = 0; i < m_; ++i) xm[i] = base_->neg(ext_modulus_[i]);
  xpow_.push_back(xm);
  for (std::uint32_t i = 1; i < m_; ++i) {
    const ExtCoords& prev = xpow_.back();
    ExtCoords next(m_, 0);
    for (std::uint32_t j = 0; j + 1 < m_; ++j) next[j + 1] = prev[j];
    const GFq top = prev[m_ - 1];
    if (top != 0)
      for (std::uint32_t j = 0; j < m_; ++j)
        next[j] = base_->add(next[j], base_->mul(top, xpow_[0][j]));
    xpow_.push_back(std::move(next));
  }

  // Column j of the Frobenius matrix holds the coordinates of (x^q)^j.
  ExtCoords alpha = reduce(Poly{0, 1});
  ExtCoords phi = pow(alpha, base_->q());
  frob_ = Mat<GFq>(m_, m_, 0);
  ExtCoords col = one();
  for (std::uint32_t j = 0; j < m_; ++j) {
    for (std::uint32_t i = 0; i < m_; ++i) frob_.at(i, j) = col[i];
    if (j + 1 < m_) col = mul(col, phi);
  }

  // The q-power map has order m on GF(q^m).
  GfOps gf{base_.get()};
  Mat<GFq> acc = identity(gf, m_);
  for (std::uint32_t i = 0; i < m_; ++i) acc = mat_mul(gf, frob_, acc);
  if (!(acc == identity(gf, m_)))
    throw Error("frobenius matrix does not have order m");

  constexpr std::uint64_t kCodeTableLimit = 512;
  if (card_ <= kCodeTableLimit) {
    const std::size_t n = static_cast<std::size_t>(card_);
    code_coords_.resize(n * m_);
    code_trace_.resize(n);
    std::vector<ExtCoords> elems(n);
    for (std::size_t c = 0; c < n; ++c) {
      elems[c] = from_code(c);
      for (std::uint32_t i = 0; i < m_; ++i) code_coords_[c * m_ + i] = elems[c][i];
      code_trace_[c] = trace(elems[c]);
    }
    code_add_.resize(n * n);
    code_mul_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        code_add_[a * n + b] = static_cast<std::uint32_t>(to_code(add(elems[a], elems[b])));
        code_mul_[a * n + b] = static_cast<std::uint32_t>(to_code(mul(elems[a], elems[b])));
      }
  }
}

ExtCoords FieldTower::reduce(std::vector<GFq> poly) const {
  poly.resize(2 * m_ - 1 > poly.size() ? 2 * m_ - 1 : poly.size(), 0);
  ExtCoords out(m_, 0);
  for (std::uint32_t i = 0; i < m_ && i < poly.size(); ++i) out[i] = poly[i];
  for (std::size_t i = m_; i < poly.size(); ++i) {
    const GFq c = poly[i];
    if (c == 0) continue;
    const ExtCoords& rep = xpow_[i - m_];
    for (std::uint32_t j = 0; j < m_; ++j)
      out[j] = base_->add(out[j], base_->mul(c, rep[j]));
  }
  return out;
}

ExtCoords FieldTower::from_base(GFq c) const {
  ExtCoords out(m_, 0);
  out[0] = c;
  return out;
}

bool FieldTower::is_zero(const ExtCoords& a) const {
  for (GFq c : a)
    if (c != 0) return false;
  return true;
}

bool FieldTower::in_base(const ExtCoords& a) const {
  for (std::uint32_t i = 1; i < m_; ++i)
    if (a[i] != 0) return false;
  return true;
}

ExtCoords FieldTower::add(const ExtCoords& a, const ExtCoords& b) const {
  ExtCoords out(m_);
  for (std::uint32_t i = 0; i < m_; ++i) out[i] = base_->add(a[i], b[i]);
  return out;
}

ExtCoords FieldTower::sub(const ExtCoords& a, const ExtCoords& b) const {
  ExtCoords out(m_);
  for (std::uint32_t i = 0; i < m_; ++i) out[i] = base_->sub(a[i], b[i]);
  return out;
}

ExtCoords FieldTower::neg(const ExtCoords& a) const {
  ExtCoords out(m_);
  for (std::uint32_t i = 0; i < m_; ++i) out[i] = base_->neg(a[i]);
  return out;
}

ExtCoords FieldTower::mul(const ExtCoords& a, const ExtCoords& b) const {
  std::vector<GFq> prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < m_; ++j)
      prod[i + j] = base_->add(prod[i + j], base_->mul(a[i], b[j]));
  }
  return reduce(std::move(prod));
}

ExtCoords FieldTower::scalar_mul(GFq c, const ExtCoords& a) const {
  ExtCoords out(m_);
  for (std::uint32_t i = 0; i < m_; ++i) out[i] = base_->mul(c, a[i]);
  return out;
}

ExtCoords FieldTower::inv(const ExtCoords& a) const {
  if (is_zero(a)) throw DivisionByZeroError("inverse of zero in GF(q^m)");
  BaseOps ops{base_.get()};
  Poly pa = poly_trim(ops, Poly(a.begin(), a.end()));
  auto [g, u] = poly_half_gcd(ops, pa, ext_modulus_);
  Poly out = poly_mod(ops, poly_mul(ops, u, Poly{ops.inv(g[0])}), ext_modulus_);
  out.resize(m_, 0);
  return ExtCoords(out.begin(), out.end());
}

ExtCoords FieldTower::pow(const ExtCoords& a, std::uint64_t k) const {
  ExtCoords result = one();
  ExtCoords base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

ExtCoords FieldTower::frobenius(const ExtCoords& a, long long i) const {
  long long r = i % static_cast<long long>(m_);
  if (r < 0) r += m_;
  ExtCoords cur = a;
  for (long long step = 0; step < r; ++step) {
    ExtCoords next(m_, 0);
    for (std::uint32_t row = 0; row < m_; ++row) {
      GFq acc = 0;
      for (std::uint32_t col = 0; col < m_; ++col)
        acc = base_->add(acc, base_->mul(frob_.at(row, col), cur[col]));
      next[row] = acc;
    }
    cur = std::move(next);
  }
  return cur;
}

GFq FieldTower::trace(const ExtCoords& a) const {
  ExtCoords acc = a;
  ExtCoords cur = a;
  for (std::uint32_t i = 1; i < m_; ++i) {
    cur = frobenius(cur, 1);
    acc = add(acc, cur);
  }
  // the fixed field of x ↦ x^q is exactly the constants
  return acc[0];
}

std::uint64_t FieldTower::to_code(const ExtCoords& a) const {
  std::uint64_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * base_->q() + a[i];
  return code;
}

ExtCoords FieldTower::from_code(std::uint64_t code) const {
  ExtCoords out(m_, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    out[i] = static_cast<GFq>(code % base_->q());
    code /= base_->q();
  }
  return out;
}

void require_same_tower(const FieldTower& a, const FieldTower& b) {
  if (!a.same(b)) throw TowerMismatchError("operands belong to different towers");
}

FieldElement::FieldElement(TowerPtr tower, ExtCoords coords)
    : tower_(std::move(tower)), coords_(std::move(coords)) {
  if (coords_.size() != tower_->m())
    throw BadDimensionError("coordinate vector length must equal m");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_tower(*a.tower_, *b.tower_);
  return {a.tower_, a.tower_->add(a.coords_, b.coords_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_tower(*a.tower_, *b.tower_);
  return {a.tower_, a.tower_->sub(a.coords_, b.coords_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_tower(*a.tower_, *b.tower_);
  return {a.tower_, a.tower_->mul(a.coords_, b.coords_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_tower(*a.tower_, *b.tower_);
  return {a.tower_, a.tower_->div(a.coords_, b.coords_)};
}

}  // namespace rankmetric
