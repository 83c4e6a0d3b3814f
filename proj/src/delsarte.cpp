#include "rankmetric/delsarte.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>

namespace rankmetric {
namespace {

std::uint32_t matrix_rank_flat(const BaseField& f, std::vector<GFq>& data,
                               std::size_t n, std::size_t m) {
  std::uint32_t rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t sel = row;
    while (sel < n && data[sel * m + col] == 0) ++sel;
    if (sel == n) continue;
    if (sel != row)
      for (std::size_t c = col; c < m; ++c)
        std::swap(data[row * m + c], data[sel * m + c]);
    const GFq inv_p = f.inv(data[row * m + col]);
    for (std::size_t c = col; c < m; ++c)
      data[row * m + c] = f.mul(inv_p, data[row * m + c]);
    for (std::size_t r = row + 1; r < n; ++r) {
      const GFq factor = data[r * m + col];
      if (factor == 0) continue;
      for (std::size_t c = col; c < m; ++c)
        data[r * m + c] = f.sub(data[r * m + c], f.mul(factor, data[row * m + c]));
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Projective scan over nonzero codewords, one representative per
// GF(q)-scalar class (rank is scalar-invariant). The budget counts visited
// representatives; returns nullopt when it runs out. When `stop_at_one` is
// set the scan ends as soon as a rank-1 word is seen.
struct ProjectiveRanks {
  std::uint32_t min_rank = 0;
  std::uint32_t max_rank = 0;
  bool found = false;
};

std::optional<ProjectiveRanks> projective_rank_scan(const MatrixCode& c,
                                                    std::uint64_t budget,
                                                    bool stop_at_one) {
  const BaseField& f = *c.field();
  const std::size_t dim = c.dim(), len = c.n() * c.m();
  const std::uint32_t q = f.q();
  ProjectiveRanks out;
  if (dim == 0) return out;

  // generators pre-scaled by every coefficient
  std::vector<GFq> sgen(dim * q * len);
  for (std::size_t g = 0; g < dim; ++g)
    for (GFq coef = 0; coef < q; ++coef)
      for (std::size_t i = 0; i < len; ++i)
        sgen[(g * q + coef) * len + i] = f.mul(coef, c.generators().at(g, i));

  std::vector<GFq> acc((dim + 1) * len, 0);
  std::vector<GFq> scratch(len);
  bool stop = false, aborted = false;
  std::uint64_t visited = 0;

  auto leaf = [&](const GFq* word) {
    if (++visited > budget) {
      aborted = true;
      stop = true;
      return;
    }
    std::copy(word, word + len, scratch.begin());
    const std::uint32_t r = matrix_rank_flat(f, scratch, c.n(), c.m());
    if (!out.found || r < out.min_rank) out.min_rank = r;
    if (r > out.max_rank) out.max_rank = r;
    out.found = true;
    if (stop_at_one && out.min_rank == 1) stop = true;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t level) {
    const GFq* cur = &acc[level * len];
    if (level == dim) {
      leaf(cur);
      return;
    }
    GFq* next = &acc[(level + 1) * len];
    for (GFq coef = 0; coef < q && !stop; ++coef) {
      if (coef == 0) {
        std::copy(cur, cur + len, next);
      } else {
        const GFq* row = &sgen[(level * q + coef) * len];
        for (std::size_t i = 0; i < len; ++i) next[i] = f.add(cur[i], row[i]);
      }
      rec(level + 1);
    }
  };

  // Coefficient representatives: leading nonzero coefficient fixed to 1.
  for (std::size_t pivot = 0; pivot < dim && !stop; ++pivot) {
    for (std::size_t i = 0; i < len; ++i)
      acc[(pivot + 1) * len + i] = c.generators().at(pivot, i);
    rec(pivot + 1);
  }
  if (aborted) return std::nullopt;
  return out;
}

}  // namespace

MatrixCode MatrixCode::from_generators(BaseFieldPtr field, std::size_t n, std::size_t m,
                                       const Mat<GFq>& raw_vectorized) {
  if (raw_vectorized.rows() > 0 && raw_vectorized.cols() != n * m)
    throw ShapeMismatchError("vectorized generators must have n*m columns");
  GfOps gf{field.get()};
  Mat<GFq> canon = raw_vectorized.rows() == 0 ? Mat<GFq>(0, n * m)
                                              : row_space(gf, raw_vectorized);
  return MatrixCode(std::move(field), n, m, std::move(canon));
}

MatrixCode MatrixCode::from_matrices(BaseFieldPtr field, std::size_t n, std::size_t m,
                                     const std::vector<Mat<GFq>>& mats) {
  Mat<GFq> raw(mats.size(), n * m, 0);
  for (std::size_t g = 0; g < mats.size(); ++g) {
    if (mats[g].rows() != n || mats[g].cols() != m)
      throw ShapeMismatchError("generator matrix has wrong shape");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) raw.at(g, i * m + j) = mats[g].at(i, j);
  }
  return from_generators(std::move(field), n, m, raw);
}

MatrixCode MatrixCode::zero(BaseFieldPtr field, std::size_t n, std::size_t m) {
  return from_generators(std::move(field), n, m, Mat<GFq>(0, n * m));
}

MatrixCode MatrixCode::full(BaseFieldPtr field, std::size_t n, std::size_t m) {
  GfOps gf{field.get()};
  return MatrixCode(std::move(field), n, m, identity(gf, n * m));
}

Mat<GFq> MatrixCode::generator_matrix(std::size_t i) const {
  Mat<GFq> out(n_, m_, 0);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < m_; ++c) out.at(r, c) = gens_.at(i, r * m_ + c);
  return out;
}

GFq trace_inner_product(const BaseField& f, const Mat<GFq>& a, const Mat<GFq>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeMismatchError("trace inner product needs equal shapes");
  GFq acc = 0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      acc = f.add(acc, f.mul(a.at(r, c), b.at(r, c)));
  return acc;
}

MatrixCode dual(const MatrixCode& c) {
  GfOps gf{c.field().get()};
  // ⟨·,·⟩ equals the dot product of vectorizations, so the dual is a plain
  // null space.
  Mat<GFq> ker = null_space(gf, c.generators());
  return MatrixCode::from_generators(c.field(), c.n(), c.m(), ker);
}

MatrixCode intersect(const MatrixCode& a, const MatrixCode& b) {
  if (!a.field()->same(*b.field()) || a.n() != b.n() || a.m() != b.m())
    throw ShapeMismatchError("intersection needs matching shapes");
  GfOps gf{a.field().get()};
  Mat<GFq> basis = intersect_row_spaces(gf, a.generators(), b.generators());
  return MatrixCode::from_generators(a.field(), a.n(), a.m(), basis);
}

MatrixCode code_sum(const MatrixCode& a, const MatrixCode& b) {
  if (!a.field()->same(*b.field()) || a.n() != b.n() || a.m() != b.m())
    throw ShapeMismatchError("sum needs matching shapes");
  return MatrixCode::from_generators(a.field(), a.n(), a.m(),
                                     mat_stack(a.generators(), b.generators()));
}

bool is_lcd(const MatrixCode& c) { return intersect(c, dual(c)).dim() == 0; }

RankRange rank_range(const MatrixCode& c, std::uint64_t cap) {
  const auto scan = projective_rank_scan(c, cap, /*stop_at_one=*/false);
  if (!scan)
    throw EnumerationTooLargeError("codeword enumeration exceeds cap (" +
                                   std::to_string(cap) + ")");
  RankRange out;
  out.has_nonzero = scan->found;
  out.min_rank = scan->found ? scan->min_rank : 0;
  out.max_rank = scan->max_rank;
  return out;
}

std::uint32_t min_rank(const MatrixCode& c, std::uint64_t cap) {
  if (c.dim() == 0) return 0;
  if (c.dim() == c.n() * c.m()) return 1;  // full space: every E_ij is a word
  const auto scan = projective_rank_scan(c, cap, /*stop_at_one=*/true);
  if (!scan) throw EnumerationTooLargeError("codeword enumeration exceeds cap");
  return scan->min_rank;
}

bool is_mrd_delsarte(const MatrixCode& c, std::uint64_t cap) {
  if (c.dim() == 0) throw ZeroCodeError("minimum rank undefined for the zero code");
  const std::uint64_t mx = std::max(c.n(), c.m());
  const std::uint64_t mn = std::min(c.n(), c.m());
  const std::uint32_t dr = min_rank(c, cap);
  return c.dim() == mx * (mn - dr + 1);
}

bool is_optimal_anticode(const MatrixCode& c, std::uint64_t cap) {
  if (c.dim() == 0) return true;  // dim 0 = max{n,m}·0
  const RankRange rr = rank_range(c, cap);
  return c.dim() == std::max(c.n(), c.m()) * rr.max_rank;
}

bool lcd_anticode_criterion(const MatrixCode& c, std::uint64_t cap) {
  if (c.dim() == 0)
    throw NotOptimalAnticodeError("criterion requires a nonzero optimal anticode");
  const RankRange rr = rank_range(c, cap);
  if (c.dim() != std::max(c.n(), c.m()) * rr.max_rank)
    throw NotOptimalAnticodeError("code does not attain the anticode bound");
  const std::uint64_t mn = std::min(c.n(), c.m());
  return rr.min_rank > mn - rr.max_rank;
}

Subspace Subspace::from_rows(BaseFieldPtr field, std::size_t n, const Mat<GFq>& rows) {
  if (rows.rows() > 0 && rows.cols() != n)
    throw AmbientMismatchError("basis rows must have length n");
  GfOps gf{field.get()};
  Mat<GFq> canon = rows.rows() == 0 ? Mat<GFq>(0, n) : row_space(gf, rows);
  return Subspace(std::move(field), n, std::move(canon));
}

Subspace Subspace::zero(BaseFieldPtr field, std::size_t n) {
  return Subspace(std::move(field), n, Mat<GFq>(0, n));
}

Subspace Subspace::full(BaseFieldPtr field, std::size_t n) {
  GfOps gf{field.get()};
  return Subspace(std::move(field), n, identity(gf, n));
}

MatrixCode ambient_restriction(const Subspace& u, std::size_t m) {
  // One generator per (basis vector of U, column index): the matrix with
  // that vector in that column and zeros elsewhere.
  const std::size_t n = u.n();
  Mat<GFq> raw(u.dim() * m, n * m, 0);
  std::size_t g = 0;
  for (std::size_t b = 0; b < u.dim(); ++b)
    for (std::size_t col = 0; col < m; ++col, ++g)
      for (std::size_t row = 0; row < n; ++row)
        raw.at(g, row * m + col) = u.basis().at(b, row);
  return MatrixCode::from_generators(u.field(), n, m, raw);
}

Subspace subspace_dual(const Subspace& u) {
  GfOps gf{u.field().get()};
  return Subspace::from_rows(u.field(), u.n(), null_space(gf, u.basis()));
}

namespace {
void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (!a.field()->same(*b.field()) || a.n() != b.n())
    throw AmbientMismatchError("subspaces live in different ambient spaces");
}
}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return Subspace::from_rows(a.field(), a.n(), mat_stack(a.basis(), b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  GfOps gf{a.field().get()};
  return Subspace::from_rows(a.field(), a.n(),
                             intersect_row_spaces(gf, a.basis(), b.basis()));
}

bool is_lcd_subspace(const Subspace& u) {
  return subspace_intersect(u, subspace_dual(u)).dim() == 0;
}

std::vector<Subspace> all_subspaces(const BaseFieldPtr& field, std::size_t n) {
  const BaseField& f = *field;
  std::uint64_t card = 1;
  for (std::size_t i = 0; i < n; ++i) card *= f.q();

  auto vec_from_code = [&](std::uint64_t code) {
    std::vector<GFq> v(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<GFq>(code % f.q());
      code /= f.q();
    }
    return v;
  };

  // Closure under single-vector extension starting from {0}, deduplicated by
  // canonical basis. The order of discovery is deterministic.
  std::vector<Subspace> out{Subspace::zero(field, n)};
  std::vector<Mat<GFq>> seen{out[0].basis()};
  std::size_t next = 0;
  while (next < out.size()) {
    const Subspace cur = out[next++];
    if (cur.dim() == n) continue;
    for (std::uint64_t code = 1; code < card; ++code) {
      Mat<GFq> extended(cur.dim() + 1, n, 0);
      for (std::size_t r = 0; r < cur.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) extended.at(r, c) = cur.basis().at(r, c);
      const auto v = vec_from_code(code);
      for (std::size_t c = 0; c < n; ++c) extended.at(cur.dim(), c) = v[c];
      Subspace cand = Subspace::from_rows(field, n, extended);
      if (cand.dim() == cur.dim()) continue;
      bool dup = false;
      for (const auto& s : seen)
        if (s == cand.basis()) {
          dup = true;
          break;
        }
      if (!dup) {
        seen.push_back(cand.basis());
        out.push_back(std::move(cand));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t r = 0; r < a.dim(); ++r)
      for (std::size_t c = 0; c < a.n(); ++c)
        if (a.basis().at(r, c) != b.basis().at(r, c))
          return a.basis().at(r, c) < b.basis().at(r, c);
    return false;
  });
  return out;
}

}  // namespace rankmetric
