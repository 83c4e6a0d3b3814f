#include "rankmetric/gabidulin.hpp"

#include <functional>
#include <string>

namespace rankmetric {
namespace {

std::uint64_t pow_u64_capped(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    v *= base;
    if (v > cap) return cap + 1;
  }
  return v;
}

std::uint32_t coords_rank(const FieldTower& t, const std::vector<ExtCoords>& rows) {
  const std::size_t n = rows.size();
  const std::size_t m = t.m();
  std::vector<GFq> flat(n * m, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) flat[i * m + j] = rows[i][j];

  const BaseField& f = t.base();
  std::uint32_t rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t sel = row;
    while (sel < n && flat[sel * m + col] == 0) ++sel;
    if (sel == n) continue;
    if (sel != row)
      for (std::size_t c = col; c < m; ++c)
        std::swap(flat[row * m + c], flat[sel * m + c]);
    const GFq inv_p = f.inv(flat[row * m + col]);
    for (std::size_t c = col; c < m; ++c)
      flat[row * m + c] = f.mul(inv_p, flat[row * m + c]);
    for (std::size_t r = row + 1; r < n; ++r) {
      const GFq factor = flat[r * m + col];
      if (factor == 0) continue;
      for (std::size_t c = col; c < m; ++c)
        flat[r * m + c] = f.sub(flat[r * m + c], f.mul(factor, flat[row * m + c]));
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::uint32_t flat_rank(const BaseField& f, std::vector<GFq>& flat, std::size_t n,
                        std::size_t m) {
  std::uint32_t rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t sel = row;
    while (sel < n && flat[sel * m + col] == 0) ++sel;
    if (sel == n) continue;
    if (sel != row)
      for (std::size_t c = col; c < m; ++c)
        std::swap(flat[row * m + c], flat[sel * m + c]);
    const GFq inv_p = f.inv(flat[row * m + col]);
    for (std::size_t c = col; c < m; ++c)
      flat[row * m + c] = f.mul(inv_p, flat[row * m + c]);
    for (std::size_t r = row + 1; r < n; ++r) {
      const GFq factor = flat[r * m + col];
      if (factor == 0) continue;
      for (std::size_t c = col; c < m; ++c)
        flat[r * m + c] = f.sub(flat[r * m + c], f.mul(factor, flat[row * m + c]));
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Projective scan over nonzero codewords, one representative per
// GF(q^m)-scalar class (rank is scalar-invariant). Works on integer codes
// with no allocation in the inner loop. Stops once rank 1 is seen; returns
// nullopt when the representative budget runs out first.
std::optional<std::uint32_t> projective_min_rank(const VectorCode& c, std::uint64_t budget) {
  const FieldTower& t = *c.tower();
  const std::size_t k = c.k(), n = c.n(), m = t.m();
  const std::size_t card = static_cast<std::size_t>(t.card());

  std::vector<std::uint32_t> srow(k * card * n);
  for (std::size_t level = 0; level < k; ++level) {
    std::vector<std::uint32_t> gcode(n);
    for (std::size_t j = 0; j < n; ++j)
      gcode[j] = static_cast<std::uint32_t>(t.to_code(c.generator().at(level, j)));
    for (std::size_t code = 0; code < card; ++code)
      for (std::size_t j = 0; j < n; ++j)
        srow[(level * card + code) * n + j] =
            t.code_mul(static_cast<std::uint32_t>(code), gcode[j]);
  }

  std::vector<std::uint32_t> acc((k + 1) * n, 0);
  std::vector<GFq> flat(n * m);
  std::uint32_t best = 0;
  bool found = false, stop = false, aborted = false;
  std::uint64_t visited = 0;

  auto leaf = [&](const std::uint32_t* word) {
    if (++visited > budget) {
      aborted = true;
      stop = true;
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const GFq* co = t.code_coords(word[i]);
      for (std::size_t j = 0; j < m; ++j) flat[i * m + j] = co[j];
    }
    const std::uint32_t r = flat_rank(t.base(), flat, n, m);
    if (!found || r < best) {
      best = r;
      found = true;
    }
    if (best == 1) stop = true;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t level) {
    const std::uint32_t* cur = &acc[level * n];
    if (level == k) {
      leaf(cur);
      return;
    }
    std::uint32_t* next = &acc[(level + 1) * n];
    for (std::size_t code = 0; code < card && !stop; ++code) {
      if (code == 0) {
        for (std::size_t j = 0; j < n; ++j) next[j] = cur[j];
      } else {
        const std::uint32_t* row = &srow[(level * card + code) * n];
        for (std::size_t j = 0; j < n; ++j) next[j] = t.code_add(cur[j], row[j]);
      }
      rec(level + 1);
    }
  };

  // Message representatives: leading nonzero coordinate fixed to 1.
  for (std::size_t pivot = 0; pivot < k && !stop; ++pivot) {
    const std::uint32_t* row = &srow[(pivot * card + 1) * n];  // one() has code 1
    for (std::size_t j = 0; j < n; ++j) acc[(pivot + 1) * n + j] = row[j];
    rec(pivot + 1);
  }
  if (aborted) return std::nullopt;
  return best;
}

// Visits every nonzero codeword (as a coordinate-row vector); the visitor
// returns false to stop the enumeration early.
bool enumerate_codewords(const VectorCode& c,
                         const std::function<bool(const std::vector<ExtCoords>&)>& visit) {
  const FieldTower& t = *c.tower();
  const std::size_t n = c.n();
  std::vector<ExtCoords> acc(n, t.zero());
  bool keep_going = true;
  std::function<void(std::size_t, bool)> rec = [&](std::size_t level, bool nonzero) {
    if (!keep_going) return;
    if (level == c.k()) {
      if (nonzero && !visit(acc)) keep_going = false;
      return;
    }
    for (std::uint64_t code = 0; code < t.card() && keep_going; ++code) {
      if (code == 0) {
        rec(level + 1, nonzero);
        continue;
      }
      const ExtCoords scalar = t.from_code(code);
      std::vector<ExtCoords> saved = acc;
      for (std::size_t j = 0; j < n; ++j)
        acc[j] = t.add(saved[j], t.mul(scalar, c.generator().at(level, j)));
      rec(level + 1, true);
      acc = std::move(saved);
    }
  };
  rec(0, false);
  return keep_going;
}

}  // namespace

VectorCode VectorCode::from_generator(TowerPtr tower, Mat<ExtCoords> generator) {
  const std::size_t n = generator.cols();
  if (generator.rows() > n)
    throw BadDimensionError("dimension k exceeds length n");
  for (std::size_t r = 0; r < generator.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (generator.at(r, c).size() != tower->m())
        throw TowerMismatchError("generator entry has wrong coordinate length");
  ExtOps ops{tower.get()};
  if (mat_rank(ops, generator) != generator.rows())
    throw DependentGeneratorsError("generator rows are linearly dependent");
  return VectorCode(std::move(tower), n, std::move(generator));
}

VectorCode VectorCode::zero(TowerPtr tower, std::size_t n) {
  return VectorCode(std::move(tower), n, Mat<ExtCoords>(0, n));
}

Mat<ExtCoords> VectorCode::row_space_basis() const {
  ExtOps ops{tower_.get()};
  Mat<ExtCoords> copy = gen_;
  rref(ops, copy);
  return copy;
}

bool VectorCode::same_code(const VectorCode& other) const {
  return tower_->same(*other.tower_) && n_ == other.n_ &&
         row_space_basis() == other.row_space_basis();
}

Mat<ExtCoords> moore_matrix(const TowerPtr& t, const std::vector<ExtCoords>& g,
                            std::size_t k) {
  const std::size_t n = g.size();
  if (k < 1 || k > n) throw BadDimensionError("need 1 <= k <= n");
  if (n > t->m()) throw BadDimensionError("need n <= m for independent generators");
  for (const auto& gi : g)
    if (gi.size() != t->m())
      throw TowerMismatchError("generator entry has wrong coordinate length");
  if (vector_rank(*t, g) != n)
    throw DependentGeneratorsError("generators are dependent over GF(q)");
  Mat<ExtCoords> out(k, n, t->zero());
  for (std::size_t j = 0; j < n; ++j) out.at(0, j) = g[j];
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.at(i, j) = t->frobenius(out.at(i - 1, j), 1);
  return out;
}

VectorCode gabidulin_code(const TowerPtr& t, const std::vector<ExtCoords>& g,
                          std::size_t k) {
  return VectorCode::from_generator(t, moore_matrix(t, g, k));
}

std::uint32_t vector_rank(const FieldTower& t, const std::vector<ExtCoords>& v) {
  for (const auto& entry : v)
    if (entry.size() != t.m())
      throw TowerMismatchError("vector entry has wrong coordinate length");
  return coords_rank(t, v);
}

RankProfile min_rank_distance(const VectorCode& c, std::uint64_t cap) {
  const std::uint64_t total = pow_u64_capped(c.tower()->card(), c.k(), cap);
  if (total > cap)
    throw EnumerationTooLargeError("codeword enumeration exceeds cap (" +
                                   std::to_string(cap) + ")");
  RankProfile out;
  out.counts[0] = 1;
  bool found = false;
  enumerate_codewords(c, [&](const std::vector<ExtCoords>& word) {
    const std::uint32_t r = coords_rank(*c.tower(), word);
    ++out.counts[r];
    if (!found || r < out.min_rank) {
      out.min_rank = r;
      found = true;
    }
    return true;
  });
  if (!found) out.min_rank = 0;
  return out;
}

std::uint32_t min_rank(const VectorCode& c, std::uint64_t cap) {
  if (c.k() == 0) return 0;
  if (c.k() == c.n()) return 1;  // the full space contains every unit vector
  if (c.tower()->has_code_tables()) {
    if (auto r = projective_min_rank(c, cap)) return *r;
    throw EnumerationTooLargeError("codeword enumeration exceeds cap");
  }
  const std::uint64_t total = pow_u64_capped(c.tower()->card(), c.k(), cap);
  std::uint32_t best = 0;
  bool found = false;
  std::uint64_t scanned = 0;
  const bool complete = enumerate_codewords(c, [&](const std::vector<ExtCoords>& word) {
    ++scanned;
    const std::uint32_t r = coords_rank(*c.tower(), word);
    if (!found || r < best) {
      best = r;
      found = true;
    }
    if (best == 1) return false;  // proven minimum for a nonzero word
    return scanned < cap;
  });
  if (best == 1) return 1;
  if (!complete || total > cap)
    throw EnumerationTooLargeError("codeword enumeration exceeds cap");
  return best;
}

VectorCode dual_code(const VectorCode& c) {
  ExtOps ops{c.tower().get()};
  Mat<ExtCoords> ker = null_space(ops, c.generator());
  if (ker.rows() == 0) return VectorCode::zero(c.tower(), c.n());
  return VectorCode::from_generator(c.tower(), ker);
}

Mat<ExtCoords> gram_of_generator(const VectorCode& c) {
  ExtOps ops{c.tower().get()};
  return mat_mul(ops, c.generator(), mat_transpose(ops, c.generator()));
}

bool is_lcd_massey(const VectorCode& c) {
  if (c.k() == 0) return true;
  ExtOps ops{c.tower().get()};
  return mat_rank(ops, gram_of_generator(c)) == c.k();
}

VectorCode hull(const VectorCode& c) {
  const VectorCode d = dual_code(c);
  if (c.k() == 0 || d.k() == 0) return VectorCode::zero(c.tower(), c.n());
  ExtOps ops{c.tower().get()};
  Mat<ExtCoords> basis = intersect_row_spaces(ops, c.generator(), d.generator());
  if (basis.rows() == 0) return VectorCode::zero(c.tower(), c.n());
  return VectorCode::from_generator(c.tower(), basis);
}

bool is_mrd(const VectorCode& c, std::uint64_t cap) {
  if (c.k() == 0) throw ZeroCodeError("minimum rank undefined for the zero code");
  return min_rank(c, cap) == c.n() - c.k() + 1;
}

VectorCode cartesian_power(const VectorCode& c, std::size_t s) {
  if (s < 1) throw BadDimensionError("cartesian power needs s >= 1");
  const FieldTower& t = *c.tower();
  Mat<ExtCoords> gen(s * c.k(), s * c.n(), t.zero());
  for (std::size_t b = 0; b < s; ++b)
    for (std::size_t r = 0; r < c.k(); ++r)
      for (std::size_t cc = 0; cc < c.n(); ++cc)
        gen.at(b * c.k() + r, b * c.n() + cc) = c.generator().at(r, cc);
  if (gen.rows() == 0) return VectorCode::zero(c.tower(), s * c.n());
  return VectorCode::from_generator(c.tower(), gen);
}

MatrixCode expand_code(const VectorCode& c, const ExtensionBasis& basis) {
  require_same_tower(*c.tower(), *basis.tower());
  if (c.k() == 0) throw ZeroCodeError("cannot expand a zero-dimensional code");
  const FieldTower& t = *c.tower();
  const std::uint32_t m = t.m();
  // {x^t · row_i} spans the code over GF(q).
  std::vector<Mat<GFq>> mats;
  mats.reserve(c.k() * m);
  for (std::size_t i = 0; i < c.k(); ++i)
    for (std::uint32_t tt = 0; tt < m; ++tt) {
      ExtCoords scalar(m, 0);
      scalar[tt] = 1;
      std::vector<ExtCoords> word(c.n());
      for (std::size_t j = 0; j < c.n(); ++j)
        word[j] = t.mul(scalar, c.generator().at(i, j));
      mats.push_back(expand_vector(word, basis));
    }
  return MatrixCode::from_matrices(c.tower()->base_ptr(), c.n(), m, mats);
}

}  // namespace rankmetric
