#include "rankmetric/basis.hpp"

#include <algorithm>
#include <random>

namespace rankmetric {

ExtensionBasis::ExtensionBasis(TowerPtr tower, std::vector<ExtCoords> elements)
    : tower_(std::move(tower)), elements_(std::move(elements)) {
  if (elements_.size() != tower_->m())
    throw BadDimensionError("basis must have exactly m elements");
  for (const auto& el : elements_)
    if (el.size() != tower_->m())
      throw BadDimensionError("basis element has wrong coordinate length");
  GfOps gf{&tower_->base()};
  if (mat_rank(gf, coord_matrix()) != tower_->m())
    throw DependentGeneratorsError("elements are linearly dependent over GF(q)");
}

Mat<GFq> ExtensionBasis::coord_matrix() const {
  Mat<GFq> out(elements_.size(), tower_->m(), 0);
  for (std::size_t r = 0; r < elements_.size(); ++r)
    for (std::uint32_t c = 0; c < tower_->m(); ++c) out.at(r, c) = elements_[r][c];
  return out;
}

Mat<GFq> gram_matrix(const ExtensionBasis& b) {
  const FieldTower& t = *b.tower();
  const std::uint32_t m = t.m();
  Mat<GFq> g(m, m, 0);
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = i; j < m; ++j) {
      const GFq tr = t.trace(t.mul(b.elements()[i], b.elements()[j]));
      g.at(i, j) = tr;
      g.at(j, i) = tr;
    }
  return g;
}

Mat<GFq> pairing_matrix(const ExtensionBasis& a, const ExtensionBasis& b) {
  require_same_tower(*a.tower(), *b.tower());
  const FieldTower& t = *a.tower();
  const std::uint32_t m = t.m();
  Mat<GFq> g(m, m, 0);
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j)
      g.at(i, j) = t.trace(t.mul(a.elements()[i], b.elements()[j]));
  return g;
}

ExtensionBasis dual_basis(const ExtensionBasis& b) {
  const FieldTower& t = *b.tower();
  const std::uint32_t m = t.m();
  GfOps gf{&t.base()};
  const Mat<GFq> inv = mat_inverse(gf, gram_matrix(b));
  std::vector<ExtCoords> dual(m);
  for (std::uint32_t j = 0; j < m; ++j) {
    ExtCoords acc = t.zero();
    for (std::uint32_t i = 0; i < m; ++i)
      acc = t.add(acc, t.scalar_mul(inv.at(j, i), b.elements()[i]));
    dual[j] = std::move(acc);
  }
  ExtensionBasis out(b.tower(), std::move(dual));
  if (!(pairing_matrix(b, out) == identity(gf, m)))
    throw Error("dual basis verification failed");
  return out;
}

bool is_self_dual(const ExtensionBasis& b) {
  GfOps gf{&b.tower()->base()};
  return gram_matrix(b) == identity(gf, b.m());
}

std::optional<GFq> is_almost_self_dual(const ExtensionBasis& b) {
  const std::uint32_t m = b.m();
  const Mat<GFq> g = gram_matrix(b);
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j)
      if (i != j && g.at(i, j) != 0) return std::nullopt;
  for (std::uint32_t i = 0; i + 1 < m; ++i)
    if (g.at(i, i) != 1) return std::nullopt;
  const GFq a = g.at(m - 1, m - 1);
  if (a == 0) return std::nullopt;
  return a;
}

std::string to_string(BasisKind k) {
  switch (k) {
    case BasisKind::self_dual: return "self_dual";
    case BasisKind::almost_self_dual: return "almost_self_dual";
    case BasisKind::not_exists: return "not_exists";
  }
  return "?";
}

namespace {

// Elements of the subspace orthogonal (under Tr(xy)) to everything chosen
// so far, sorted by integer code. `chosen` may be empty, giving the whole
// field.
std::vector<ExtCoords> orthogonal_complement_elements(const FieldTower& t,
                                                      const std::vector<ExtCoords>& chosen) {
  GfOps gf{&t.base()};
  const std::uint32_t m = t.m();
  Mat<GFq> constraints(chosen.size(), m, 0);
  for (std::size_t i = 0; i < chosen.size(); ++i)
    for (std::uint32_t l = 0; l < m; ++l) {
      ExtCoords unit(m, 0);
      unit[l] = 1;
      constraints.at(i, l) = t.trace(t.mul(chosen[i], unit));
    }
  const Mat<GFq> basis = null_space(gf, constraints);
  const std::size_t dim = basis.rows();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dim; ++i) count *= t.q();
  std::vector<std::pair<std::uint64_t, ExtCoords>> tagged;
  tagged.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    ExtCoords v = t.zero();
    std::uint64_t rem = idx;
    for (std::size_t i = 0; i < dim; ++i) {
      const GFq c = static_cast<GFq>(rem % t.q());
      rem /= t.q();
      if (c != 0) v = t.add(v, t.scalar_mul(c, basis.row(i)));
    }
    tagged.emplace_back(t.to_code(v), std::move(v));
  }
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ExtCoords> out;
  out.reserve(tagged.size());
  for (auto& [code, v] : tagged) out.push_back(std::move(v));
  return out;
}

// Greedy orthogonalization step: first candidate (in the given order) whose
// trace square is 1 or can be rescaled to 1; when `any_nonzero` is set
// (final step of an almost-self-dual search) any nonzero trace square
// qualifies. Scalars are excluded until the last step so the running
// complement never degenerates into the trace kernel.
std::optional<ExtCoords> pick_candidate(const FieldTower& t,
                                        const std::vector<ExtCoords>& candidates,
                                        bool last_step, bool any_nonzero) {
  for (const ExtCoords& v : candidates) {
    if (t.is_zero(v)) continue;
    if (!last_step && t.m() >= 2 && t.is_scalar(v)) continue;
    const GFq tsq = t.trace(t.mul(v, v));
    if (tsq == 0) continue;
    if (any_nonzero) return v;
    if (tsq == 1) return v;
    GFq root = 0;
    if (t.base().sqrt(tsq, &root) && root != 0)
      return t.scalar_mul(t.base().inv(root), v);
  }
  return std::nullopt;
}

BasisSearchResult search_orthonormal(const TowerPtr& tp, bool almost, std::uint64_t seed) {
  const FieldTower& t = *tp;
  const std::uint32_t m = t.m();
  constexpr int kMaxAttempts = 64;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + attempt);
    std::vector<ExtCoords> chosen;
    bool stalled = false;
    for (std::uint32_t step = 0; step < m; ++step) {
      auto candidates = orthogonal_complement_elements(t, chosen);
      if (attempt > 0) std::shuffle(candidates.begin(), candidates.end(), rng);
      const bool last = (step + 1 == m);
      const bool any_nonzero = almost && last;
      auto pick = pick_candidate(t, candidates, last, any_nonzero);
      if (!pick) {
        stalled = true;
        break;
      }
      chosen.push_back(std::move(*pick));
    }
    if (stalled) continue;
    ExtensionBasis basis(tp, std::move(chosen));
    if (almost) {
      if (auto a = is_almost_self_dual(basis))
        return {BasisKind::almost_self_dual, std::move(basis), *a, seed};
    } else if (is_self_dual(basis)) {
      return {BasisKind::self_dual, std::move(basis), 1, seed};
    }
  }
  throw SearchError("basis search exhausted its restart budget");
}

}  // namespace

BasisSearchResult find_self_dual_basis(const TowerPtr& t, std::uint64_t seed) {
  const bool q_even = t->q() % 2 == 0;
  const bool both_odd = t->q() % 2 == 1 && t->m() % 2 == 1;
  if (!q_even && !both_odd) return {BasisKind::not_exists, std::nullopt, 0, seed};
  return search_orthonormal(t, /*almost=*/false, seed);
}

BasisSearchResult find_almost_self_dual_basis(const TowerPtr& t, std::uint64_t seed) {
  if (t->q() % 2 == 0)
    throw EvenCharacteristicError("almost self-dual search requires odd q");
  return search_orthonormal(t, /*almost=*/true, seed);
}

Mat<GFq> expand_vector(const std::vector<ExtCoords>& v, const ExtensionBasis& b) {
  const FieldTower& t = *b.tower();
  for (const auto& entry : v)
    if (entry.size() != t.m())
      throw TowerMismatchError("vector entry has wrong coordinate length");
  GfOps gf{&t.base()};
  const Mat<GFq> pinv = mat_inverse(gf, b.coord_matrix());
  Mat<GFq> coords(v.size(), t.m(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::uint32_t j = 0; j < t.m(); ++j) coords.at(i, j) = v[i][j];
  return mat_mul(gf, coords, pinv);
}

Mat<GFq> expand_vector(const std::vector<FieldElement>& v, const ExtensionBasis& b) {
  std::vector<ExtCoords> coords;
  coords.reserve(v.size());
  for (const FieldElement& e : v) {
    require_same_tower(*e.tower(), *b.tower());
    coords.push_back(e.coords());
  }
  return expand_vector(coords, b);
}

void for_each_ordered_basis(const TowerPtr& tp,
                            const std::function<bool(const std::vector<ExtCoords>&)>& fn) {
  const FieldTower& t = *tp;
  const std::uint32_t m = t.m();
  const std::uint64_t card = t.card();
  std::vector<ExtCoords> all;
  all.reserve(card);
  for (std::uint64_t c = 0; c < card; ++c) all.push_back(t.from_code(c));

  std::vector<ExtCoords> current;
  std::vector<char> in_span(card, 0);
  in_span[0] = 1;

  std::function<bool()> rec = [&]() -> bool {
    if (current.size() == m) return fn(current);
    for (std::uint64_t c = 1; c < card; ++c) {
      if (in_span[c]) continue;
      // extend the span by the new element
      std::vector<std::uint64_t> added;
      for (std::uint64_t s = 0; s < card; ++s) {
        if (!in_span[s]) continue;
        for (GFq coef = 1; coef < t.q(); ++coef) {
          const std::uint64_t nc = t.to_code(t.add(all[s], t.scalar_mul(coef, all[c])));
          if (!in_span[nc]) {
            in_span[nc] = 1;
            added.push_back(nc);
          }
        }
      }
      current.push_back(all[c]);
      const bool keep_going = rec();
      current.pop_back();
      for (std::uint64_t nc : added) in_span[nc] = 0;
      if (!keep_going) return false;
    }
    return true;
  };
  rec();
}

std::vector<ExtensionBasis> all_self_dual_bases(const TowerPtr& tp) {
  const FieldTower& t = *tp;
  const std::uint32_t m = t.m();
  const std::uint64_t card = t.card();
  std::vector<ExtCoords> all;
  all.reserve(card);
  for (std::uint64_t c = 0; c < card; ++c) all.push_back(t.from_code(c));

  std::vector<ExtensionBasis> out;
  std::vector<ExtCoords> current;
  // Partial Gram = identity forces independence, so no span tracking needed.
  std::function<void()> rec = [&]() {
    if (current.size() == m) {
      out.emplace_back(tp, current);
      return;
    }
    for (std::uint64_t c = 1; c < card; ++c) {
      const ExtCoords& g = all[c];
      if (t.trace(t.mul(g, g)) != 1) continue;
      bool ok = true;
      for (const ExtCoords& prev : current)
        if (t.trace(t.mul(prev, g)) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(g);
      rec();
      current.pop_back();
    }
  };
  rec();
  return out;
}

}  // namespace rankmetric
