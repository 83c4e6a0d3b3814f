#include "rankmetric/report.hpp"

#include <algorithm>

#include "rankmetric/basis.hpp"
#include "rankmetric/delsarte.hpp"
#include "rankmetric/gabidulin.hpp"

namespace rankmetric {
namespace {

ExtensionBasis resolve_basis(const TowerPtr& t, const CodeRequest& req) {
  if (req.basis_json) return basis_from_json(t, *req.basis_json);
  if (req.basis_kind == "almost") {
    return *find_almost_self_dual_basis(t, req.seed).basis;
  }
  if (req.basis_kind == "self-dual") {
    BasisSearchResult r = find_self_dual_basis(t, req.seed);
    if (r.kind == BasisKind::not_exists)
      throw ConfigError("no self-dual basis exists for this tower; try --basis-kind almost");
    return *r.basis;
  }
  throw ConfigError("unknown basis kind '" + req.basis_kind + "'");
}

std::pair<VectorCode, ExtensionBasis> build_code(const TowerPtr& t, const CodeRequest& req) {
  ExtensionBasis basis = resolve_basis(t, req);
  std::vector<ExtCoords> g;
  if (req.generators) {
    for (const auto& el : *req.generators) g.push_back(element_from_json(*t, el));
  } else {
    const std::size_t nn = req.n.value_or(t->m());
    if (nn > t->m()) throw BadDimensionError("need n <= m");
    g.assign(basis.elements().begin(), basis.elements().begin() + nn);
  }
  return {gabidulin_code(t, g, req.k), std::move(basis)};
}

}  // namespace

Json report_field(std::uint32_t p, std::uint32_t e, std::uint32_t m) {
  TowerPtr t = FieldTower::make(p, e, m);
  Json j = tower_to_json(*t);
  j["q"] = t->q();
  j["cardinality"] = t->card();
  return j;
}

Json report_basis_search(std::uint32_t p, std::uint32_t e, std::uint32_t m,
                         bool almost, std::uint64_t seed) {
  TowerPtr t = FieldTower::make(p, e, m);
  BasisSearchResult r = almost ? find_almost_self_dual_basis(t, seed)
                               : find_self_dual_basis(t, seed);
  Json j = search_result_to_json(r);
  j["tower"] = tower_to_json(*t);
  if (r.basis) j["gram"] = gfq_matrix_to_json(t->base(), gram_matrix(*r.basis));
  return j;
}

Json report_dual_basis(std::uint32_t p, std::uint32_t e, std::uint32_t m,
                       const Json& basis_json) {
  TowerPtr t = FieldTower::make(p, e, m);
  ExtensionBasis b = basis_from_json(t, basis_json);
  ExtensionBasis d = dual_basis(b);
  Json j;
  j["tower"] = tower_to_json(*t);
  j["basis"] = basis_to_json(b);
  j["dual"] = basis_to_json(d);
  j["self_dual"] = is_self_dual(b);
  if (auto a = is_almost_self_dual(b))
    j["almost_self_dual_a"] = gfq_to_json(t->base(), *a);
  return j;
}

Json report_vector_code(const VectorCode& c, std::uint64_t max_enum) {
  Json j;
  j["code"] = vector_code_to_json(c);
  j["n"] = c.n();
  j["k"] = c.k();
  const bool massey = is_lcd_massey(c);
  const std::size_t hull_dim = hull(c).k();
  Json lcd;
  lcd["verdict"] = massey;
  lcd["massey_nonsingular"] = massey;
  lcd["hull_dim"] = hull_dim;
  j["lcd"] = lcd;
  if (c.k() > 0) {
    try {
      const RankProfile prof = min_rank_distance(c, max_enum);
      j["rank_profile"] = rank_profile_to_json(prof);
      j["min_rank"] = prof.min_rank;
      Json mrd;
      mrd["verdict"] = prof.min_rank == c.n() - c.k() + 1;
      mrd["criterion"] = "min_rank == n-k+1";
      mrd["bound"] = c.n() - c.k() + 1;
      j["mrd"] = mrd;
    } catch (const EnumerationTooLargeError&) {
      j["min_rank"] = nullptr;
      j["note"] = "enumeration_cap";
    }
  }
  return j;
}

Json report_matrix_code(const MatrixCode& c, std::uint64_t max_enum) {
  Json j;
  j["code"] = matrix_code_to_json(c);
  j["dim"] = c.dim();
  const std::size_t hull_dim = intersect(c, dual(c)).dim();
  Json lcd;
  lcd["verdict"] = hull_dim == 0;
  lcd["criterion"] = "dim(C ∩ dual(C)) == 0";
  lcd["hull_dim"] = hull_dim;
  j["lcd"] = lcd;
  try {
    const RankRange rr = rank_range(c, max_enum);
    j["min_rank"] = rr.min_rank;
    j["max_rank"] = rr.max_rank;
    const std::uint64_t mx = std::max<std::uint64_t>(c.n(), c.m());
    const std::uint64_t mn = std::min<std::uint64_t>(c.n(), c.m());
    if (c.dim() > 0) {
      Json mrd;
      mrd["verdict"] = c.dim() == mx * (mn - rr.min_rank + 1);
      mrd["criterion"] = "dim == max(n,m)*(min(n,m)-min_rank+1)";
      j["mrd"] = mrd;
    }
    Json anticode;
    anticode["verdict"] = c.dim() == mx * rr.max_rank;
    anticode["criterion"] = "dim == max(n,m)*max_rank";
    j["optimal_anticode"] = anticode;
    if (c.dim() > 0 && c.dim() == mx * rr.max_rank)
      j["lcd_anticode_criterion"] = rr.min_rank > mn - rr.max_rank;
  } catch (const EnumerationTooLargeError&) {
    j["note"] = "enumeration_cap";
  }
  return j;
}

Json report_gabidulin(const CodeRequest& req) {
  TowerPtr t = FieldTower::make(req.p, req.e, req.m, req.max_enum);
  auto [c, basis] = build_code(t, req);
  Json j = report_vector_code(c, req.max_enum);
  j["basis"] = basis_to_json(basis);
  if (req.s > 1) {
    VectorCode cs = cartesian_power(c, req.s);
    j["cartesian"] = report_vector_code(cs, req.max_enum);
    j["cartesian"]["s"] = req.s;
  }
  return j;
}

Json report_expand(const CodeRequest& req) {
  TowerPtr t = FieldTower::make(req.p, req.e, req.m, req.max_enum);
  auto [c, basis] = build_code(t, req);
  VectorCode target = req.s > 1 ? cartesian_power(c, req.s) : c;
  MatrixCode e = expand_code(target, basis);
  Json j;
  j["source"] = report_vector_code(target, req.max_enum);
  j["basis"] = basis_to_json(basis);
  j["expanded"] = report_matrix_code(e, req.max_enum);
  return j;
}

Json report_anticode(std::uint32_t p, std::uint32_t e, std::size_t n, std::size_t m,
                     const Json& subspace_rows, std::uint64_t max_enum) {
  BaseFieldPtr f = BaseField::make(p, e);
  Mat<GFq> rows(subspace_rows.size(), n, 0);
  for (std::size_t r = 0; r < subspace_rows.size(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      rows.at(r, c) = gfq_from_json(*f, subspace_rows.at(r).at(c));
  Subspace u = Subspace::from_rows(f, n, rows);
  MatrixCode w = ambient_restriction(u, m);
  Json j = report_matrix_code(w, max_enum);
  j["u"] = subspace_to_json(u);
  j["u_dual"] = subspace_to_json(subspace_dual(u));
  j["u_lcd"] = is_lcd_subspace(u);
  return j;
}

}  // namespace rankmetric
