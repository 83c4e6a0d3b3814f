#include "rankmetric/json_io.hpp"

#include <string>

namespace rankmetric {

Json tower_to_json(const FieldTower& t) {
  Json j;
  j["p"] = t.p();
  j["e"] = t.e();
  j["m"] = t.m();
  j["base_modulus"] = t.base().modulus();
  Json ext = Json::array();
  for (GFq c : t.ext_modulus()) ext.push_back(t.base().digits(c));
  j["ext_modulus"] = ext;
  return j;
}

TowerPtr tower_from_json(const Json& j) {
  return FieldTower::make(j.at("p").get<std::uint32_t>(),
                          j.at("e").get<std::uint32_t>(),
                          j.at("m").get<std::uint32_t>());
}

Json element_to_json(const FieldTower& t, const ExtCoords& a) {
  Json j = Json::array();
  for (GFq c : a) j.push_back(t.base().digits(c));
  return j;
}

ExtCoords element_from_json(const FieldTower& t, const Json& j) {
  if (!j.is_array() || j.size() != t.m())
    throw ConfigError("element must be an array of m coordinate arrays");
  ExtCoords out(t.m(), 0);
  for (std::uint32_t i = 0; i < t.m(); ++i)
    out[i] = t.base().from_digits(j.at(i).get<std::vector<std::uint32_t>>());
  return out;
}

Json gfq_to_json(const BaseField& f, GFq a) {
  if (f.e() == 1) return a % f.p();
  return Json(f.digits(a));
}

GFq gfq_from_json(const BaseField& f, const Json& j) {
  if (j.is_number()) return j.get<std::uint32_t>() % f.p();
  return f.from_digits(j.get<std::vector<std::uint32_t>>());
}

Json basis_to_json(const ExtensionBasis& b) {
  Json j = Json::array();
  for (const auto& el : b.elements()) j.push_back(element_to_json(*b.tower(), el));
  return j;
}

ExtensionBasis basis_from_json(const TowerPtr& t, const Json& j) {
  std::vector<ExtCoords> elements;
  for (const auto& el : j) elements.push_back(element_from_json(*t, el));
  return ExtensionBasis(t, std::move(elements));
}

Json search_result_to_json(const BasisSearchResult& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  j["seed"] = r.seed;
  if (r.basis) {
    j["basis"] = basis_to_json(*r.basis);
    j["a"] = gfq_to_json(r.basis->tower()->base(), r.a);
  }
  return j;
}

Json ext_matrix_to_json(const FieldTower& t, const Mat<ExtCoords>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(element_to_json(t, m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json gfq_matrix_to_json(const BaseField& f, const Mat<GFq>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(gfq_to_json(f, m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json vector_code_to_json(const VectorCode& c) {
  Json j;
  j["tower"] = tower_to_json(*c.tower());
  j["n"] = c.n();
  j["generator"] = ext_matrix_to_json(*c.tower(), c.generator());
  return j;
}

VectorCode vector_code_from_json(const Json& j) {
  TowerPtr t = tower_from_json(j.at("tower"));
  const Json& gen = j.at("generator");
  const std::size_t k = gen.size();
  const std::size_t n = j.contains("n") ? j.at("n").get<std::size_t>()
                                        : (k > 0 ? gen.at(0).size() : 0);
  if (k == 0) return VectorCode::zero(t, n);
  Mat<ExtCoords> m(k, n, t->zero());
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m.at(r, c) = element_from_json(*t, gen.at(r).at(c));
  return VectorCode::from_generator(t, std::move(m));
}

Json rank_profile_to_json(const RankProfile& p) {
  Json counts = Json::object();
  for (const auto& [rank, count] : p.counts) counts[std::to_string(rank)] = count;
  Json j;
  j["min_rank"] = p.min_rank;
  j["counts"] = counts;
  return j;
}

Json matrix_code_to_json(const MatrixCode& c) {
  Json j;
  j["n"] = c.n();
  j["m"] = c.m();
  j["q"] = c.field()->q();
  Json gens = Json::array();
  for (std::size_t i = 0; i < c.dim(); ++i)
    gens.push_back(gfq_matrix_to_json(*c.field(), c.generator_matrix(i)));
  j["generators"] = gens;
  return j;
}

BaseFieldPtr base_field_from_q(std::uint32_t q) {
  if (q < 2) throw ConfigError("q must be a prime power >= 2");
  std::uint32_t p = 2;
  while (q % p != 0) {
    ++p;
    if (p * p > q) {
      p = q;
      break;
    }
  }
  std::uint32_t e = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw ConfigError("q = " + std::to_string(q) + " is not a prime power");
  return BaseField::make(p, e);
}

MatrixCode matrix_code_from_json(const Json& j) {
  BaseFieldPtr f = base_field_from_q(j.at("q").get<std::uint32_t>());
  const std::size_t n = j.at("n").get<std::size_t>();
  const std::size_t m = j.at("m").get<std::size_t>();
  std::vector<Mat<GFq>> mats;
  for (const auto& gen : j.at("generators")) {
    Mat<GFq> mat(n, m, 0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < m; ++c) mat.at(r, c) = gfq_from_json(*f, gen.at(r).at(c));
    mats.push_back(std::move(mat));
  }
  return MatrixCode::from_matrices(f, n, m, mats);
}

Json subspace_to_json(const Subspace& u) {
  Json j;
  j["n"] = u.n();
  j["q"] = u.field()->q();
  j["basis"] = gfq_matrix_to_json(*u.field(), u.basis());
  return j;
}

Subspace subspace_from_json(const Json& j) {
  BaseFieldPtr f = base_field_from_q(j.at("q").get<std::uint32_t>());
  const std::size_t n = j.at("n").get<std::size_t>();
  const Json& rows = j.at("basis");
  Mat<GFq> basis(rows.size(), n, 0);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) basis.at(r, c) = gfq_from_json(*f, rows.at(r).at(c));
  return Subspace::from_rows(f, n, basis);
}

}  // namespace rankmetric
