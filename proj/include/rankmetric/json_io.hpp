#pragma once

#include <json.hpp>

#include "rankmetric/basis.hpp"
#include "rankmetric/delsarte.hpp"
#include "rankmetric/field.hpp"
#include "rankmetric/gabidulin.hpp"

namespace rankmetric {

using Json = nlohmann::json;

// Wire formats.
//   tower     {"p":int,"e":int,"m":int,"base_modulus":[int],"ext_modulus":[[int]]}
//   element   [[int]]: m coordinates over GF(q), each e ints mod p, low degree first
//   GF(q)     plain int when e = 1, else [int] of length e
//   vector code   {"tower":{...},"generator":[[element]]}
//   matrix code   {"n":int,"m":int,"q":int,"generators":[[[GF(q)]]]}
//   subspace      {"n":int,"q":int,"basis":[[GF(q)]]}
//   rank profile  {"min_rank":int,"counts":{"r":count}}

Json tower_to_json(const FieldTower& t);
TowerPtr tower_from_json(const Json& j);

Json element_to_json(const FieldTower& t, const ExtCoords& a);
ExtCoords element_from_json(const FieldTower& t, const Json& j);

Json gfq_to_json(const BaseField& f, GFq a);
GFq gfq_from_json(const BaseField& f, const Json& j);

Json basis_to_json(const ExtensionBasis& b);
ExtensionBasis basis_from_json(const TowerPtr& t, const Json& j);

Json search_result_to_json(const BasisSearchResult& r);

Json vector_code_to_json(const VectorCode& c);
VectorCode vector_code_from_json(const Json& j);

Json rank_profile_to_json(const RankProfile& p);

Json matrix_code_to_json(const MatrixCode& c);
MatrixCode matrix_code_from_json(const Json& j);

Json subspace_to_json(const Subspace& u);
Subspace subspace_from_json(const Json& j);

Json ext_matrix_to_json(const FieldTower& t, const Mat<ExtCoords>& m);
Json gfq_matrix_to_json(const BaseField& f, const Mat<GFq>& m);

/// Recovers (p, e) from q by prime factorization; q must be a prime power.
BaseFieldPtr base_field_from_q(std::uint32_t q);

}  // namespace rankmetric
