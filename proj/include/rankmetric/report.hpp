#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rankmetric/audit.hpp"
#include "rankmetric/json_io.hpp"

namespace rankmetric {

/// Construction requests shared by the CLI and the bindings. Reports carry
/// the serialized object plus derived attributes: dimension, rank distance
/// when enumerable, and the LCD/MRD verdicts together with the criterion
/// that produced each.

Json report_field(std::uint32_t p, std::uint32_t e, std::uint32_t m);

Json report_basis_search(std::uint32_t p, std::uint32_t e, std::uint32_t m,
                         bool almost, std::uint64_t seed);

Json report_dual_basis(std::uint32_t p, std::uint32_t e, std::uint32_t m,
                       const Json& basis_json);

struct CodeRequest {
  std::uint32_t p = 2, e = 1, m = 2;
  std::optional<std::size_t> n;          // defaults to m
  std::size_t k = 1;
  std::string basis_kind = "self-dual";  // "self-dual" | "almost"
  std::optional<Json> generators;        // explicit g overrides basis_kind
  std::optional<Json> basis_json;        // explicit expansion basis
  std::size_t s = 1;                     // cartesian power for reports
  std::uint64_t seed = 0;
  std::uint64_t max_enum = kDefaultEnumCap;
};

Json report_gabidulin(const CodeRequest& req);
Json report_expand(const CodeRequest& req);

Json report_vector_code(const VectorCode& c, std::uint64_t max_enum);
Json report_matrix_code(const MatrixCode& c, std::uint64_t max_enum);

Json report_anticode(std::uint32_t p, std::uint32_t e, std::size_t n, std::size_t m,
                     const Json& subspace_rows, std::uint64_t max_enum = kDefaultEnumCap);

}  // namespace rankmetric
