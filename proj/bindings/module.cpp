#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rankmetric/audit.hpp"
#include "rankmetric/basis.hpp"
#include "rankmetric/delsarte.hpp"
#include "rankmetric/gabidulin.hpp"
#include "rankmetric/json_io.hpp"
#include "rankmetric/report.hpp"

namespace py = pybind11;
using namespace rankmetric;

namespace {

struct PyTower {
  TowerPtr t;
};

std::vector<ExtCoords> coords_of(const std::vector<FieldElement>& els) {
  std::vector<ExtCoords> out;
  out.reserve(els.size());
  for (const auto& e : els) out.push_back(e.coords());
  return out;
}

std::vector<std::vector<GFq>> gfq_matrix_to_lists(const Mat<GFq>& m) {
  std::vector<std::vector<GFq>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

py::dict search_result_to_dict(const BasisSearchResult& r) {
  py::dict d;
  d["kind"] = to_string(r.kind);
  d["seed"] = r.seed;
  if (r.basis) {
    py::list els;
    for (const auto& c : r.basis->elements())
      els.append(FieldElement(r.basis->tower(), c));
    d["basis"] = els;
    d["a"] = r.a;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "rank-metric codes over small finite fields: Gabidulin and "
              "Delsarte constructions, LCD/MRD/anticode checks, claim audits";

  py::register_exception<Error>(mod, "Error");

  py::class_<PyTower>(mod, "Tower")
      .def(py::init([](std::uint32_t p, std::uint32_t e, std::uint32_t m) {
             return PyTower{FieldTower::make(p, e, m)};
           }),
           py::arg("p"), py::arg("e") = 1, py::arg("m") = 2)
      .def_property_readonly("p", [](const PyTower& t) { return t.t->p(); })
      .def_property_readonly("e", [](const PyTower& t) { return t.t->e(); })
      .def_property_readonly("q", [](const PyTower& t) { return t.t->q(); })
      .def_property_readonly("m", [](const PyTower& t) { return t.t->m(); })
      .def_property_readonly("cardinality", [](const PyTower& t) { return t.t->card(); })
      .def("element",
           [](const PyTower& t, std::uint64_t code) {
             return FieldElement::from_code(t.t, code);
           },
           py::arg("code"))
      .def("zero", [](const PyTower& t) { return FieldElement::zero(t.t); })
      .def("one", [](const PyTower& t) { return FieldElement::one(t.t); })
      .def("to_json", [](const PyTower& t) { return tower_to_json(*t.t).dump(); })
      .def("__repr__", [](const PyTower& t) {
        return "Tower(p=" + std::to_string(t.t->p()) + ", e=" + std::to_string(t.t->e()) +
               ", m=" + std::to_string(t.t->m()) + ")";
      });

  py::class_<FieldElement>(mod, "Element")
      .def("__add__", [](const FieldElement& a, const FieldElement& b) { return a + b; })
      .def("__sub__", [](const FieldElement& a, const FieldElement& b) { return a - b; })
      .def("__mul__", [](const FieldElement& a, const FieldElement& b) { return a * b; })
      .def("__truediv__", [](const FieldElement& a, const FieldElement& b) { return a / b; })
      .def("__eq__", [](const FieldElement& a, const FieldElement& b) { return a == b; })
      .def_property_readonly("code", &FieldElement::code)
      .def_property_readonly("coords", [](const FieldElement& e) { return e.coords(); })
      .def("frobenius", &FieldElement::frobenius, py::arg("i") = 1)
      .def("trace", &FieldElement::trace)
      .def("inverse", &FieldElement::inverse)
      .def("is_zero", &FieldElement::is_zero)
      .def("__repr__", [](const FieldElement& e) {
        return "Element(code=" + std::to_string(e.code()) + ")";
      });

  py::class_<ExtensionBasis>(mod, "Basis")
      .def(py::init([](const PyTower& t, const std::vector<FieldElement>& els) {
             return ExtensionBasis(t.t, coords_of(els));
           }),
           py::arg("tower"), py::arg("elements"))
      .def_property_readonly("elements",
                             [](const ExtensionBasis& b) {
                               std::vector<FieldElement> out;
                               for (const auto& c : b.elements())
                                 out.emplace_back(b.tower(), c);
                               return out;
                             })
      .def("gram", [](const ExtensionBasis& b) { return gfq_matrix_to_lists(gram_matrix(b)); })
      .def("dual", [](const ExtensionBasis& b) { return dual_basis(b); })
      .def("is_self_dual", [](const ExtensionBasis& b) { return is_self_dual(b); })
      .def("almost_self_dual_a",
           [](const ExtensionBasis& b) { return is_almost_self_dual(b); })
      .def("to_json", [](const ExtensionBasis& b) { return basis_to_json(b).dump(); });

  mod.def("find_self_dual_basis",
          [](const PyTower& t, std::uint64_t seed) {
            return search_result_to_dict(find_self_dual_basis(t.t, seed));
          },
          py::arg("tower"), py::arg("seed") = 0);
  mod.def("find_almost_self_dual_basis",
          [](const PyTower& t, std::uint64_t seed) {
            return search_result_to_dict(find_almost_self_dual_basis(t.t, seed));
          },
          py::arg("tower"), py::arg("seed") = 0);
  mod.def("expand_vector",
          [](const std::vector<FieldElement>& v, const ExtensionBasis& b) {
            return gfq_matrix_to_lists(expand_vector(v, b));
          },
          py::arg("v"), py::arg("basis"));
  mod.def("vector_rank",
          [](const PyTower& t, const std::vector<FieldElement>& v) {
            return vector_rank(*t.t, coords_of(v));
          },
          py::arg("tower"), py::arg("v"));

  py::class_<VectorCode>(mod, "VectorCode")
      .def_property_readonly("k", &VectorCode::k)
      .def_property_readonly("n", &VectorCode::n)
      .def("min_rank",
           [](const VectorCode& c, std::uint64_t cap) { return min_rank(c, cap); },
           py::arg("cap") = kDefaultEnumCap)
      .def("rank_profile",
           [](const VectorCode& c, std::uint64_t cap) {
             const RankProfile p = min_rank_distance(c, cap);
             py::dict counts;
             for (const auto& [r, cnt] : p.counts) counts[py::int_(r)] = cnt;
             py::dict d;
             d["min_rank"] = p.min_rank;
             d["counts"] = counts;
             return d;
           },
           py::arg("cap") = kDefaultEnumCap)
      .def("dual", [](const VectorCode& c) { return dual_code(c); })
      .def("hull_dim", [](const VectorCode& c) { return hull(c).k(); })
      .def("is_lcd", [](const VectorCode& c) { return is_lcd_massey(c); })
      .def("is_mrd",
           [](const VectorCode& c, std::uint64_t cap) { return is_mrd(c, cap); },
           py::arg("cap") = kDefaultEnumCap)
      .def("cartesian_power",
           [](const VectorCode& c, std::size_t s) { return cartesian_power(c, s); },
           py::arg("s"))
      .def("expand",
           [](const VectorCode& c, const ExtensionBasis& b) { return expand_code(c, b); },
           py::arg("basis"))
      .def("same_code", &VectorCode::same_code)
      .def("to_json", [](const VectorCode& c) { return vector_code_to_json(c).dump(); });

  mod.def("gabidulin_code",
          [](const PyTower& t, const std::vector<FieldElement>& g, std::size_t k) {
            return gabidulin_code(t.t, coords_of(g), k);
          },
          py::arg("tower"), py::arg("g"), py::arg("k"));
  mod.def("vector_code_from_json", [](const std::string& text) {
    return vector_code_from_json(Json::parse(text));
  });

  py::class_<MatrixCode>(mod, "MatrixCode")
      .def_property_readonly("dim", &MatrixCode::dim)
      .def_property_readonly("n", &MatrixCode::n)
      .def_property_readonly("m", &MatrixCode::m)
      .def("dual", [](const MatrixCode& c) { return dual(c); })
      .def("intersect",
           [](const MatrixCode& a, const MatrixCode& b) { return intersect(a, b); })
      .def("is_lcd", [](const MatrixCode& c) { return is_lcd(c); })
      .def("min_rank",
           [](const MatrixCode& c, std::uint64_t cap) { return min_rank(c, cap); },
           py::arg("cap") = kDefaultEnumCap)
      .def("rank_range",
           [](const MatrixCode& c, std::uint64_t cap) {
             const RankRange r = rank_range(c, cap);
             return py::make_tuple(r.min_rank, r.max_rank, r.has_nonzero);
           },
           py::arg("cap") = kDefaultEnumCap)
      .def("is_mrd",
           [](const MatrixCode& c, std::uint64_t cap) { return is_mrd_delsarte(c, cap); },
           py::arg("cap") = kDefaultEnumCap)
      .def("is_optimal_anticode",
           [](const MatrixCode& c, std::uint64_t cap) { return is_optimal_anticode(c, cap); },
           py::arg("cap") = kDefaultEnumCap)
      .def("lcd_anticode_criterion",
           [](const MatrixCode& c, std::uint64_t cap) {
             return lcd_anticode_criterion(c, cap);
           },
           py::arg("cap") = kDefaultEnumCap)
      .def("__eq__", [](const MatrixCode& a, const MatrixCode& b) { return a == b; })
      .def("to_json", [](const MatrixCode& c) { return matrix_code_to_json(c).dump(); });

  mod.def("matrix_code_from_json", [](const std::string& text) {
    return matrix_code_from_json(Json::parse(text));
  });

  py::class_<Subspace>(mod, "Subspace")
      .def(py::init([](std::uint32_t p, std::uint32_t e, std::size_t n,
                       const std::vector<std::vector<GFq>>& rows) {
             BaseFieldPtr f = BaseField::make(p, e);
             Mat<GFq> basis(rows.size(), n, 0);
             for (std::size_t r = 0; r < rows.size(); ++r)
               for (std::size_t c = 0; c < n; ++c) basis.at(r, c) = rows[r][c];
             return Subspace::from_rows(f, n, basis);
           }),
           py::arg("p"), py::arg("e"), py::arg("n"), py::arg("rows"))
      .def_property_readonly("dim", &Subspace::dim)
      .def_property_readonly("n", &Subspace::n)
      .def("basis_rows", [](const Subspace& u) { return gfq_matrix_to_lists(u.basis()); })
      .def("dual", [](const Subspace& u) { return subspace_dual(u); })
      .def("sum", [](const Subspace& a, const Subspace& b) { return subspace_sum(a, b); })
      .def("intersect",
           [](const Subspace& a, const Subspace& b) { return subspace_intersect(a, b); })
      .def("is_lcd", [](const Subspace& u) { return is_lcd_subspace(u); })
      .def("__eq__", [](const Subspace& a, const Subspace& b) { return a == b; })
      .def("restriction",
           [](const Subspace& u, std::size_t m) { return ambient_restriction(u, m); },
           py::arg("m"))
      .def("to_json", [](const Subspace& u) { return subspace_to_json(u).dump(); });

  mod.def("run_suite_ndjson",
          [](const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>& towers,
             std::uint64_t seed, std::uint64_t max_enum) {
            SuiteConfig cfg = SuiteConfig::defaults();
            cfg.seed = seed;
            cfg.max_enum = max_enum;
            if (!towers.empty()) {
              cfg.towers.clear();
              for (const auto& [p, e, m] : towers) cfg.towers.push_back({p, e, m});
            }
            return certificates_to_ndjson(run_suite(cfg));
          },
          py::arg("towers") = std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{},
          py::arg("seed") = 0, py::arg("max_enum") = kDefaultEnumCap);

  mod.def("report_gabidulin_json", [](std::uint32_t p, std::uint32_t e, std::uint32_t m,
                                      std::size_t k, const std::string& basis_kind,
                                      std::uint64_t seed) {
    CodeRequest req;
    req.p = p;
    req.e = e;
    req.m = m;
    req.k = k;
    req.basis_kind = basis_kind;
    req.seed = seed;
    return report_gabidulin(req).dump();
  },
  py::arg("p"), py::arg("e"), py::arg("m"), py::arg("k"),
  py::arg("basis_kind") = "self-dual", py::arg("seed") = 0);
}
