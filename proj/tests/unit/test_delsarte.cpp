#include <doctest.h>

#include "rankmetric/delsarte.hpp"
#include "rankmetric/json_io.hpp"

using namespace rankmetric;

namespace {

Mat<GFq> e_mat(std::size_t n, std::size_t m, std::size_t r, std::size_t c) {
  Mat<GFq> out(n, m, 0);
  out.at(r, c) = 1;
  return out;
}

}  // namespace

TEST_CASE("trace inner product") {
  auto f = BaseField::make(2, 1);
  GfOps gf{f.get()};
  const Mat<GFq> id = identity(gf, 2);
  const Mat<GFq> zero(2, 2, 0);

  CHECK(trace_inner_product(*f, id, zero) == 0);
  CHECK(trace_inner_product(*f, id, id) == 0);            // Tra(I) = 2 = 0
  CHECK(trace_inner_product(*f, id, e_mat(2, 2, 0, 0)) == 1);
  CHECK_THROWS_AS(trace_inner_product(*f, id, Mat<GFq>(2, 3, 0)), ShapeMismatchError);

  // equals Tra(A*B^T) for every GF(2) 2x2 pair
  auto f3 = BaseField::make(3, 1);
  for (auto field : {f, f3}) {
    GfOps ops{field.get()};
    const unsigned q = field->q();
    for (unsigned a = 0; a < q * q * q * q; ++a)
      for (unsigned b = 0; b < q * q * q * q; ++b) {
        Mat<GFq> A(2, 2, 0), B(2, 2, 0);
        unsigned ta = a, tb = b;
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j) {
            A.at(i, j) = ta % q;
            ta /= q;
            B.at(i, j) = tb % q;
            tb /= q;
          }
        const Mat<GFq> abt = mat_mul(ops, A, mat_transpose(ops, B));
        GFq tra = 0;
        for (std::size_t i = 0; i < 2; ++i) tra = field->add(tra, abt.at(i, i));
        CHECK(trace_inner_product(*field, A, B) == tra);
        CHECK(trace_inner_product(*field, A, B) == trace_inner_product(*field, B, A));
      }
  }
}

TEST_CASE("matrix code duals") {
  auto f = BaseField::make(2, 1);

  MatrixCode zero = MatrixCode::zero(f, 2, 2);
  MatrixCode full = MatrixCode::full(f, 2, 2);
  CHECK(dual(zero) == full);
  CHECK(dual(full) == zero);

  MatrixCode e11 = MatrixCode::from_matrices(f, 2, 2, {e_mat(2, 2, 0, 0)});
  MatrixCode d = dual(e11);
  CHECK(d.dim() == 3);
  MatrixCode expected = MatrixCode::from_matrices(
      f, 2, 2, {e_mat(2, 2, 0, 1), e_mat(2, 2, 1, 0), e_mat(2, 2, 1, 1)});
  CHECK(d == expected);

  for (const MatrixCode& c : {zero, full, e11, d}) {
    CHECK(c.dim() + dual(c).dim() == 4);
    CHECK(dual(dual(c)) == c);
  }
}

TEST_CASE("intersection") {
  auto f = BaseField::make(2, 1);
  MatrixCode e11 = MatrixCode::from_matrices(f, 2, 2, {e_mat(2, 2, 0, 0)});
  MatrixCode zero = MatrixCode::zero(f, 2, 2);

  CHECK(intersect(e11, e11) == e11);
  CHECK(intersect(e11, dual(e11)) == zero);
  CHECK(intersect(e11, zero) == zero);

  MatrixCode two = MatrixCode::from_matrices(f, 2, 2, {e_mat(2, 2, 0, 0), e_mat(2, 2, 0, 1)});
  CHECK(intersect(two, e11) == e11);
  CHECK(intersect(two, e11).dim() ==
        two.dim() + e11.dim() - code_sum(two, e11).dim());

  CHECK_THROWS_AS(intersect(e11, MatrixCode::zero(f, 2, 3)), ShapeMismatchError);
}

TEST_CASE("lcd decisions") {
  auto f = BaseField::make(2, 1);
  CHECK(is_lcd(MatrixCode::full(f, 2, 2)));
  CHECK(is_lcd(MatrixCode::zero(f, 2, 2)));

  // span{E11 + E12}: the generator pairs to zero with itself
  Mat<GFq> g(2, 2, 0);
  g.at(0, 0) = 1;
  g.at(0, 1) = 1;
  MatrixCode c = MatrixCode::from_matrices(f, 2, 2, {g});
  CHECK(trace_inner_product(*f, g, g) == 0);
  CHECK_FALSE(is_lcd(c));
}

TEST_CASE("rank range") {
  auto f = BaseField::make(2, 1);
  const RankRange zero = rank_range(MatrixCode::zero(f, 2, 2));
  CHECK_FALSE(zero.has_nonzero);
  CHECK(zero.min_rank == 0);
  CHECK(zero.max_rank == 0);

  const RankRange single = rank_range(MatrixCode::from_matrices(f, 2, 2, {e_mat(2, 2, 0, 0)}));
  CHECK(single.min_rank == 1);
  CHECK(single.max_rank == 1);

  // span{E11, E22} contains I2 of rank 2
  const RankRange diag = rank_range(
      MatrixCode::from_matrices(f, 2, 2, {e_mat(2, 2, 0, 0), e_mat(2, 2, 1, 1)}));
  CHECK(diag.min_rank == 1);
  CHECK(diag.max_rank == 2);
}

TEST_CASE("matrix-side mrd") {
  auto f = BaseField::make(2, 1);
  CHECK(is_mrd_delsarte(MatrixCode::full(f, 2, 2)));
  CHECK_FALSE(is_mrd_delsarte(MatrixCode::from_matrices(f, 2, 2, {e_mat(2, 2, 0, 0)})));
  CHECK_THROWS_AS(is_mrd_delsarte(MatrixCode::zero(f, 2, 2)), ZeroCodeError);
}

TEST_CASE("optimal anticodes and the lcd criterion") {
  auto f = BaseField::make(2, 1);
  CHECK(is_optimal_anticode(MatrixCode::full(f, 2, 2)));
  CHECK(lcd_anticode_criterion(MatrixCode::full(f, 2, 2)));

  // span{I2}: dim 1 < 2*2
  GfOps gf{f.get()};
  MatrixCode diag = MatrixCode::from_matrices(f, 2, 2, {identity(gf, 2)});
  CHECK_FALSE(is_optimal_anticode(diag));
  CHECK_THROWS_AS(lcd_anticode_criterion(diag), NotOptimalAnticodeError);
  CHECK_THROWS_AS(lcd_anticode_criterion(MatrixCode::zero(f, 2, 2)),
                  NotOptimalAnticodeError);

  // single-row matrix space: minrk 1 > 1 - 1
  CHECK(is_optimal_anticode(MatrixCode::full(f, 1, 3)));
  CHECK(lcd_anticode_criterion(MatrixCode::full(f, 1, 3)));

  // the sufficiency is one-way: U = span{(1,0)} gives a criterion-false
  // restriction that is nevertheless LCD
  Subspace u = Subspace::from_rows(f, 2, Mat<GFq>::from_rows({{1, 0}}));
  MatrixCode w = ambient_restriction(u, 2);
  CHECK(is_optimal_anticode(w));
  CHECK_FALSE(lcd_anticode_criterion(w));
  CHECK(is_lcd(w));
}

TEST_CASE("ambient restrictions") {
  auto f = BaseField::make(2, 1);
  Subspace u = Subspace::from_rows(f, 2, Mat<GFq>::from_rows({{1, 0}}));
  MatrixCode w = ambient_restriction(u, 2);
  CHECK(w.dim() == 2);
  CHECK(w == MatrixCode::from_matrices(f, 2, 2, {e_mat(2, 2, 0, 0), e_mat(2, 2, 0, 1)}));
  CHECK(rank_range(w).max_rank == 1);

  CHECK(ambient_restriction(Subspace::zero(f, 2), 2) == MatrixCode::zero(f, 2, 2));
  CHECK(ambient_restriction(Subspace::full(f, 2), 2) == MatrixCode::full(f, 2, 2));

  // dim = m*dim(U) and duality/sum/intersection identities over every
  // subspace of GF(2)^3 with m = 2
  for (const Subspace& s : all_subspaces(f, 3)) {
    const Subspace sd = subspace_dual(s);
    const MatrixCode ws = ambient_restriction(s, 2);
    const MatrixCode wsd = ambient_restriction(sd, 2);
    CHECK(ws.dim() == 2 * s.dim());
    CHECK(dual(ws) == wsd);
    CHECK(ambient_restriction(subspace_sum(s, sd), 2) == code_sum(ws, wsd));
    CHECK(ambient_restriction(subspace_intersect(s, sd), 2) == intersect(ws, wsd));
    CHECK(is_lcd_subspace(s) == is_lcd(ws));
  }
}

TEST_CASE("subspace operations") {
  auto f = BaseField::make(2, 1);
  Subspace e1 = Subspace::from_rows(f, 2, Mat<GFq>::from_rows({{1, 0}}));
  Subspace e2 = subspace_dual(e1);
  CHECK(e2 == Subspace::from_rows(f, 2, Mat<GFq>::from_rows({{0, 1}})));
  CHECK(is_lcd_subspace(e1));
  CHECK(subspace_sum(e1, e2) == Subspace::full(f, 2));

  Subspace diag = Subspace::from_rows(f, 2, Mat<GFq>::from_rows({{1, 1}}));
  CHECK(subspace_dual(diag) == diag);  // (1,1).(1,1) = 0
  CHECK_FALSE(is_lcd_subspace(diag));

  CHECK_THROWS_AS(subspace_sum(e1, Subspace::zero(f, 3)), AmbientMismatchError);

  CHECK(all_subspaces(f, 2).size() == 5);
  CHECK(all_subspaces(f, 3).size() == 16);
  CHECK(all_subspaces(BaseField::make(3, 1), 2).size() == 6);
}

TEST_CASE("matrix code and subspace JSON round trips") {
  auto f = BaseField::make(2, 1);
  MatrixCode w = ambient_restriction(
      Subspace::from_rows(f, 2, Mat<GFq>::from_rows({{1, 0}})), 2);
  CHECK(matrix_code_from_json(matrix_code_to_json(w)) == w);

  Subspace u = Subspace::from_rows(f, 3, Mat<GFq>::from_rows({{1, 0, 1}, {0, 1, 0}}));
  CHECK(subspace_from_json(subspace_to_json(u)) == u);

  // nested digit entries for e > 1
  auto f4 = BaseField::make(2, 2);
  Subspace u4 = Subspace::from_rows(f4, 2, Mat<GFq>::from_rows({{1, 2}}));
  const Json j = subspace_to_json(u4);
  CHECK(j.at("q") == 4);
  CHECK(subspace_from_json(j) == u4);
}
