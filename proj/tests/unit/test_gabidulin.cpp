#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "rankmetric/gabidulin.hpp"
#include "rankmetric/json_io.hpp"

using namespace rankmetric;

namespace {

std::vector<ExtCoords> codes_to_vec(const TowerPtr& t, std::initializer_list<std::uint64_t> codes) {
  std::vector<ExtCoords> v;
  for (auto c : codes) v.push_back(t->from_code(c));
  return v;
}

// Reference rank of a GF(p^m) vector: span counting on base-p digit rows.
unsigned oracle_vector_rank(const oracle::Field& f, unsigned m,
                            const std::vector<std::uint64_t>& v) {
  std::vector<std::vector<unsigned>> rows;
  for (auto c : v) rows.push_back(f.digits(c, m));
  return oracle::span_rank(f.p, rows);
}

}  // namespace

TEST_CASE("moore matrix layout and validation") {
  auto t = FieldTower::make(2, 1, 2);
  const auto g = codes_to_vec(t, {2, 3});  // (w, w^2)

  Mat<ExtCoords> m1 = moore_matrix(t, g, 1);
  CHECK(m1.rows() == 1);
  CHECK(m1.at(0, 0) == t->from_code(2));
  CHECK(m1.at(0, 1) == t->from_code(3));

  // row 1 applies x -> x^2: (w^2, w^4) = (w^2, w)
  Mat<ExtCoords> m2 = moore_matrix(t, g, 2);
  CHECK(m2.at(1, 0) == t->from_code(3));
  CHECK(m2.at(1, 1) == t->from_code(2));

  CHECK_THROWS_AS(moore_matrix(t, codes_to_vec(t, {2, 2}), 1), DependentGeneratorsError);
  CHECK_THROWS_AS(moore_matrix(t, g, 3), BadDimensionError);
  CHECK_THROWS_AS(moore_matrix(t, g, 0), BadDimensionError);
  CHECK_THROWS_AS(moore_matrix(t, codes_to_vec(t, {1, 2, 3}), 1), BadDimensionError);
}

TEST_CASE("vector rank matches span counting") {
  auto t = FieldTower::make(2, 1, 2);
  CHECK(vector_rank(*t, codes_to_vec(t, {0, 0})) == 0);
  CHECK(vector_rank(*t, codes_to_vec(t, {2, 3})) == 2);
  CHECK(vector_rank(*t, codes_to_vec(t, {2, 2})) == 1);

  auto gf8 = FieldTower::make(2, 1, 3);
  for (std::uint64_t a = 0; a < 8; ++a)
    for (std::uint64_t b = 0; b < 8; ++b) {
      const unsigned expected = oracle_vector_rank(oracle::gf8, 3, {a, b});
      CHECK(vector_rank(*gf8, codes_to_vec(gf8, {a, b})) == expected);
    }
}

TEST_CASE("rank profile of the GF(4) one-dimensional code") {
  auto t = FieldTower::make(2, 1, 2);
  VectorCode c = gabidulin_code(t, codes_to_vec(t, {2, 3}), 1);

  // reference enumeration of the four codewords with oracle arithmetic
  std::map<unsigned, unsigned> expected;
  for (std::uint64_t u = 0; u < 4; ++u) {
    const std::uint64_t w1 = oracle::gf4.mul(u, 2), w2 = oracle::gf4.mul(u, 3);
    expected[oracle_vector_rank(oracle::gf4, 2, {w1, w2})]++;
  }
  CHECK(expected == std::map<unsigned, unsigned>{{0, 1}, {2, 3}});

  const RankProfile p = min_rank_distance(c);
  CHECK(p.min_rank == 2);
  CHECK(p.counts == std::map<std::uint32_t, std::uint64_t>{{0, 1}, {2, 3}});
  CHECK(min_rank(c) == 2);
}

TEST_CASE("GF(8) [3,2] code has rank distance 2 by brute force") {
  auto t = FieldTower::make(2, 1, 3);
  const auto g = codes_to_vec(t, {3, 5, 7});  // {t^3, t^6, t^5}
  VectorCode c = gabidulin_code(t, g, 2);

  // reference: enumerate all 64 codewords u1*row0 + u2*row1
  std::vector<std::uint64_t> row0 = {3, 5, 7};
  std::vector<std::uint64_t> row1;
  for (auto x : row0) row1.push_back(oracle::gf8.mul(x, x));  // x^2, q = 2
  unsigned min_seen = 99;
  for (std::uint64_t u1 = 0; u1 < 8; ++u1)
    for (std::uint64_t u2 = 0; u2 < 8; ++u2) {
      if (u1 == 0 && u2 == 0) continue;
      std::vector<std::uint64_t> word(3);
      for (int j = 0; j < 3; ++j)
        word[j] = oracle::gf8.add(oracle::gf8.mul(u1, row0[j]), oracle::gf8.mul(u2, row1[j]));
      min_seen = std::min(min_seen, oracle_vector_rank(oracle::gf8, 3, word));
    }
  CHECK(min_seen == 2);

  CHECK(min_rank_distance(c).min_rank == 2);
  CHECK(is_mrd(c));
}

TEST_CASE("rank profile counts sum to the code size") {
  auto t = FieldTower::make(2, 1, 3);
  VectorCode c = gabidulin_code(t, codes_to_vec(t, {3, 5, 7}), 2);
  const RankProfile p = min_rank_distance(c);
  std::uint64_t total = 0;
  for (const auto& [r, cnt] : p.counts) total += cnt;
  CHECK(total == 64);
  CHECK(p.counts.at(0) == 1);
}

TEST_CASE("enumeration cap") {
  auto t = FieldTower::make(2, 1, 3);
  VectorCode c = gabidulin_code(t, codes_to_vec(t, {3, 5, 7}), 2);
  CHECK_THROWS_AS(min_rank_distance(c, 10), EnumerationTooLargeError);
}

TEST_CASE("dual code") {
  auto t = FieldTower::make(3, 1, 2);
  // C = span{(alpha, 1)}; dual = span{(1, 2*alpha)} since (alpha,1)*(1,2a) = 0
  VectorCode c = VectorCode::from_generator(
      t, Mat<ExtCoords>::from_rows({codes_to_vec(t, {3, 1})}));
  VectorCode d = dual_code(c);
  REQUIRE(d.k() == 1);
  CHECK(t->to_code(d.row_space_basis().at(0, 0)) == 1);
  CHECK(t->to_code(d.row_space_basis().at(0, 1)) == 6);  // 2*alpha

  // G * H^T = 0
  ExtOps ops{t.get()};
  Mat<ExtCoords> prod = mat_mul(ops, c.generator(), mat_transpose(ops, d.generator()));
  CHECK(t->is_zero(prod.at(0, 0)));

  CHECK(dual_code(d).same_code(c));

  // k = n gives the zero code, whose dual is the full space
  VectorCode full = VectorCode::from_generator(
      t, Mat<ExtCoords>::from_rows(
             {codes_to_vec(t, {1, 0}), codes_to_vec(t, {0, 1})}));
  VectorCode zero = dual_code(full);
  CHECK(zero.k() == 0);
  CHECK(dual_code(zero).same_code(full));
  CHECK(zero.k() + full.k() == 2);
}

TEST_CASE("massey criterion and hull agree") {
  auto gf4 = FieldTower::make(2, 1, 2);
  VectorCode lcd = gabidulin_code(gf4, codes_to_vec(gf4, {2, 3}), 1);
  CHECK(is_lcd_massey(lcd));
  CHECK(hull(lcd).k() == 0);

  auto gf9 = FieldTower::make(3, 1, 2);
  VectorCode so = VectorCode::from_generator(
      gf9, Mat<ExtCoords>::from_rows({codes_to_vec(gf9, {3, 1})}));
  CHECK_FALSE(is_lcd_massey(so));
  CHECK(hull(so).k() == 1);
  CHECK(hull(so).same_code(so));  // self-orthogonal

  // exhaustive agreement over every 1-dimensional length-2 code
  for (auto tower : {gf4, gf9}) {
    for (std::uint64_t a = 0; a < tower->card(); ++a)
      for (std::uint64_t b = 0; b < tower->card(); ++b) {
        if (a == 0 && b == 0) continue;
        VectorCode c = VectorCode::from_generator(
            tower, Mat<ExtCoords>::from_rows({codes_to_vec(tower, {a, b})}));
        CHECK(is_lcd_massey(c) == (hull(c).k() == 0));
      }
  }

  // full space: GG^T = G G^T with G invertible is always nonsingular
  VectorCode full = VectorCode::from_generator(
      gf4, Mat<ExtCoords>::from_rows(
               {codes_to_vec(gf4, {1, 0}), codes_to_vec(gf4, {0, 1})}));
  CHECK(is_lcd_massey(full));
  CHECK(hull(full).k() == 0);
}

TEST_CASE("scalar multiples preserve vector rank") {
  // exhaustive over every tower with q^m <= 16
  for (auto [p, e, m] : {std::tuple<unsigned, unsigned, unsigned>{2, 1, 2},
                         {3, 1, 2}, {2, 1, 3}, {2, 2, 2}, {2, 1, 4}}) {
    auto t = FieldTower::make(p, e, m);
    for (std::uint64_t a = 0; a < t->card(); ++a)
      for (std::uint64_t b = 0; b < t->card(); ++b)
        for (std::uint64_t s = 1; s < t->card(); ++s) {
          const auto v = codes_to_vec(t, {a, b});
          std::vector<ExtCoords> sv;
          for (const auto& x : v) sv.push_back(t->mul(t->from_code(s), x));
          CHECK(vector_rank(*t, v) == vector_rank(*t, sv));
        }
  }
}

TEST_CASE("mrd decisions") {
  auto t = FieldTower::make(2, 1, 2);
  CHECK(is_mrd(gabidulin_code(t, codes_to_vec(t, {2, 3}), 1)));
  CHECK(is_mrd(gabidulin_code(t, codes_to_vec(t, {2, 3}), 2)));

  // generator (1, 0) has the rank-1 word (1,0), below the bound n-k+1 = 2
  VectorCode bad = VectorCode::from_generator(
      t, Mat<ExtCoords>::from_rows({codes_to_vec(t, {1, 0})}));
  CHECK_FALSE(is_mrd(bad));

  CHECK_THROWS_AS(is_mrd(VectorCode::zero(t, 2)), ZeroCodeError);
}

TEST_CASE("cartesian powers") {
  auto t = FieldTower::make(2, 1, 2);
  VectorCode c = gabidulin_code(t, codes_to_vec(t, {2, 3}), 1);

  CHECK(cartesian_power(c, 1).same_code(c));

  VectorCode c2 = cartesian_power(c, 2);
  CHECK(c2.n() == 4);
  CHECK(c2.k() == 2);
  CHECK(min_rank_distance(c2).min_rank == 2);

  for (std::size_t s : {2, 3}) {
    VectorCode cs = cartesian_power(c, s);
    CHECK(dual_code(cs).same_code(cartesian_power(dual_code(c), s)));
    CHECK((hull(cs).k() == 0) == (hull(c).k() == 0));
    CHECK(min_rank(cs) == min_rank(c));
  }

  auto gf8 = FieldTower::make(2, 1, 3);
  VectorCode c8 = gabidulin_code(gf8, codes_to_vec(gf8, {3, 5, 7}), 2);
  for (std::size_t s : {2, 3}) {
    VectorCode cs = cartesian_power(c8, s);
    CHECK(dual_code(cs).same_code(cartesian_power(dual_code(c8), s)));
    CHECK((hull(cs).k() == 0) == (hull(c8).k() == 0));
  }
}

TEST_CASE("expansion to a matrix code") {
  auto t = FieldTower::make(2, 1, 2);
  const ExtensionBasis b(t, codes_to_vec(t, {2, 3}));
  VectorCode c = gabidulin_code(t, codes_to_vec(t, {2, 3}), 1);

  MatrixCode e = expand_code(c, b);
  CHECK(e.dim() == 2);  // m*k
  CHECK(e.n() == 2);
  CHECK(e.m() == 2);
  CHECK(min_rank(e) == 2);
  CHECK(is_lcd(e));

  // dimension is m*k for every construction in the small grid
  for (std::size_t k = 1; k <= 2; ++k) {
    MatrixCode ek = expand_code(gabidulin_code(t, codes_to_vec(t, {2, 3}), k), b);
    CHECK(ek.dim() == 2 * k);
    CHECK(min_rank(ek) == min_rank(gabidulin_code(t, codes_to_vec(t, {2, 3}), k)));
  }

  // self-dual basis: expansion commutes with duality and preserves LCD
  VectorCode d = dual_code(c);
  CHECK(expand_code(d, b) == dual(e));
  CHECK(is_lcd(e) == (hull(c).k() == 0));

  CHECK_THROWS_AS(expand_code(VectorCode::zero(t, 2), b), ZeroCodeError);
  auto other = FieldTower::make(3, 1, 2);
  const ExtensionBasis ob(other, codes_to_vec(other, {3, 1}));
  CHECK_THROWS_AS(expand_code(c, ob), TowerMismatchError);
}

TEST_CASE("expanded minimum rank is basis independent") {
  auto t = FieldTower::make(2, 1, 2);
  VectorCode c = gabidulin_code(t, codes_to_vec(t, {2, 3}), 1);
  std::set<std::uint32_t> ranks;
  for_each_ordered_basis(t, [&](const std::vector<ExtCoords>& els) {
    ranks.insert(min_rank(expand_code(c, ExtensionBasis(t, els))));
    return true;
  });
  CHECK(ranks == std::set<std::uint32_t>{2});

  auto gf8 = FieldTower::make(2, 1, 3);
  VectorCode c8 = gabidulin_code(gf8, codes_to_vec(gf8, {3, 5, 7}), 2);
  std::set<std::uint32_t> ranks8;
  for_each_ordered_basis(gf8, [&](const std::vector<ExtCoords>& els) {
    ranks8.insert(min_rank(expand_code(c8, ExtensionBasis(gf8, els))));
    return true;
  });
  CHECK(ranks8 == std::set<std::uint32_t>{2});
}

TEST_CASE("projective scan agrees with the full rank distribution") {
  auto gf8 = FieldTower::make(2, 1, 3);
  for (std::size_t k = 1; k <= 3; ++k) {
    VectorCode c = gabidulin_code(gf8, codes_to_vec(gf8, {3, 5, 7}), k);
    CHECK(min_rank(c) == min_rank_distance(c).min_rank);
  }
  auto gf9 = FieldTower::make(3, 1, 2);
  for (std::uint64_t a = 0; a < 9; ++a)
    for (std::uint64_t b = 0; b < 9; ++b) {
      if (a == 0 && b == 0) continue;
      VectorCode c = VectorCode::from_generator(
          gf9, Mat<ExtCoords>::from_rows({codes_to_vec(gf9, {a, b})}));
      CHECK(min_rank(c) == min_rank_distance(c).min_rank);
    }
}

TEST_CASE("singleton bound over a small grid") {
  auto t = FieldTower::make(2, 1, 3);
  for (std::size_t k = 1; k <= 3; ++k) {
    VectorCode c = gabidulin_code(t, codes_to_vec(t, {3, 5, 7}), k);
    CHECK(min_rank(c) <= c.n() - k + 1);
  }
}

TEST_CASE("vector code JSON round trip") {
  auto t = FieldTower::make(2, 1, 2);
  VectorCode c = gabidulin_code(t, codes_to_vec(t, {2, 3}), 1);
  VectorCode back = vector_code_from_json(vector_code_to_json(c));
  CHECK(back.same_code(c));

  const Json profile = rank_profile_to_json(min_rank_distance(c));
  CHECK(profile.at("min_rank") == 2);
  CHECK(profile.at("counts").at("2") == 3);
}
