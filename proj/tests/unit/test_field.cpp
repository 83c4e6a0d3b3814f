#include <doctest.h>

#include <map>

#include "oracle.hpp"
#include "rankmetric/field.hpp"
#include "rankmetric/json_io.hpp"

using namespace rankmetric;

namespace {

// Smallest monic irreducible of the given degree over GF(p), found by
// exhaustive root/divisor checking on integer-coded polynomials. Mirrors
// nothing from the library.
std::vector<std::uint32_t> oracle_min_irreducible(unsigned p, unsigned d) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < d; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::uint32_t> f(d + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < d; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[d] = 1;
    // irreducible iff no monic divisor of degree 1..d/2; for d <= 3 a root
    // check suffices
    bool reducible = false;
    if (d <= 3) {
      for (unsigned x = 0; x < p && !reducible; ++x) {
        unsigned val = 0, xp = 1;
        for (unsigned i = 0; i <= d; ++i) {
          val = (val + f[i] * xp) % p;
          xp = (xp * x) % p;
        }
        if (val == 0) reducible = true;
      }
    } else {
      // trial multiplication: f reducible iff f = g*h with 1 <= deg g <= d/2
      for (unsigned dg = 1; dg <= d / 2 && !reducible; ++dg) {
        const unsigned dh = d - dg;
        std::uint64_t gcount = 1, hcount = 1;
        for (unsigned i = 0; i < dg; ++i) gcount *= p;
        for (unsigned i = 0; i < dh; ++i) hcount *= p;
        for (std::uint64_t gc = 0; gc < gcount && !reducible; ++gc)
          for (std::uint64_t hc = 0; hc < hcount && !reducible; ++hc) {
            std::vector<unsigned> g(dg + 1, 0), h(dh + 1, 0), prod(d + 1, 0);
            std::uint64_t t = gc;
            for (unsigned i = 0; i < dg; ++i) { g[i] = t % p; t /= p; }
            g[dg] = 1;
            t = hc;
            for (unsigned i = 0; i < dh; ++i) { h[i] = t % p; t /= p; }
            h[dh] = 1;
            for (unsigned i = 0; i <= dg; ++i)
              for (unsigned j = 0; j <= dh; ++j)
                prod[i + j] = (prod[i + j] + g[i] * h[j]) % p;
            bool eq = true;
            for (unsigned i = 0; i <= d; ++i)
              if (prod[i] != f[i]) { eq = false; break; }
            if (eq) reducible = true;
          }
      }
    }
    if (!reducible) return f;
  }
  return {};
}

}  // namespace

TEST_CASE("make_tower picks the smallest irreducible moduli") {
  auto gf4 = FieldTower::make(2, 1, 2);
  CHECK(gf4->ext_modulus() == std::vector<GFq>{1, 1, 1});  // x^2+x+1
  CHECK(std::vector<std::uint32_t>(gf4->ext_modulus().begin(), gf4->ext_modulus().end()) ==
        oracle_min_irreducible(2, 2));

  auto gf9 = FieldTower::make(3, 1, 2);
  CHECK(gf9->ext_modulus() == std::vector<GFq>{1, 0, 1});  // x^2+1
  CHECK(std::vector<std::uint32_t>(gf9->ext_modulus().begin(), gf9->ext_modulus().end()) ==
        oracle_min_irreducible(3, 2));

  auto gf8 = FieldTower::make(2, 1, 3);
  CHECK(gf8->ext_modulus() == std::vector<GFq>{1, 1, 0, 1});  // x^3+x+1
  CHECK(std::vector<std::uint32_t>(gf8->ext_modulus().begin(), gf8->ext_modulus().end()) ==
        oracle_min_irreducible(2, 3));

  auto gf16 = FieldTower::make(2, 4, 1);
  CHECK(std::vector<std::uint32_t>(gf16->base().modulus()) == oracle_min_irreducible(2, 4));
}

TEST_CASE("make_tower rejects bad parameters") {
  CHECK_THROWS_AS(FieldTower::make(4, 1, 2), NonPrimeError);
  CHECK_THROWS_AS(FieldTower::make(1, 1, 2), NonPrimeError);
  CHECK_THROWS_AS(FieldTower::make(2, 1, 30), BudgetExceededError);
  CHECK_THROWS_AS(FieldTower::make(2, 1, 0), BadDimensionError);
}

TEST_CASE("GF(4) arithmetic matches the reference field") {
  auto t = FieldTower::make(2, 1, 2);
  for (std::uint64_t a = 0; a < 4; ++a)
    for (std::uint64_t b = 0; b < 4; ++b) {
      CHECK(t->to_code(t->mul(t->from_code(a), t->from_code(b))) == oracle::gf4.mul(a, b));
      CHECK(t->to_code(t->add(t->from_code(a), t->from_code(b))) == oracle::gf4.add(a, b));
    }
  // w*w = w+1 and w*(w+1) = 1, with w the class of x (code 2)
  CHECK(t->to_code(t->mul(t->from_code(2), t->from_code(2))) == 3);
  CHECK(t->to_code(t->mul(t->from_code(2), t->from_code(3))) == 1);
}

TEST_CASE("GF(9) and GF(8) arithmetic match the reference fields") {
  auto gf9 = FieldTower::make(3, 1, 2);
  for (std::uint64_t a = 0; a < 9; ++a)
    for (std::uint64_t b = 0; b < 9; ++b)
      CHECK(gf9->to_code(gf9->mul(gf9->from_code(a), gf9->from_code(b))) ==
            oracle::gf9.mul(a, b));
  auto gf8 = FieldTower::make(2, 1, 3);
  for (std::uint64_t a = 0; a < 8; ++a)
    for (std::uint64_t b = 0; b < 8; ++b)
      CHECK(gf8->to_code(gf8->mul(gf8->from_code(a), gf8->from_code(b))) ==
            oracle::gf8.mul(a, b));
}

TEST_CASE("division and element ops") {
  auto t = FieldTower::make(3, 1, 2);
  for (std::uint64_t a = 0; a < 9; ++a)
    for (std::uint64_t b = 1; b < 9; ++b) {
      FieldElement ea = FieldElement::from_code(t, a);
      FieldElement eb = FieldElement::from_code(t, b);
      CHECK((ea / eb) * eb == ea);
    }
  FieldElement one = FieldElement::one(t);
  CHECK_THROWS_AS(one / FieldElement::zero(t), DivisionByZeroError);

  auto other = FieldTower::make(2, 1, 2);
  CHECK_THROWS_AS(one + FieldElement::one(other), TowerMismatchError);
}

TEST_CASE("frobenius is the q-power map") {
  auto t = FieldTower::make(2, 1, 2);
  // w -> w^2 = w+1
  CHECK(t->to_code(t->frobenius(t->from_code(2), 1)) == 3);

  for (auto [p, e, m] : {std::tuple<unsigned, unsigned, unsigned>{2, 1, 3},
                         {3, 1, 2}, {2, 2, 2}, {3, 1, 3}}) {
    auto tw = FieldTower::make(p, e, m);
    for (std::uint64_t a = 0; a < tw->card(); ++a) {
      const ExtCoords ea = tw->from_code(a);
      CHECK(tw->frobenius(ea, 1) == tw->pow(ea, tw->q()));  // definition
      CHECK(tw->frobenius(ea, m) == ea);                    // order divides m
      CHECK(tw->frobenius(ea, -1) == tw->frobenius(ea, m - 1));
      for (std::uint64_t b = 0; b < tw->card(); ++b) {
        const ExtCoords eb = tw->from_code(b);
        CHECK(tw->frobenius(tw->add(ea, eb), 1) ==
              tw->add(tw->frobenius(ea, 1), tw->frobenius(eb, 1)));
        CHECK(tw->frobenius(tw->mul(ea, eb), 1) ==
              tw->mul(tw->frobenius(ea, 1), tw->frobenius(eb, 1)));
      }
    }
    // base-field elements are fixed
    for (GFq c = 0; c < tw->q(); ++c)
      CHECK(tw->frobenius(tw->from_base(c), 1) == tw->from_base(c));
  }
}

TEST_CASE("trace values and fiber uniformity") {
  auto t = FieldTower::make(2, 1, 2);
  CHECK(t->trace(t->zero()) == 0);
  CHECK(t->trace(t->from_code(2)) == 1);  // Tr(w) = w + w^2 = 1
  CHECK(t->trace(t->one()) == 0);         // 1 + 1 = 0

  // cross-check against the reference trace on GF(9): Tr(a) = a + a^3
  auto gf9 = FieldTower::make(3, 1, 2);
  for (std::uint64_t a = 0; a < 9; ++a) {
    const std::uint64_t expected = oracle::gf9.trace(a, 3, 2);
    CHECK(expected < 3);  // lands in GF(3)
    CHECK(gf9->trace(gf9->from_code(a)) == expected);
  }

  for (auto [p, e, m] : {std::tuple<unsigned, unsigned, unsigned>{2, 1, 3},
                         {3, 1, 2}, {2, 2, 2}, {5, 1, 2}}) {
    auto tw = FieldTower::make(p, e, m);
    std::map<GFq, std::uint64_t> fibers;
    for (std::uint64_t a = 0; a < tw->card(); ++a) {
      const ExtCoords ea = tw->from_code(a);
      fibers[tw->trace(ea)]++;
      CHECK(tw->trace(tw->frobenius(ea, 1)) == tw->trace(ea));
      // GF(q)-linearity: Tr(c*a + b) = c*Tr(a) + Tr(b)
      for (GFq c = 0; c < tw->q(); ++c)
        for (std::uint64_t b = 0; b < tw->card(); b += 3) {
          const ExtCoords eb = tw->from_code(b);
          const GFq lhs = tw->trace(tw->add(tw->scalar_mul(c, ea), eb));
          const GFq rhs = tw->base().add(tw->base().mul(c, tw->trace(ea)), tw->trace(eb));
          CHECK(lhs == rhs);
        }
    }
    CHECK(fibers.size() == tw->q());
    for (const auto& [value, count] : fibers) CHECK(count == tw->card() / tw->q());
  }
}

TEST_CASE("field axioms hold exhaustively on small towers") {
  for (auto [p, e, m] : {std::tuple<unsigned, unsigned, unsigned>{2, 1, 2},
                         {3, 1, 2}, {2, 2, 2}}) {
    auto t = FieldTower::make(p, e, m);
    const std::uint64_t card = t->card();
    for (std::uint64_t a = 0; a < card; ++a) {
      const ExtCoords ea = t->from_code(a);
      CHECK(t->add(ea, t->zero()) == ea);
      CHECK(t->mul(ea, t->one()) == ea);
      CHECK(t->is_zero(t->add(ea, t->neg(ea))));
      if (a != 0) CHECK(t->mul(ea, t->inv(ea)) == t->one());
      for (std::uint64_t b = 0; b < card; ++b) {
        const ExtCoords eb = t->from_code(b);
        CHECK(t->add(ea, eb) == t->add(eb, ea));
        CHECK(t->mul(ea, eb) == t->mul(eb, ea));
        for (std::uint64_t c = 0; c < card; ++c) {
          const ExtCoords ec = t->from_code(c);
          CHECK(t->add(t->add(ea, eb), ec) == t->add(ea, t->add(eb, ec)));
          CHECK(t->mul(t->mul(ea, eb), ec) == t->mul(ea, t->mul(eb, ec)));
          CHECK(t->mul(ea, t->add(eb, ec)) == t->add(t->mul(ea, eb), t->mul(ea, ec)));
        }
      }
    }
  }
}

TEST_CASE("tower and element JSON") {
  auto t = FieldTower::make(2, 1, 2);
  CHECK(tower_to_json(*t).dump() ==
        R"({"base_modulus":[0,1],"e":1,"ext_modulus":[[1],[1],[1]],"m":2,"p":2})");
  TowerPtr back = tower_from_json(tower_to_json(*t));
  CHECK(back->same(*t));

  const ExtCoords w = t->from_code(2);
  const Json j = element_to_json(*t, w);
  CHECK(j.dump() == "[[0],[1]]");
  CHECK(element_from_json(*t, j) == w);
}
