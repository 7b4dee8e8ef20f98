#include <doctest.h>

#include <random>

#include "ffc/enumerate.hpp"
#include "ffc/factor.hpp"
#include "ffc/tower.hpp"

using namespace ffc;

namespace {

Poly random_poly(const Field& F, int deg, std::mt19937_64& rng) {
  std::vector<Elem> c(static_cast<std::size_t>(deg + 1));
  for (auto& e : c) e = Elem{static_cast<std::uint32_t>(rng() % F.q())};
  return Poly(std::move(c));
}

KElem random_kelem(const Field& F, int deg, std::mt19937_64& rng) {
  KElem s;
  do s = {random_poly(F, deg, rng), random_poly(F, deg, rng)};
  while (s.is_zero());
  return s;
}

}  // namespace

TEST_CASE("field list and invariants") {
  Field F3 = Field::make(3);
  CHECK(quadratic_fields(F3, 0).size() == 1);
  CHECK(quadratic_fields(F3, 1).size() == 6);
  CHECK(quadratic_fields(F3, 3).size() == 2 * (27 - 9));
  for (int d = 0; d <= 4; ++d)
    for (const TowerField& K : quadratic_fields(F3, d)) {
      if (d == 0) {
        CHECK(K.genus == 0);
        CHECK(K.inf == InfinityType::Inert);
        continue;
      }
      CHECK(K.genus == (d - 1) / 2);
      REQUIRE(K.curve);
      CHECK(check_rh(*K.curve));
      if (d % 2 == 1) CHECK(K.inf == InfinityType::Ramified);
    }
  CHECK_THROWS_AS(make_tower_field(F3, Poly::one(), F3.one()), UsageError);
  CHECK_THROWS_AS(make_tower_field(F3, parse_poly(F3, "0,0,1"), F3.one()), UsageError);
}

TEST_CASE("square roots modulo irreducibles") {
  std::mt19937_64 rng(7);
  for (std::uint32_t q : {3u, 5u, 7u}) {
    Field F = Field::make(q);
    for (int d = 1; d <= 4; ++d)
      for (int trial = 0; trial < 5; ++trial) {
        const auto& irr = irreducibles(F, d);
        const Poly& p = irr[rng() % irr.size()];
        Poly t = rem(F, random_poly(F, d - 1, rng), p);
        if (t.is_zero()) continue;
        Poly a = mulmod(F, t, t, p);
        Poly r = sqrt_mod(F, a, p);
        CHECK(mulmod(F, r, r, p) == a);
        CHECK(r <= rem(F, neg(F, r), p));
      }
  }
}

TEST_CASE("prime valuations") {
  std::mt19937_64 rng(11);
  Field F = Field::make(3);
  for (int d = 1; d <= 3; ++d)
    for (const TowerField& K : quadratic_fields(F, d))
      for (int trial = 0; trial < 3; ++trial) {
        KElem s = random_kelem(F, 3, rng), t = random_kelem(F, 2, rng);
        KElem st = kmul(K, s, t);
        if (knorm(K, st).is_zero()) continue;
        for (auto& [p, e] : factor(F, knorm(K, st)).factors) {
          auto above = primes_above(K, p);
          int total = 0;
          for (auto& P : above) {
            // multiplicativity
            CHECK(prime_valuation(K, P, st) == prime_valuation(K, P, s) + prime_valuation(K, P, t));
            total += prime_valuation(K, P, st) * P.degree();
          }
          CHECK(total == e * p.degree());
          // conjugation swaps the two split primes
          if (above.size() == 2)
            CHECK(prime_valuation(K, above[0], st) == prime_valuation(K, above[1], kconj(K, st)));
        }
      }
}

TEST_CASE("squares in K") {
  std::mt19937_64 rng(5);
  for (std::uint32_t q : {3u, 5u}) {
    Field F = Field::make(q);
    for (int d = 0; d <= 3; ++d)
      for (const TowerField& K : quadratic_fields(F, d)) {
        KElem t = random_kelem(F, 2, rng);
        KElem t2 = kmul(K, t, t);
        CHECK(is_square(K, t2));
        KElem y{Poly(), Poly::one()};
        // y = sqrt(eps) has order 8 in F_(q^2)^*, a square iff q = 3 mod 4
        CHECK(is_square(K, kmul(K, y, t2)) == (K.constant_extension() && q % 4 == 3));
        KElem eps{Poly::constant(F.nonsquare()), Poly()};
        // eps is a square exactly in the constant extension
        CHECK(is_square(K, kmul(K, eps, t2)) == K.constant_extension());
      }
  }
}

TEST_CASE("fundamental units") {
  Field F = Field::make(3);
  for (int d : {2, 4})
    for (const TowerField& K : quadratic_fields(F, d)) {
      if (K.inf != InfinityType::Split) continue;
      auto u = fundamental_unit(K);
      REQUIRE(u);
      CHECK(knorm(K, u->first).degree() == 0);
      CHECK(u->second == u->first.a.degree());
      // no unit with smaller b: search monic b directly
      for (int j = 0; j < u->first.b.degree(); ++j)
        for (const Poly& b : monic_polys(F, j))
          for (std::uint32_t c = 1; c < F.q(); ++c)
            CHECK_FALSE(poly_sqrt(F, add(F, mul(F, K.D, mul(F, b, b)), Poly::constant(Elem{c}))));
    }
}
