#include <doctest.h>

#include <cmath>
#include <random>

#include "ffc/arithstat.hpp"
#include "ffc/enumerate.hpp"
#include "ffc/factor.hpp"

using namespace ffc;

namespace {

Rat frac(const Int& a, const Int& b) {
  Rat r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("factor statistics against direct enumeration") {
  Field F3 = Field::make(3);
  FactorStats s = factor_stats_exact(F3, 2, 1);
  CHECK(s.size == 6);
  CHECK(s.mu == 1);
  CHECK(s.formula_mu == Rat(3, 4));
  CHECK(factor_stats_exact(F3, 2, 2).mu == Rat(3, 2));
  CHECK(factor_stats_exact(F3, 4, 0).mu == 0);
  for (std::uint32_t q : {3u, 5u})
    for (int n = 1; n <= (q == 3 ? 7 : 5); ++n)
      for (int T = 0; T <= n; ++T) {
        Field F = Field::make(q);
        FactorStats st = factor_stats_exact(F, n, T, T % 2 ? Exec::Serial : Exec::Parallel);
        Int count = 0, sum = 0, sum_sq = 0;
        for (const Poly& f : squarefree_monic_polys(F, n)) {
          const long w = omega_bounded(F, f, T);
          ++count;
          sum += w;
          sum_sq += w * w;
        }
        CHECK(st.size == count);
        CHECK(st.mu == frac(sum, count));
        CHECK(st.sigma2 == frac(sum_sq, count) - st.mu * st.mu);
        CHECK(st.sigma2 >= 0);
      }
}

TEST_CASE("formula sums") {
  // pi(1) = 3, pi(2) = 3 over F_3
  CHECK(formula_mu(3, 2) == Rat(3, 4) + Rat(3, 10));
  CHECK(formula_sigma2(3, 1) == 3 * Rat(1, 4) * Rat(3, 4));
  CHECK(formula_mu(7, 0) == 0);
  CHECK(std::abs(mean_asymptotic_check(5, 12) - 1) <= 0.15);
  double prev = 0;
  for (int T = 4; T <= 40; T += 4) {
    const double r = mean_asymptotic_check(5, T);
    if (T > 4) CHECK(std::abs(r - 1) < std::abs(prev - 1));
    prev = r;
  }
}

TEST_CASE("Chebyshev") {
  Field F3 = Field::make(3);
  FactorStats s = factor_stats_exact(F3, 12, 6);
  CHECK(s.size == 354294);  // 3^12 - 3^11
  for (double k2 : {1.0, 4.0, std::log(6.0)}) {
    ChebyshevResult c = chebyshev_check(s, k2);
    CHECK(c.holds);
    CHECK(c.observed <= c.bound);
  }
  CHECK(chebyshev_check(s, 1.0).observed <= 1);
  CHECK(chebyshev_check(s, 4.0).bound == Rat(1, 4));
  CHECK_THROWS_AS(chebyshev_check(s, 0.0), UsageError);
}

TEST_CASE("ratio bound") {
  RatioBound r = ratio_lower_bound(9, 1, 4);
  REQUIRE(r.exact);
  CHECK(*r.exact == Rat(16, 9));
  CHECK(r.value == doctest::Approx(16.0 / 9));
  CHECK(r.genus_K == 1);
  for (int g = 1; g <= 5; ++g) {
    RatioBound a = ratio_lower_bound(5, g, 1), b = ratio_lower_bound(5, g, 2);
    CHECK(a.value < 1);
    CHECK(b.value == doctest::Approx(2 * a.value));
    if (g > 1) CHECK(a.value <= ratio_lower_bound(5, g - 1, 1).value);
  }
  CHECK_THROWS_AS(ratio_lower_bound(3, 0, 1), UsageError);
}

TEST_CASE("base change exponent") {
  Field F3 = Field::make(3);
  CHECK(base_change_exponent(F3, parse_poly(F3, "0,2,0,1")).m == 1);
  BaseChangeResult r = base_change_exponent(F3, parse_poly(F3, "1,0,1"));
  CHECK(r.m == 2);
  CHECK(r.certified);
  Poly cubic = parse_poly(F3, "1,2,0,1");
  REQUIRE(is_irreducible(F3, cubic));
  r = base_change_exponent(F3, mul(F3, parse_poly(F3, "1,0,1"), cubic));
  CHECK(r.m == 6);
  CHECK(r.certified);
  CHECK(r.genus == 2);
  CHECK(r.torsion_bound == 16);
  std::mt19937_64 rng(42);
  int tested = 0;
  while (tested < 50) {
    const int d = 1 + static_cast<int>(rng() % 6);
    Poly g = monic_from_index(F3, d, rng() % monic_count(F3, d));
    if (!is_squarefree(F3, g)) continue;
    ++tested;
    BaseChangeResult b = base_change_exponent(F3, g);
    CHECK(b.certified);
    // no proper divisor of m splits g
    for (int k = 1; k < b.m; ++k)
      if (b.m % k == 0) {
        bool split = true;
        for (int deg : b.factor_degrees) split = split && k % deg == 0;
        CHECK_FALSE(split);
      }
  }
}

TEST_CASE("hyperelliptic proportion") {
  Field F3 = Field::make(3);
  ProportionReport r = hyperelliptic_proportion_experiment(F3, 5, 0.5);
  CHECK(r.total == 162);
  CHECK(hyperelliptic_proportion_experiment(F3, 5, 0.0).proportion == 1.0);
  double prev = 2;
  for (double beta : {0.0, 0.5, 1.0, 2.0, 4.0}) {
    ProportionReport p = hyperelliptic_proportion_experiment(F3, 7, beta);
    CHECK(p.proportion <= prev);
    CHECK(p.proportion <= p.proportion_wide);
    prev = p.proportion;
  }
}
