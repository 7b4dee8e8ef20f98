#include <doctest.h>

#include <cmath>
#include <random>

#include "ffc/enumerate.hpp"
#include "ffc/extension.hpp"
#include "ffc/factor.hpp"
#include "ffc/residue.hpp"
#include "ffc/zeta.hpp"

using namespace ffc;

namespace {

Poly P(const Field& F, const std::string& s) { return parse_poly(F, s); }

Int ipow(long q, int k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(k));
  return r;
}

// Count solutions (x, y) of y^2 = D(x) over F_{q^i} by looping over both
// coordinates, plus the points at infinity of the smooth model.
long naive_points(const Field& F, const Poly& D, unsigned i) {
  const ConstantExtension& ext = constant_extension(F, i);
  const Field& B = ext.big;
  Poly Db = ext.map(D);
  long count = 0;
  for (std::uint32_t x = 0; x < B.q(); ++x) {
    Elem v = eval(B, Db, Elem{x});
    for (std::uint32_t y = 0; y < B.q(); ++y)
      if (B.mul(Elem{y}, Elem{y}) == v) ++count;
  }
  if (D.degree() % 2 == 1) return count + 1;
  Elem lc = Db.lead();
  bool square = false;
  for (std::uint32_t y = 1; y < B.q(); ++y) square = square || B.mul(Elem{y}, Elem{y}) == lc;
  return count + (square ? 2 : 0);
}

// Power series of prod over places (1 - u^deg)^-1 for F_q(x, sqrt D), deg D odd,
// from the splitting of each monic irreducible and the single place at infinity.
std::vector<Int> divisor_counts(const Field& F, const Poly& D, int N) {
  std::vector<Int> s(static_cast<std::size_t>(N) + 1, Int(0));
  s[0] = 1;
  auto multiply_place = [&](int deg) {
    for (int i = deg; i <= N; ++i) s[static_cast<std::size_t>(i)] += s[static_cast<std::size_t>(i - deg)];
  };
  multiply_place(1);
  for (int d = 1; d <= N; ++d)
    for (const Poly& p : irreducibles(F, d)) {
      int chi = legendre_irreducible(F, D, p);
      if (chi == 1) {
        multiply_place(d);
        multiply_place(d);
      } else if (chi == -1) {
        if (2 * d <= N) multiply_place(2 * d);
      } else {
        multiply_place(d);
      }
    }
  return s;
}

}  // namespace

TEST_CASE("zeta of the rational base") {
  Field F3 = Field::make(3);
  RationalFn z = zeta_rational_base(F3);
  CHECK(z.num() == IntPoly{1});
  CHECK(z.den() == (IntPoly{1, -1} * IntPoly{1, -3}));
  auto s = (z * RationalFn::polynomial(IntPoly{1, -1})).series(6);
  for (int k = 0; k <= 6; ++k) CHECK(s[static_cast<std::size_t>(k)] == Rat(ipow(3, k)));
  auto c = z.series(8);
  for (int n = 0; n <= 8; ++n) {
    // effective divisors of degree n on the projective line: a monic
    // polynomial of degree k <= n plus (n - k) times infinity
    Int count = 0;
    for (int k = 0; k <= n; ++k) count += Int(monic_polys(F3, k).size());
    CHECK(c[static_cast<std::size_t>(n)] == Rat(count));
    CHECK(c[static_cast<std::size_t>(n)] == Rat((ipow(3, n + 1) - 1) / 2));
  }
}

TEST_CASE("hyperelliptic_lpoly examples") {
  Field F3 = Field::make(3), F5 = Field::make(5);
  CurveZeta z = hyperelliptic_lpoly(F3, P(F3, "0,2,0,1"));
  CHECK(z.genus == 1);
  CHECK(z.lpoly == IntPoly{1, 0, 3});
  CHECK(class_number(z) == 4);
  CHECK(naive_points(F3, P(F3, "0,2,0,1"), 1) == 4);
  CurveZeta r = hyperelliptic_lpoly(F3, P(F3, "0,1"));
  CHECK(r.genus == 0);
  CHECK(r.lpoly == IntPoly{1});
  Poly g5 = P(F5, "1,1,0,0,0,1");
  REQUIRE(is_squarefree(F5, g5));
  CurveZeta z5 = hyperelliptic_lpoly(F5, g5);
  CHECK(z5.genus == 2);
  CHECK(z5.lpoly.degree() == 4);
  CHECK(z5.lpoly[3] == 5 * z5.lpoly[1]);
  CHECK(z5.lpoly[4] == 25);
  // counts over F_5 and F_25 reproduce the first two coefficients
  Int s1 = 5 + 1 - naive_points(F5, g5, 1), s2 = 25 + 1 - naive_points(F5, g5, 2);
  CHECK(z5.lpoly[1] == -s1);
  CHECK(2 * z5.lpoly[2] == -(s2 + s1 * z5.lpoly[1]));
  CHECK_THROWS_AS(hyperelliptic_lpoly(F3, P(F3, "0,0,1")), UsageError);
}

TEST_CASE("point counts agree with the naive count, including twists and even degree") {
  std::mt19937_64 rng(21);
  for (auto F : {Field::make(3), Field::make(5), Field::make(3, 2)}) {
    for (int trial = 0; trial < 12; ++trial) {
      int deg = 1 + static_cast<int>(rng() % 6);
      std::vector<Elem> c(static_cast<std::size_t>(deg) + 1);
      for (auto& x : c) x = Elem{static_cast<std::uint32_t>(rng() % F.q())};
      if (c.back().v == 0) c.back() = F.nonsquare();
      Poly D(std::move(c));
      if (!is_squarefree(F, D)) continue;
      for (unsigned i = 1; i <= 2; ++i)
        CHECK(hyperelliptic_point_count(F, D, i) == naive_points(F, D, i));
      CurveZeta z = hyperelliptic_lpoly(F, D, {.count_all = true});
      CHECK(check_rh(z));
      CHECK(hyperelliptic_lpoly(F, D, {.exec = Exec::Serial}).lpoly == z.lpoly);
    }
  }
}

TEST_CASE("check_rh") {
  CurveZeta z;
  z.q = 3;
  z.genus = 1;
  z.lpoly = IntPoly{1, 0, 3};
  auto r = rh_check(z);
  CHECK(r.ok);
  CHECK(r.max_deviation < 1e-9);
  CurveZeta bad;
  bad.q = 3;
  bad.genus = 1;
  bad.lpoly = IntPoly{1, -4};
  CHECK_FALSE(check_rh(bad));
  // a polynomial with a repeated factor (1 + 3u^2)^2 still checks out
  CurveZeta sq;
  sq.q = 3;
  sq.genus = 2;
  sq.lpoly = IntPoly{1, 0, 3} * IntPoly{1, 0, 3};
  CHECK(check_rh(sq));
}

TEST_CASE("dirichlet_lpoly") {
  Field F3 = Field::make(3);
  CHECK(dirichlet_lpoly(F3, P(F3, "0,1")).lpoly_affine == IntPoly{1});
  auto l = dirichlet_lpoly(F3, P(F3, "0,2,1"));
  CHECK(l.lpoly_affine == IntPoly{1, -1});
  CHECK(l.infinite_type == InfinityType::Split);
  // direct character sum over the three monic linears
  long s = 0;
  for (auto& m : monic_polys(F3, 1)) s += jacobi_symbol(F3, m, P(F3, "0,2,1"));
  CHECK(s == -1);
  std::mt19937_64 rng(2);
  for (auto F : {Field::make(3), Field::make(5)})
    for (int trial = 0; trial < 20; ++trial) {
      Poly g = monic_from_index(F, 3 + 2 * static_cast<int>(rng() % 2), rng() % 243);
      if (!is_squarefree(F, g)) continue;
      CHECK(dirichlet_lpoly(F, g).lpoly_affine == hyperelliptic_lpoly(F, g).lpoly);
    }
  // even degree: affine L = curve L times the removed Euler factor at infinity
  for (auto F : {Field::make(3), Field::make(5)})
    for (auto& g : squarefree_monic_polys(F, 4)) {
      CurveZeta z = hyperelliptic_lpoly(F, g);
      CHECK(dirichlet_lpoly(F, g).lpoly_affine == z.lpoly * IntPoly{1, -1});
      Poly tw = scale(F, g, F.nonsquare());
      CHECK(character_lpoly(F, tw) == hyperelliptic_lpoly(F, tw).lpoly * IntPoly{1, 1});
    }
}

TEST_CASE("residues and zeta values") {
  Field F3 = Field::make(3);
  CurveZeta r = rational_curve_zeta(F3);
  CHECK(residue_at_1(r) == Rat(3, 2));
  CHECK(zeta_value(r) == Rat(27, 16));
  CHECK(residue_affine(r) == 1);
  CurveZeta z = hyperelliptic_lpoly(F3, P(F3, "0,2,0,1"));
  CHECK(residue_at_1(z) == 2);
  CHECK(zeta_value(z) > 0);
  // independent evaluation orders
  CHECK(residue_at_1(z) == pole_coefficient(z.zeta(), Rat(1, 3)));
  Rat u(1, 9);
  Rat direct = 0, pw = 1;
  for (auto& c : z.lpoly.coeffs()) {
    direct += Rat(c) * pw;
    pw *= u;
  }
  direct /= (1 - u) * (1 - 3 * u);
  CHECK(zeta_value(z) == direct);
  CHECK(zeta_value(z) == z.zeta().eval(u));
  // Euler product over places of degree <= 12
  for (const CurveZeta* zz : {&r, &z}) {
    double prod = 1;
    bool rational = zz->genus == 0;
    Poly D = P(F3, "0,2,0,1");
    prod *= 1.0 / (1.0 - 1.0 / 9.0);  // infinity, degree 1
    for (int d = 1; d <= 12; ++d)
      for (const Poly& p : irreducibles(F3, d)) {
        double t = std::pow(9.0, -d);
        int chi = rational ? 2 : legendre_irreducible(F3, D, p);
        if (chi == 2)
          prod /= 1 - t;
        else if (chi == 1)
          prod /= (1 - t) * (1 - t);
        else if (chi == -1)
          prod /= 1 - t * t;
        else
          prod /= 1 - t;
      }
    CHECK(std::abs(prod - zeta_value(*zz).get_d()) < 1e-6);
  }
}

TEST_CASE("class numbers") {
  Field F3 = Field::make(3);
  CHECK(class_number(rational_curve_zeta(F3)) == 1);
  CHECK(within_class_number_bound(4, 3, 1));
  CHECK(within_class_number_bound(7, 3, 1));
  CHECK_FALSE(within_class_number_bound(8, 3, 1));  // (1+sqrt3)^2 = 7.46
  for (int deg : {3, 5})
    for (auto& g : squarefree_monic_polys(F3, deg)) {
      CurveZeta z = hyperelliptic_lpoly(F3, g);
      Int h = class_number(z);
      int w = omega(F3, g);
      CHECK(h % (Int(1) << (w - 1)) == 0);
    }
}

TEST_CASE("zeta of K counts effective divisors") {
  Field F3 = Field::make(3);
  for (int deg : {1, 3})
    for (auto& g : squarefree_monic_polys(F3, deg)) {
      CurveZeta z = hyperelliptic_lpoly(F3, g);
      auto series = (zeta_rational_base(F3) * RationalFn::polynomial(dirichlet_lpoly(F3, g).lpoly_affine)).series(6);
      auto counts = divisor_counts(F3, g, 6);
      for (int k = 0; k <= 6; ++k) CHECK(series[static_cast<std::size_t>(k)] == Rat(counts[static_cast<std::size_t>(k)]));
      CHECK(z.zeta().series(6) == series);
    }
}

TEST_CASE("series coefficients") {
  RationalFn geo(IntPoly{1}, IntPoly{1, -5});
  auto s = geo.series(5);
  for (int k = 0; k <= 5; ++k) CHECK(s[static_cast<std::size_t>(k)] == Rat(ipow(5, k)));
  RationalFn f(IntPoly{1, 0, -3}, IntPoly{1, -3});
  auto t = series_coefficients(f, 6);
  for (int n = 2; n <= 6; ++n) CHECK(t[static_cast<std::size_t>(n)] == Rat(ipow(3, n) - ipow(3, n - 1)));
  // random rational functions against O(N^2) long division of power series
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Int> n(5), d(4);
    for (auto& x : n) x = static_cast<long>(rng() % 11) - 5;
    for (auto& x : d) x = static_cast<long>(rng() % 11) - 5;
    d[0] = (rng() % 2) ? 1 : -2;
    RationalFn r{IntPoly(n), IntPoly(d)};
    const int N = 10;
    std::vector<Rat> q(N + 1, Rat(0)), rem(N + 1, Rat(0));
    for (int i = 0; i < 5; ++i) rem[static_cast<std::size_t>(i)] = Rat(n[static_cast<std::size_t>(i)]);
    for (int i = 0; i <= N; ++i) {
      q[static_cast<std::size_t>(i)] = rem[static_cast<std::size_t>(i)] / Rat(d[0]);
      for (int j = 0; j < 4 && i + j <= N; ++j)
        rem[static_cast<std::size_t>(i + j)] -= q[static_cast<std::size_t>(i)] * Rat(d[static_cast<std::size_t>(j)]);
    }
    CHECK(r.series(N) == q);
  }
}

TEST_CASE("rational function reduction") {
  RationalFn a(IntPoly{1, -1} * IntPoly{2, 3}, IntPoly{1, -1} * IntPoly{1, 1});
  CHECK(a.num() == IntPoly{2, 3});
  CHECK(a.den() == IntPoly{1, 1});
  CHECK((a - a).num().is_zero());
  CHECK(pole_coefficient(RationalFn(IntPoly{1}, IntPoly{1, -3}), Rat(1, 3)) == 1);
  CHECK_THROWS_AS(RationalFn(IntPoly{1}, IntPoly{0, 1}), UsageError);
}
