#include <doctest.h>

#include <random>
#include <set>

#include "ffc/enumerate.hpp"
#include "ffc/factor.hpp"
#include "ffc/residue.hpp"

using namespace ffc;

namespace {

Poly P(const Field& F, const std::string& s) { return parse_poly(F, s); }

Poly random_poly(const Field& F, int deg, std::mt19937_64& rng, bool make_monic = false) {
  std::vector<Elem> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = Elem{static_cast<std::uint32_t>(rng() % F.q())};
  if (make_monic || c.back().v == 0) c.back() = F.one();
  return Poly(std::move(c));
}

// Naive arithmetic on coordinate vectors for F_{p^e} = F_p[z]/(mod).
std::vector<std::uint32_t> naive_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                     const std::vector<std::uint32_t>& mod, std::uint32_t p) {
  std::size_t e = a.size();
  std::vector<long> prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) prod[i + j] += long(a[i]) * long(b[j]);
  for (std::size_t k = 2 * e - 1; k >= e; --k) {
    long c = prod[k] % long(p);
    prod[k] = 0;
    for (std::size_t i = 0; i < e; ++i) prod[k - e + i] -= c * long(mod[i]);
  }
  std::vector<std::uint32_t> out(e);
  for (std::size_t i = 0; i < e; ++i) out[i] = static_cast<std::uint32_t>(((prod[i] % long(p)) + long(p)) % long(p));
  return out;
}

// Symbol by its definition: factor m, evaluate each Legendre symbol by Euler's
// criterion (for linear factors: chi of g at the root).
int jacobi_by_factoring(const Field& F, const Poly& m, const Poly& g) {
  int r = 1;
  for (auto& [p, k] : factor(F, m).factors) {
    int l;
    if (p.degree() == 1) {
      Elem root = F.neg(p.coeff(0));
      l = F.chi(eval(F, g, root));
    } else {
      l = legendre_irreducible(F, g, p);
    }
    for (int i = 0; i < k; ++i) r *= l;
  }
  return r;
}

}  // namespace

TEST_CASE("field construction") {
  Field f3 = Field::make(3);
  CHECK(f3.q() == 3);
  Field f9 = Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 1});
  CHECK(f9.q() == 9);
  CHECK(field_header(f9) == "q=9;mod=1,0,1");
  // z^2+1 has no root in F_3
  for (std::uint32_t a = 0; a < 3; ++a) CHECK((a * a + 1) % 3 != 0);
  CHECK_THROWS_AS(Field::make(2), UsageError);
  CHECK_THROWS_AS(Field::make(9), UsageError);
  CHECK_THROWS_AS(Field::make(3, 2, std::vector<std::uint32_t>{2, 0, 1}), UsageError);  // z^2-1
  CHECK_THROWS_AS(Field::make(3, 5), UsageError);
  CHECK(Field::default_modulus(3, 2) == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(parse_field_header("q=25").q() == 25);
  CHECK(parse_field_header("q=9;mod=1,0,1") == f9);
  CHECK_THROWS_AS(parse_field_header("q=12"), UsageError);
}

TEST_CASE("field arithmetic agrees with naive coordinate arithmetic") {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}, {7, 2}}) {
    Field F = Field::make(p, e);
    const auto& mod = F.modulus();
    for (std::uint32_t a = 0; a < F.q(); ++a) {
      auto ca = F.coords(Elem{a});
      CHECK(F.from_coords(ca) == Elem{a});
      for (std::uint32_t b = 0; b < F.q(); ++b) {
        auto cb = F.coords(Elem{b});
        std::vector<std::uint32_t> sum(e);
        for (unsigned i = 0; i < e; ++i) sum[i] = (ca[i] + cb[i]) % p;
        REQUIRE(F.add(Elem{a}, Elem{b}) == F.from_coords(sum));
        std::vector<std::uint32_t> prod = e == 1 ? std::vector<std::uint32_t>{ca[0] * cb[0] % p}
                                                 : naive_mul(ca, cb, std::vector<std::uint32_t>(mod.begin(), mod.end() - 1), p);
        REQUIRE(F.mul(Elem{a}, Elem{b}) == F.from_coords(prod));
      }
      if (a != 0) CHECK(F.mul(Elem{a}, F.inv(Elem{a})) == F.one());
      // chi by Euler's criterion
      if (a != 0) {
        Elem t = F.pow(Elem{a}, (F.q() - 1) / 2);
        CHECK((t == F.one() ? 1 : -1) == F.chi(Elem{a}));
      }
      auto s = F.sqrt(Elem{a});
      CHECK(s.has_value() == F.is_square(Elem{a}));
      if (s) CHECK(F.mul(*s, *s) == Elem{a});
    }
    CHECK_FALSE(F.is_square(F.nonsquare()));
  }
}

TEST_CASE("poly_factor") {
  Field F3 = Field::make(3), F5 = Field::make(5);
  auto f = factor(F3, P(F3, "0,2,1"));  // x^2 - x
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == P(F3, "0,1"));
  CHECK(f.factors[1].first == P(F3, "2,1"));
  CHECK(is_irreducible(F3, P(F3, "1,0,1")));
  for (std::uint32_t a = 0; a < 3; ++a) CHECK(eval(F3, P(F3, "1,0,1"), Elem{a}).v != 0);
  auto g = factor(F5, P(F5, "0,0,0,0,1"));
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors[0].second == 4);
  CHECK_THROWS_AS(factor(F3, Poly()), UsageError);

  std::mt19937_64 rng(7);
  for (auto F : {Field::make(3), Field::make(5), Field::make(3, 2), Field::make(7)}) {
    for (int trial = 0; trial < 60; ++trial) {
      int deg = 1 + static_cast<int>(rng() % 12);
      Poly a = random_poly(F, deg, rng);
      if (trial % 3 == 0) a = mul(F, a, mul(F, random_poly(F, 2, rng), random_poly(F, 2, rng)));
      if (trial % 5 == 0) a = pow(F, a, F.p());
      auto fac = factor(F, a);
      CHECK(expand(F, fac) == a);
      std::set<Poly> seen;
      for (auto& [p, m] : fac.factors) {
        CHECK(p.is_monic());
        CHECK(is_irreducible(F, p));
        CHECK(seen.insert(p).second);
      }
    }
  }
}

TEST_CASE("is_squarefree matches factor multiplicities exhaustively") {
  Field F = Field::make(3);
  for (int n = 0; n <= 5; ++n) {
    MonicStream s(F, n);
    Poly f;
    while (s.next(f)) {
      bool all_one = true;
      for (auto& [p, m] : factor(F, f).factors) all_one = all_one && m == 1;
      REQUIRE(is_squarefree(F, f) == all_one);
    }
  }
  CHECK(is_squarefree(F, P(F, "0,2,1")));
  CHECK_FALSE(is_squarefree(F, P(F, "0,0,1")));
  Field F5 = Field::make(5);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Poly f = random_poly(F5, 8, rng);
    if (i % 2) f = mul(F5, f, pow(F5, random_poly(F5, 1, rng), 2));
    bool all_one = true;
    for (auto& [p, m] : factor(F5, f).factors) all_one = all_one && m == 1;
    CHECK(is_squarefree(F5, f) == all_one);
  }
}

TEST_CASE("enumeration") {
  Field F3 = Field::make(3), F5 = Field::make(5);
  auto lin = monic_polys(F3, 1);
  REQUIRE(lin.size() == 3);
  CHECK(lin[0] == P(F3, "0,1"));
  CHECK(lin[1] == P(F3, "1,1"));
  CHECK(lin[2] == P(F3, "2,1"));
  CHECK(monic_polys(F3, 2).size() == 9);
  auto cubics = monic_polys(F5, 3);
  CHECK(std::set<Poly>(cubics.begin(), cubics.end()).size() == 125);
  CHECK(squarefree_monic_polys(F3, 2).size() == 6);
  CHECK(squarefree_monic_polys(F3, 1).size() == 3);
  CHECK(squarefree_monic_polys(F5, 4).size() == 500);
  for (auto F : {F3, F5, Field::make(3, 2)})
    for (int n = 2; n <= 4; ++n)
      CHECK(squarefree_monic_polys(F, n).size() == monic_count(F, n) - monic_count(F, n - 1));
  // partitioned streams cover the range exactly once
  MonicStream a(F3, 3, 0, 10), b(F3, 3, 10, 27);
  std::set<Poly> all;
  Poly f;
  while (a.next(f)) all.insert(f);
  while (b.next(f)) all.insert(f);
  CHECK(all.size() == 27);
  a.reset();
  REQUIRE(a.next(f));
  CHECK(f == monic_from_index(F3, 3, 0));
  CHECK(monic_index(F3, monic_from_index(F3, 3, 17)) == 17);
}

TEST_CASE("count_irreducible") {
  CHECK(count_irreducible(3, 1) == 3);
  CHECK(count_irreducible(3, 2) == 3);
  CHECK(count_irreducible(5, 3) == 40);
  for (auto F : {Field::make(3), Field::make(5), Field::make(3, 2)})
    for (int d = 1; d <= 4; ++d) CHECK(count_irreducible(F.q(), d) == mpz_class(irreducibles(F, d).size()));
  for (std::uint64_t q : {3u, 5u})
    for (int n = 1; n <= 12; ++n) {
      mpz_class sum = 0, qn;
      for (int d = 1; d <= n; ++d)
        if (n % d == 0) sum += d * count_irreducible(q, d);
      mpz_ui_pow_ui(qn.get_mpz_t(), q, static_cast<unsigned long>(n));
      CHECK(sum == qn);
    }
}

TEST_CASE("jacobi_symbol") {
  Field F3 = Field::make(3);
  CHECK(jacobi_symbol(F3, P(F3, "1,1"), P(F3, "0,1")) == -1);
  CHECK(jacobi_by_factoring(F3, P(F3, "1,1"), P(F3, "0,1")) == -1);
  CHECK(jacobi_symbol(F3, P(F3, "0,1,1"), P(F3, "0,1")) == 0);
  CHECK_THROWS_AS(jacobi_symbol(F3, P(F3, "1,1"), P(F3, "0,0,1")), UsageError);

  std::mt19937_64 rng(3);
  for (auto F : {Field::make(3), Field::make(5), Field::make(7), Field::make(3, 2)}) {
    for (int trial = 0; trial < 100; ++trial) {
      Poly g;
      do {
        g = random_poly(F, 1 + static_cast<int>(rng() % 5), rng, true);
      } while (!is_squarefree(F, g));
      Poly m1 = random_poly(F, 1 + static_cast<int>(rng() % 6), rng);
      Poly m2 = random_poly(F, 1 + static_cast<int>(rng() % 6), rng);
      int j1 = jacobi_symbol(F, m1, g), j2 = jacobi_symbol(F, m2, g);
      CHECK(j1 == jacobi_by_factoring(F, m1, g));
      CHECK(jacobi_symbol(F, mul(F, m1, m2), g) == j1 * j2);
      CHECK((j1 == 0) == (gcd(F, m1, g).degree() > 0));
      // Dependence on m mod g only: for monic m when ((q-1)/2) deg g is even.
      if (((F.q() - 1) / 2) * static_cast<unsigned>(g.degree()) % 2 == 0) {
        Poly mm = monic(F, m1);
        Poly shifted = add(F, mm, mul(F, g, monic(F, random_poly(F, 1 + static_cast<int>(rng() % 3), rng))));
        shifted = monic(F, shifted);
        Poly r1 = rem(F, mm, g), r2 = rem(F, shifted, g);
        if (r1 == r2) CHECK(jacobi_symbol(F, mm, g) == jacobi_symbol(F, shifted, g));
      }
    }
  }
}

TEST_CASE("omega_bounded") {
  Field F3 = Field::make(3);
  Poly f = mul(F3, P(F3, "0,1"), mul(F3, P(F3, "1,1"), P(F3, "1,0,1")));
  CHECK(omega_bounded(F3, f, 1) == 2);
  CHECK(omega_bounded(F3, f, 2) == 3);
  CHECK(omega_bounded(F3, P(F3, "1,0,1"), 1) == 0);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    Poly g = random_poly(F3, 1 + static_cast<int>(rng() % 10), rng);
    CHECK(omega_bounded(F3, g, g.degree()) == static_cast<int>(factor(F3, g).factors.size()));
  }
}

TEST_CASE("polynomial helpers") {
  Field F = Field::make(5);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    Poly a = random_poly(F, 1 + static_cast<int>(rng() % 6), rng);
    Poly b = random_poly(F, 1 + static_cast<int>(rng() % 4), rng);
    auto [q, r] = divmod(F, a, b);
    CHECK(add(F, mul(F, q, b), r) == a);
    CHECK(r.degree() < b.degree());
    auto x = xgcd(F, a, b);
    CHECK(add(F, mul(F, x.s, a), mul(F, x.t, b)) == x.g);
    Poly s = mul(F, a, a);
    auto root = poly_sqrt(F, s);
    REQUIRE(root.has_value());
    CHECK(mul(F, *root, *root) == s);
    CHECK(parse_poly(F, to_text(a)) == a);
  }
  CHECK_FALSE(poly_sqrt(F, P(F, "2,0,1")).has_value());
  CHECK(to_text(P(F, "0,2,1")) == "0,2,1");
  CHECK_THROWS_AS(parse_poly(F, "0,7"), UsageError);
  CHECK_THROWS_AS(parse_poly(F, "0,,1"), UsageError);
}
