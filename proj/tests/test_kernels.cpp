#include <doctest.h>

#include <random>

#include "ffc/enumerate.hpp"
#include "ffc/factor.hpp"
#include "ffc/kernels.hpp"

using namespace ffc;

TEST_CASE("sieved irreducibles pass the Rabin test") {
  for (auto F : {Field::make(3), Field::make(5), Field::make(3, 2)})
    for (int d = 4; d <= 6 && monic_count(F, d) <= 200000; ++d) {
      const auto& irr = irreducibles(F, d);
      CHECK(mpz_class(irr.size()) == count_irreducible(F.q(), d));
      for (const Poly& p : irr) CHECK(is_irreducible(F, p));
    }
}

TEST_CASE("omega sieve agrees with per-polynomial factoring") {
  for (auto F : {Field::make(3), Field::make(5), Field::make(3, 2)}) {
    for (int n = 1; n <= 6 && monic_count(F, n) <= 20000; ++n) {
      OmegaSieve s = omega_sieve(F, n, n, Exec::Serial);
      OmegaSieve par = omega_sieve(F, n, n, Exec::Parallel);
      CHECK(s.squarefree == par.squarefree);
      CHECK(s.omega == par.omega);
      MonicStream st(F, n);
      Poly f;
      std::uint64_t i = 0;
      while (st.next(f)) {
        Factorization fac = factor(F, f);
        bool sf = true;
        for (auto& [p, e] : fac.factors) sf = sf && e == 1;
        CHECK(s.squarefree[i] == (sf ? 1 : 0));
        CHECK(s.omega[i] == fac.factors.size());
        ++i;
      }
    }
  }
}

TEST_CASE("histograms: reference, serial and parallel") {
  Field F3 = Field::make(3), F5 = Field::make(5);
  for (int n = 1; n <= 9; ++n)
    for (int T : {1, 2, n}) {
      auto ref = omega_histogram_reference(F3, n, T);
      CHECK(omega_histogram(F3, n, T, Exec::Serial) == ref);
      CHECK(omega_histogram(F3, n, T, Exec::Parallel) == ref);
    }
  for (int n = 1; n <= 6; ++n) {
    auto ref = omega_histogram_reference(F5, n, n);
    CHECK(omega_histogram(F5, n, n) == ref);
  }
}

TEST_CASE("square-free counts") {
  for (auto F : {Field::make(3), Field::make(5), Field::make(7), Field::make(3, 2)})
    for (int n = 0; n <= 7 && monic_count(F, n) <= 1000000; ++n) {
      std::uint64_t expect = n <= 1 ? monic_count(F, n) : monic_count(F, n) - monic_count(F, n - 1);
      CHECK(squarefree_count(F, n) == expect);
      CHECK(squarefree_count(F, n, Exec::Serial) == expect);
      if (monic_count(F, n) <= 50000) CHECK(squarefree_count_reference(F, n) == expect);
    }
}

TEST_CASE("character sums") {
  std::mt19937_64 rng(5);
  for (auto F : {Field::make(5), Field::make(3, 3), Field::make(7, 2)})
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Elem> c(4);
      for (auto& x : c) x = Elem{static_cast<std::uint32_t>(rng() % F.q())};
      c.back() = F.one();
      Poly D(c);
      std::int64_t naive = 0;
      for (std::uint32_t x = 0; x < F.q(); ++x) naive += F.chi(eval(F, D, Elem{x}));
      CHECK(character_sum(F, D, Exec::Serial) == naive);
      CHECK(character_sum(F, D, Exec::Parallel) == naive);
    }
}

TEST_CASE("exhaustion guard") {
  Field F3 = Field::make(3);
  if (!guard_override()) CHECK_THROWS_AS(omega_sieve(F3, 15, 15), GuardError);
}
