#include <doctest.h>

#include <cmath>

#include "ffc/quadcensus.hpp"

using namespace ffc;

TEST_CASE("rational base: series, brute force and closed form agree") {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    Field F = Field::make(q);
    QuadBase b = rational_base(F);
    auto series = quad_count_series_all(b, 8);
    CHECK(series[0] == 2);
    for (int N = 1; N <= 8; ++N) {
      CHECK(series[static_cast<std::size_t>(N)] == quad_count_bruteforce(F, N));
      CHECK(series[static_cast<std::size_t>(N)] == quad_count_closed_form(q, N));
      if (N <= 5) CHECK(series[static_cast<std::size_t>(N)] == quad_count_bruteforce_reference(F, N));
    }
  }
  Field F3 = Field::make(3), F5 = Field::make(5);
  CHECK(quad_count_series(rational_base(F3), 2) == 12);
  CHECK(quad_count_series(rational_base(F3), 1) == 6);
  CHECK(quad_count_bruteforce(F5, 3) == 200);
  CHECK(quad_count_bruteforce(F3, 2, Exec::Serial) == 12);
  Field F9 = Field::make(3, 2);
  for (int N = 1; N <= 4; ++N) CHECK(quad_count_series(rational_base(F9), N) == quad_count_bruteforce_reference(F9, N));
}

TEST_CASE("character list must have power-of-two length") {
  Field F3 = Field::make(3);
  QuadBase b = rational_base(F3);
  b.characters.push_back(b.characters.front());
  b.characters.push_back(b.characters.front());
  CHECK_THROWS_AS(quad_count_series(b, 2), UsageError);
}

TEST_CASE("main term variants") {
  Field F3 = Field::make(3);
  CurveZeta r = rational_curve_zeta(F3);
  CHECK(quad_main_term(r, 2, MainTermVariant::AffineFactor2) == 12);
  CHECK(quad_main_term(r, 2, MainTermVariant::CurveFactor2) == 16);
  CHECK(quad_main_term(r, 2, MainTermVariant::AffineLiteral) == 6);
  CHECK(quad_main_term(r, 2, MainTermVariant::CurveLiteral) == 8);
  for (int N = 2; N <= 8; ++N) {
    CHECK(quad_main_term(r, N, MainTermVariant::AffineFactor2) == Rat(quad_count_closed_form(3, N)));
    CHECK(quad_main_term_poles(rational_base(F3), N) == quad_main_term(r, N, MainTermVariant::AffineFactor2));
  }
  CurveZeta e = hyperelliptic_lpoly(F3, parse_poly(F3, "0,2,0,1"));
  // 2 q^3 L(1/3) / (L(1/9) / (1 - 1/3)) with L = 1 + 3u^2
  CHECK(quad_main_term(e, 3, MainTermVariant::AffineFactor2) == Rat(324, 7));
}

TEST_CASE("envelope constants") {
  CHECK(std::abs(envelope_A() - 2.5026503) < 1e-6);
  CHECK(std::abs(envelope_B(3) - 1.5495691) < 1e-6);
  CHECK(envelope_cq(3) < 5);
  for (std::uint64_t q : {5, 7, 9, 11, 13, 25, 49, 81}) CHECK(envelope_cq(q) < 4);
  CurveZeta r;
  r.q = 3;
  auto e = quad_error_envelope(r, 8, EnvelopeVariant::R12);
  CHECK(std::abs(e.value - 2 * (1 + 1 / std::sqrt(3.0)) * 81) < 1e-9);
  CHECK(std::abs(e.value - 255.5) < 0.1);
  // count at q^(2n) with n = 2 sits at N = 4: bound 3^5
  CHECK(quad_uniform_bound(r, 1, 4).value == doctest::Approx(243));
  for (int N = 0; N < 10; ++N) {
    CHECK(quad_uniform_bound(r, 1, N + 1).value > quad_uniform_bound(r, 1, N).value);
    CHECK(quad_error_envelope(r, N, EnvelopeVariant::R14).value > 0);
  }
}

TEST_CASE("census table over the rational base") {
  Field F3 = Field::make(3);
  auto t = quad_census(rational_base(F3), 8, [&](int N) { return quad_count_bruteforce(F3, N); });
  CHECK(t.rows.size() == 8);
  for (auto& [N, row] : t.rows) {
    CHECK(row.oracle_equal);
    CHECK(row.within_envelope);
    if (N >= 2) CHECK(Rat(row.count) == row.main_term);
    CHECK(Rat(row.count) <= Rat(row.uniform_bound));
  }
}
