#include "ffc/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "ffc/arithstat.hpp"
#include "ffc/enumerate.hpp"
#include "ffc/quadcensus.hpp"
#include "ffc/quartcensus.hpp"

namespace ffc {

namespace {

Int ipow(std::uint64_t q, int k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, static_cast<unsigned long>(k));
  return r;
}

std::string num(double x) { return format_value(Value{x}); }

// Random square-free polynomial of degree d with a random nonzero leading coefficient.
Poly random_squarefree(const Field& F, int d, std::mt19937_64& rng) {
  for (;;) {
    Poly g = monic_from_index(F, d, rng() % monic_count(F, d));
    if (!is_squarefree(F, g)) continue;
    return scale(F, g, Elem{static_cast<std::uint32_t>(1 + rng() % (F.q() - 1))});
  }
}

// b_(2g-i) = q^(g-i) b_i for all i
bool functional_equation(const CurveZeta& z) {
  const int g = z.genus;
  if (z.lpoly.degree() != 2 * g) return false;
  for (int i = 0; i <= g; ++i)
    if (z.lpoly[2 * g - i] != ipow(z.q, g - i) * z.lpoly[i]) return false;
  return true;
}

Criterion criterion1() {
  Criterion c{1, "quadratic census: series = brute force = closed form", true, ""};
  int cells = 0;
  for (std::uint32_t q : {3u, 5u, 7u}) {
    Field F = Field::make(q);
    auto series = quad_count_series_all(rational_base(F), 8);
    for (int N = 1; N <= 8; ++N) {
      const Int& s = series[static_cast<std::size_t>(N)];
      bool ok = s == quad_count_bruteforce(F, N);
      if (N >= 2) ok = ok && s == 2 * (ipow(q, N) - ipow(q, N - 1));
      if (!ok) {
        c.pass = false;
        c.detail += "mismatch at q=" + std::to_string(q) + " N=" + std::to_string(N) + "; ";
      }
      ++cells;
    }
  }
  if (c.pass) c.detail = std::to_string(cells) + " cells equal";
  return c;
}

Criterion criterion2(Report& r) {
  Field F3 = Field::make(3);
  CurveZeta z = rational_curve_zeta(F3);
  const Rat curve = quad_main_term(z, 2, MainTermVariant::CurveFactor2);
  const Rat affine = quad_main_term(z, 2, MainTermVariant::AffineFactor2);
  const Int brute = quad_count_bruteforce(F3, 2);
  r.discrepancies.push_back({"quadratic main term 2 q^N Res/zeta(2) with the complete-curve zeta, q = 3, N = 2",
                             to_string(curve), to_string(affine),
                             "affine (ring) zeta gives 2(q^N - q^(N-1)); exhaustive count is " + brute.get_str()});
  Criterion c{2, "convention discrepancy documented", curve == 16 && affine == 12 && brute == 12, ""};
  c.detail = "curve " + to_string(curve) + ", affine " + to_string(affine) + ", brute force " + brute.get_str();
  return c;
}

// Criteria 3 and 4 share the generated curves.
std::pair<Criterion, Criterion> criteria3_4(std::uint64_t seed) {
  Criterion c3{3, "functional equation and RH for hyperelliptic L-polynomials", true, ""};
  Criterion c4{4, "class-number bound and 2^(omega-1) | h", true, ""};
  std::mt19937_64 rng(seed);
  int curves = 0;
  double worst = 0;
  for (std::uint32_t q : {3u, 5u, 7u}) {
    Field F = Field::make(q);
    for (int d = 3; d <= 7; ++d)
      for (int k = 0; k < 4; ++k) {
        Poly D = random_squarefree(F, d, rng);
        CurveZeta z = hyperelliptic_lpoly(F, D);
        RhCheck rh = rh_check(z);
        worst = std::max(worst, rh.max_deviation);
        ++curves;
        if (!functional_equation(z) || rh.max_deviation >= 1e-6) {
          c3.pass = false;
          c3.detail += "fails for q=" + std::to_string(q) + " D=" + to_text(D) + "; ";
        }
        if (!within_class_number_bound(class_number(z), q, z.genus)) {
          c4.pass = false;
          c4.detail += "h above (1+sqrt q)^2g for D=" + to_text(D) + "; ";
        }
      }
  }
  if (curves < 50) c3.pass = false;
  if (c3.pass) c3.detail = std::to_string(curves) + " curves, max root deviation " + num(worst);
  Field F3 = Field::make(3);
  int fields = 0;
  for (int d : {3, 5})
    for (const Poly& g : squarefree_monic_polys(F3, d)) {
      CurveZeta z = hyperelliptic_lpoly(F3, g);
      const Int h = class_number(z);
      const int w = static_cast<int>(factor(F3, g).factors.size());
      ++fields;
      if (h % (Int(1) << static_cast<mp_bitcnt_t>(w - 1)) != 0 || !within_class_number_bound(h, 3, z.genus)) {
        c4.pass = false;
        c4.detail += "g=" + to_text(g) + " h=" + h.get_str() + "; ";
      }
    }
  if (c4.pass) c4.detail = std::to_string(fields) + " odd-degree fields at q = 3 plus " + std::to_string(curves) + " generated curves";
  return {c3, c4};
}

Criterion criterion5() {
  Criterion c{5, "quadratic census envelope over hyperelliptic bases", true, ""};
  int checks = 0;
  double worst = 0;
  for (std::uint32_t q : {3u, 5u}) {
    Field F = Field::make(q);
    std::vector<QuadBase> bases{rational_base(F)};
    for (int d : {3, 5}) {
      auto fields = quadratic_fields(F, d);
      for (std::size_t i = 0; i < fields.size() && i < 4; ++i) bases.push_back(quad_base(fields[i]));
    }
    for (const QuadBase& b : bases) {
      const CurveZeta& z = *b.curve;
      auto counts = quad_count_series_all(b, 10);
      for (int n = 1; n <= 5; ++n) {
        const int N = 2 * n;
        const Rat main = quad_main_term(z, N, MainTermVariant::AffineFactor2);
        const double gap = std::abs(Rat(Rat(counts[static_cast<std::size_t>(N)]) - main).get_d());
        const double env = quad_error_envelope(z, N, EnvelopeVariant::R12).value;
        const double uni = 4 * quad_uniform_bound(z, b.cl2(), N).value;
        worst = std::max(worst, gap / env);
        ++checks;
        if (gap > env || counts[static_cast<std::size_t>(N)].get_d() > uni) {
          c.pass = false;
          c.detail += b.description + " q=" + std::to_string(q) + " n=" + std::to_string(n) + "; ";
        }
      }
    }
  }
  if (c.pass) c.detail = std::to_string(checks) + " cells, max gap/envelope " + num(worst) + " (C = 1; uniform bound C = 4)";
  return c;
}

Criterion criterion6(Report& r) {
  Criterion c{6, "tower identity and exhaustive classification, q = 3", true, ""};
  Field F3 = Field::make(3);
  auto rows = tower_census(F3, 7);
  Table t{"towers", {{"q"}, {"n"}, {"tower_sum"}, {"c4"}, {"v4"}, {"d4"}, {"parity_ok"}, {"oracle_certified"}}, {}};
  for (const TowerRow& row : rows) {
    t.add_row({3LL, static_cast<long long>(row.N), row.tower_sum, row.c4, row.v4, row.d4, row.parity_ok, row.oracle_certified});
    const bool ok = row.parity_ok && row.oracle_certified && row.oracle_ok && row.tower_sum == 2 * row.d4 + row.c4 + 3 * row.v4;
    if (!ok) {
      c.pass = false;
      c.detail += "N=" + std::to_string(row.N) + "; ";
    }
  }
  r.tables.push_back(std::move(t));
  if (c.pass) c.detail = "N = 0..7, d4(7) = " + rows.back().d4.get_str();
  return c;
}

Criterion criterion7() {
  Criterion c{7, "classifier agrees with the splitting oracle", true, ""};
  Field F3 = Field::make(3);
  int certified = 0, disagree = 0;
  for (int d = 1; d <= 3; ++d) {
    auto fields = quadratic_fields(F3, d);
    for (std::size_t k = 0; k < fields.size(); k += 3) {
      const TowerField& K = fields[k];
      std::map<QuarticLabel, int> taken;
      for (const KummerClass& kc : kummer_census(K, 2).classes) {
        if (kc.trivial) continue;
        const QuarticLabel label = classify_tower(K, kc.alpha);
        if (++taken[label] > 2) continue;
        SplittingOracle o = splitting_oracle(K, kc.alpha);
        if (!o.certified) continue;
        ++certified;
        if (o.label != label) ++disagree;
      }
    }
  }
  c.pass = certified >= 30 && disagree == 0;
  c.detail = std::to_string(certified) + " certified towers, " + std::to_string(disagree) + " disagreements";
  return c;
}

Criterion criterion8(Report& r) {
  Criterion c{8, "factor statistics within tolerance; Chebyshev", true, ""};
  Field F3 = Field::make(3);
  Table st{"stats",
           {{"q"}, {"n"}, {"T"}, {"mu_exact"}, {"mu_formula", "formula"}, {"sigma2_exact"}, {"sigma2_formula", "formula"},
            {"err_mu"}, {"err_sigma2"}, {"mu_tolerance", "envelope"}, {"sigma2_tolerance", "envelope"}},
           {}};
  Table ch{"cheby", {{"q"}, {"n"}, {"T"}, {"k"}, {"bound"}, {"observed"}}, {}};
  double worst = 0;
  int worst_n = 0;
  for (int n : {8, 10, 12, 14}) {
    const int T = n / 2;
    FactorStats s = factor_stats_exact(F3, n, T);
    st.add_row({3LL, static_cast<long long>(n), static_cast<long long>(T), s.mu, s.formula_mu, s.sigma2, s.formula_sigma2, s.err_mu,
                s.err_sigma2, s.mu_envelope, s.sigma2_envelope});
    if (s.err_mu.get_d() > s.mu_envelope) {
      c.pass = false;
      c.detail += "mu n=" + std::to_string(n) + "; ";
    }
    if (s.err_sigma2.get_d() / s.sigma2_envelope > worst) {
      worst = s.err_sigma2.get_d() / s.sigma2_envelope;
      worst_n = n;
    }
    if (s.err_sigma2.get_d() > s.sigma2_envelope) {
      c.pass = false;
      c.detail += "sigma2 n=" + std::to_string(n) + " err " + num(s.err_sigma2.get_d()) + " > " + num(s.sigma2_envelope) + "; ";
    }
    for (double k2 : {1.0, 4.0, std::log(n / 2.0)}) {
      ChebyshevResult cr = chebyshev_check(s, k2);
      ch.add_row({3LL, static_cast<long long>(n), static_cast<long long>(T), cr.k, cr.bound, cr.observed});
      if (!cr.holds) {
        c.pass = false;
        c.detail += "Chebyshev n=" + std::to_string(n) + "; ";
      }
    }
  }
  if (!c.pass)
    r.discrepancies.push_back({"variance of omega_T over P_n: error O(q^(2(T-n+1))), q = 3, T = n/2",
                               "10 q^(2(T-n+1))", "err_sigma2 up to " + num(worst) + " x tolerance at n = " + std::to_string(worst_n),
                               "the exhaustive variance differs from the independent-Bernoulli sum by a covariance term "
                               "that decays far more slowly than the stated error shape"});
  r.tables.push_back(std::move(st));
  r.tables.push_back(std::move(ch));
  if (c.pass) c.detail = "n = 8, 10, 12, 14";
  return c;
}

Criterion criterion9() {
  const double ratio = mean_asymptotic_check(5, 12);
  return {9, "mean trend mu_formula / log T at q = 5, T = 12", ratio >= 0.85 && ratio <= 1.15, "ratio " + num(ratio)};
}

Criterion criterion10(Report& r, std::uint64_t seed) {
  Criterion c{10, "base change exponent certifies full splitting", true, ""};
  Field F3 = Field::make(3);
  std::mt19937_64 rng(seed + 10);
  Table t{"basechange", {{"q"}, {"g"}, {"m"}, {"torsion_bound"}, {"certified"}}, {}};
  for (int i = 0; i < 50; ++i) {
    const int d = 1 + static_cast<int>(rng() % 7);
    Poly g = random_squarefree(F3, d, rng);
    BaseChangeResult b = base_change_exponent(F3, g);
    t.add_row({3LL, to_text(g), static_cast<long long>(b.m), b.torsion_bound, b.certified});
    if (!b.certified) c.pass = false;
  }
  r.tables.push_back(std::move(t));
  c.detail = c.pass ? "50 polynomials certified" : "uncertified splitting";
  return c;
}

Criterion criterion11() {
  RatioBound a = ratio_lower_bound(9, 1, 4);
  RatioBound b = ratio_lower_bound(9, 2, 8);
  RatioBound c25 = ratio_lower_bound(25, 1, 2);
  const bool ok = a.exact && *a.exact == Rat(16, 9) && b.exact && *b.exact == Rat(512, 729) && c25.exact &&
                  *c25.exact == Rat(32, 25);
  return {11, "ratio bound reproduces hand evaluations", ok,
          "g=1,q=9,cl2=4: " + (a.exact ? to_string(*a.exact) : std::string("?")) +
              "; g=2,q=9,cl2=8: " + (b.exact ? to_string(*b.exact) : std::string("?"))};
}

void convention_discrepancies(Report& r) {
  Field F3 = Field::make(3);
  CurveZeta z = rational_curve_zeta(F3);
  r.discrepancies.push_back({"quadratic main term without the factor 2 from the unit twist, q = 3, N = 2",
                             to_string(quad_main_term(z, 2, MainTermVariant::AffineLiteral)),
                             to_string(quad_main_term(z, 2, MainTermVariant::AffineFactor2)),
                             "the count includes both twists u in {1, eps}"});
  r.discrepancies.push_back({"tower discriminant D_F D_(L/F)^2 = D_L, exponents dF = 2, d_rel = 4",
                             std::to_string(disc_tower_variant_a(2, 4)), std::to_string(disc_tower(2, 4, 2)),
                             "standard tower formula D_L = D_F^[L:F] N(d_(L/F)); agrees with Riemann-Hurwitz"});
  r.discrepancies.push_back({"tower discriminant D_(L/F) D_F^4 = D_L, exponents dF = 2, d_rel = 4",
                             std::to_string(disc_tower_variant_b(2, 4)), std::to_string(disc_tower(2, 4, 2)),
                             "standard tower formula"});
  CurveZeta e = hyperelliptic_lpoly(F3, parse_poly(F3, "0,2,0,1"));
  r.discrepancies.push_back({"#Cl[2] = 2^omega(f) for y^2 = x^3 - x over F_3", "8", "2^(omega-1) = 4, h = " + class_number(e).get_str(),
                             "genus theory gives 2^(omega-1) for odd degree; 2^omega does not divide h"});
  D4Constant fin = d4_constant_finite(F3, 2, 0);
  D4Constant lit = d4_constant_literal(F3, 1, false);
  D4Constant litK = d4_constant_literal(F3, 1, true);
  r.discrepancies.push_back({"D4 leading constant with zeta_F(2), j from -1, J = 1, q = 3", num(lit.partial.get_d()),
                             num(fin.partial.get_d()),
                             "computed value is the finite-discriminant constant (J = 2, even N); the two normalize D_L differently"});
  r.discrepancies.push_back({"D4 leading constant with zeta_K(2) in place of zeta_F(2), J = 1, q = 3", num(litK.partial.get_d()),
                             num(lit.partial.get_d()), "literal zeta_F(2) form for comparison"});
}

}  // namespace

Report run_verify(const VerifyOptions& opt) {
  Report r;
  r.command = "verify";
  r.config["seed"] = std::to_string(opt.seed);
  using clock = std::chrono::steady_clock;
  auto t = clock::now();
  auto record = [&](Criterion c) {
    const double s = std::chrono::duration<double>(clock::now() - t).count();
    if (opt.progress) opt.progress(c, s);
    r.criteria.push_back(std::move(c));
    t = clock::now();
  };
  record(criterion1());
  record(criterion2(r));
  auto [c3, c4] = criteria3_4(opt.seed);
  record(c3);
  record(c4);
  record(criterion5());
  record(criterion6(r));
  record(criterion7());
  record(criterion8(r));
  record(criterion9());
  record(criterion10(r, opt.seed));
  record(criterion11());
  convention_discrepancies(r);
  return r;
}

void add_determinism_criterion(Report& r, bool identical) {
  r.criteria.push_back({12, "two verify runs give byte-identical reports", identical, identical ? "identical" : "reports differ"});
}

}  // namespace ffc
