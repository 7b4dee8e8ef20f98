#include "ffc/arithstat.hpp"

#include <cmath>
#include <numeric>

#include "ffc/extension.hpp"
#include "ffc/factor.hpp"

namespace ffc {

namespace {

Int ipow(std::uint64_t q, int k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, static_cast<unsigned long>(k));
  return r;
}

}  // namespace

Rat formula_mu(std::uint64_t q, int T) {
  Rat s = 0;
  for (int d = 1; d <= T; ++d) s += Rat(count_irreducible(q, d), ipow(q, d) + 1);
  s.canonicalize();
  return s;
}

Rat formula_sigma2(std::uint64_t q, int T) {
  Rat s = 0;
  for (int d = 1; d <= T; ++d) {
    Rat p(Int(1), ipow(q, d) + 1);
    p.canonicalize();
    s += Rat(count_irreducible(q, d)) * p * (1 - p);
  }
  return s;
}

FactorStats factor_stats_exact(const Field& F, int n, int T, Exec exec) {
  if (n < 1 || T < 0) throw UsageError("factor statistics need n >= 1 and T >= 0");
  FactorStats s;
  s.q = F.q();
  s.n = n;
  s.T = T;
  s.histogram = omega_histogram(F, n, T, exec);
  Int sum = 0, sum_sq = 0;
  s.size = 0;
  for (std::size_t k = 0; k < s.histogram.size(); ++k) {
    Int h(static_cast<unsigned long>(s.histogram[k]));
    s.size += h;
    sum += h * static_cast<unsigned long>(k);
    sum_sq += h * static_cast<unsigned long>(k * k);
  }
  s.mu = Rat(sum, s.size);
  s.mu.canonicalize();
  s.mean_square = Rat(sum_sq, s.size);
  s.mean_square.canonicalize();
  s.sigma2 = s.mean_square - s.mu * s.mu;
  s.formula_mu = formula_mu(s.q, T);
  s.formula_sigma2 = formula_sigma2(s.q, T);
  s.err_mu = abs(s.mu - s.formula_mu);
  s.err_sigma2 = abs(s.sigma2 - s.formula_sigma2);
  const double q = static_cast<double>(s.q);
  s.mu_envelope = 10 * std::pow(q, 2 * T - n + 1);
  s.sigma2_envelope = 10 * std::pow(q, 2 * (T - n + 1));
  return s;
}

ChebyshevResult chebyshev_check(const FactorStats& s, double k2) {
  if (!(k2 > 0)) throw UsageError("Chebyshev check needs k > 0");
  ChebyshevResult r;
  r.k = std::sqrt(k2);
  const Rat kk(k2);
  r.bound = 1 / kk;
  Int far = 0;
  const Rat threshold = kk * s.sigma2;
  for (std::size_t k = 0; k < s.histogram.size(); ++k) {
    Rat dev = Rat(static_cast<unsigned long>(k)) - s.mu;
    if (dev * dev >= threshold) far += static_cast<unsigned long>(s.histogram[k]);
  }
  r.observed = Rat(far, s.size);
  r.observed.canonicalize();
  r.holds = r.observed <= r.bound;
  return r;
}

RatioBound ratio_lower_bound(std::uint64_t q, int genus, const Int& cl2, double s4_multiplier) {
  if (genus < 1) throw UsageError("ratio bound needs genus >= 1");
  if (cl2 < 1) throw UsageError("ratio bound needs #Cl[2] >= 1");
  RatioBound r;
  r.genus = genus;
  r.q = q;
  r.cl2 = cl2;
  const double qd = static_cast<double>(q);
  const double w = 1 - 1 / std::sqrt(qd);
  r.value = cl2.get_d() * std::pow(w, 4 * genus - 2);
  const auto s = static_cast<std::uint64_t>(std::llround(std::sqrt(qd)));
  if (s * s == q) {
    Rat base(Int(static_cast<unsigned long>(s - 1)), Int(static_cast<unsigned long>(s)));
    Rat e = Rat(cl2);
    for (int i = 0; i < 4 * genus - 2; ++i) e *= base;
    e.canonicalize();
    r.exact = e;
  }
  r.genus_K = 2 * genus - 1;
  r.residue_lower = std::pow(w, 2 * r.genus_K);
  r.residue_upper = std::pow(1 + 1 / std::sqrt(qd), 2 * r.genus_K);
  r.s4_envelope = s4_multiplier * std::pow(qd, -4.0 * (2 * genus - 2)) * std::log(qd);
  return r;
}

BaseChangeResult base_change_exponent(const Field& F, const Poly& g) {
  if (g.degree() < 1 || !is_squarefree(F, g)) throw UsageError("base change needs a square-free nonconstant g");
  BaseChangeResult r;
  for (auto& [p, e] : factor(F, g).factors) {
    r.factor_degrees.push_back(p.degree());
    r.m = std::lcm(r.m, p.degree());
  }
  r.genus = (g.degree() - 1) / 2;
  r.torsion_bound = ipow(2, 2 * r.genus);
  const ConstantExtension& E = constant_extension(F, static_cast<unsigned>(r.m));
  r.certified = true;
  for (auto& [p, e] : factor(E.big, E.map(g)).factors) r.certified = r.certified && p.degree() == 1;
  return r;
}

ProportionReport hyperelliptic_proportion_experiment(const Field& F, int d, double beta, Exec exec) {
  if (d < 3) throw UsageError("proportion experiment needs d >= 3");
  ProportionReport r;
  r.d = d;
  r.genus = (d - 1) / 2;
  r.beta = beta;
  const double q = F.q();
  const double lg = std::log(static_cast<double>(r.genus));
  r.threshold = std::pow(r.genus, beta * std::log(2.0)) * std::pow(1 - 1 / std::sqrt(q), 4 * r.genus - 2);
  r.reference = r.genus >= 3 ? 1 - 1 / lg : 0;
  OmegaSieve s = omega_sieve(F, d, d, exec);
  // 2^(omega - 1) (1 - q^-1/2)^(4g - 2) >= threshold  <=>  omega - 1 >= beta log g
  const double need = beta * lg - 1e-12;
  for (std::size_t i = 0; i < s.squarefree.size(); ++i) {
    if (!s.squarefree[i]) continue;
    ++r.total;
    const int w = s.omega[i];
    if (w - 1 >= need) ++r.meeting;
    if (w >= need) ++r.meeting_wide;
  }
  r.proportion = static_cast<double>(r.meeting) / static_cast<double>(r.total);
  r.proportion_wide = static_cast<double>(r.meeting_wide) / static_cast<double>(r.total);
  return r;
}

double mean_asymptotic_check(std::uint64_t q, int T) {
  if (T < 2) throw UsageError("mean asymptotic check needs T >= 2");
  return formula_mu(q, T).get_d() / std::log(static_cast<double>(T));
}

}  // namespace ffc
