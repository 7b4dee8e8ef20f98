#ifndef FFC_ARITHSTAT_HPP
#define FFC_ARITHSTAT_HPP

// Ratio and base-change bounds, and exhaustive statistics of omega_T over
// P_n, the monic square-free polynomials of degree n.

#include <optional>
#include <vector>

#include "ffc/kernels.hpp"
#include "ffc/ratfn.hpp"
#include "ffc/zeta.hpp"

namespace ffc {

struct FactorStats {
  std::uint64_t q = 0;
  int n = 0, T = 0;
  Int size;                 // |P_n|
  std::vector<std::uint64_t> histogram;
  Rat mu, mean_square, sigma2;
  Rat formula_mu, formula_sigma2;
  Rat err_mu, err_sigma2;   // absolute differences
  double mu_envelope = 0;      // 10 q^(2T - n + 1)
  double sigma2_envelope = 0;  // 10 q^(2(T - n + 1))
};

FactorStats factor_stats_exact(const Field& F, int n, int T, Exec exec = Exec::Parallel);
/// sum_{d <= T} pi(d) / (q^d + 1)
Rat formula_mu(std::uint64_t q, int T);
/// sum_{d <= T} pi(d) / (q^d + 1) * (1 - 1 / (q^d + 1))
Rat formula_sigma2(std::uint64_t q, int T);

struct ChebyshevResult {
  double k = 0;
  Rat bound;     // 1 / k^2
  Rat observed;  // #{|omega - mu| >= k sigma} / |P_n|
  bool holds = false;
};

/// k^2 is taken as the exact value of the double k2.
ChebyshevResult chebyshev_check(const FactorStats& s, double k2);

struct RatioBound {
  int genus = 0;
  std::uint64_t q = 0;
  Int cl2;
  double value = 0;          // cl2 (1 - q^-1/2)^(4g - 2)
  std::optional<Rat> exact;  // when q is a perfect square
  int genus_K = 0;           // 2g - 1 for the unramified quadratic K
  double residue_lower = 0;  // (1 - q^-1/2)^(2 g_K)
  double residue_upper = 0;  // (1 + q^-1/2)^(2 g_K)
  double s4_envelope = 0;    // multiplier * q^(-4(2g - 2)) log q
};

RatioBound ratio_lower_bound(std::uint64_t q, int genus, const Int& cl2, double s4_multiplier = 1.0);
inline RatioBound ratio_lower_bound(const CurveZeta& z, const Int& cl2, double s4_multiplier = 1.0) {
  return ratio_lower_bound(z.q, z.genus, cl2, s4_multiplier);
}

struct BaseChangeResult {
  int m = 1;
  std::vector<int> factor_degrees;
  int genus = 0;
  Int torsion_bound;  // 2^(2g)
  bool certified = false;  // g splits into linear factors over F_(q^m)
};

BaseChangeResult base_change_exponent(const Field& F, const Poly& g);

struct ProportionReport {
  int d = 0, genus = 0;
  double beta = 0;
  std::uint64_t total = 0;
  std::uint64_t meeting = 0;        // with #Cl[2] = 2^(omega - 1)
  std::uint64_t meeting_wide = 0;   // with #Cl[2] = 2^omega
  double threshold = 0;             // g^(beta log 2) (1 - q^-1/2)^(4g - 2)
  double proportion = 0, proportion_wide = 0;
  double reference = 0;             // 1 - 1/log g (0 when g < 3)
};

ProportionReport hyperelliptic_proportion_experiment(const Field& F, int d, double beta, Exec exec = Exec::Parallel);

/// formula_mu(q, T) / log T
double mean_asymptotic_check(std::uint64_t q, int T);

}  // namespace ffc

#endif
