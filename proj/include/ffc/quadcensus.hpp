#ifndef FFC_QUADCENSUS_HPP
#define FFC_QUADCENSUS_HPP

// Counting quadratic extensions L/F by the norm of the finite relative
// discriminant, q^N. Every count includes the unit twists; N = 0 carries the
// trivial class and the constant extension.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffc/ratfn.hpp"
#include "ffc/zeta.hpp"

namespace ffc {

/// Everything the generating series needs about a base field F with affine
/// ring O_F: the affine zeta, |O_F^* / O_F^*2|, and the L-functions (over
/// O_F) of the characters of Cl(O_F)/Cl(O_F)^2, trivial character first.
/// `curve` is present when the constant field is F_q; the main-term and
/// envelope evaluators need it.
struct QuadBase {
  std::string description;
  std::uint64_t q = 0;
  int genus = 0;
  RationalFn zeta_affine;
  std::optional<CurveZeta> curve;
  int unit_classes = 2;
  std::vector<RationalFn> characters;

  std::size_t cl2() const { return characters.size(); }
};

QuadBase rational_base(const Field& F);

/// Coefficient of u^N in U * sum_chi L_chi(u) / Z_aff(u^2).
Int quad_count_series(const QuadBase& base, int N);
std::vector<Int> quad_count_series_all(const QuadBase& base, int N_max);

/// F = F_q(t): pairs (a, u) with a monic square-free of degree N and u in
/// {1, eps}. The first reads square-freeness off the sieve; the reference
/// tests every u*a with a gcd.
Int quad_count_bruteforce(const Field& F, int N, Exec exec = Exec::Parallel);
Int quad_count_bruteforce_reference(const Field& F, int N);
/// 2(q^N - q^(N-1)) for N >= 2, 2q for N = 1, 2 for N = 0.
Int quad_count_closed_form(std::uint64_t q, int N);

enum class MainTermVariant { AffineFactor2, CurveFactor2, AffineLiteral, CurveLiteral };
std::string to_string(MainTermVariant v);

/// c * q^N * r / zeta(2) with c = 2 for the factor-2 variants and 1 for the
/// literal ones; r and zeta(2) from the affine or the curve zeta. Exact.
Rat quad_main_term(const CurveZeta& z, int N, MainTermVariant v);

/// Coefficients (c+, c-) of the simple poles of the census series at
/// u = 1/q and u = -1/q (zero where there is no pole).
std::pair<Rat, Rat> census_poles(const QuadBase& base);

/// Sum of the pole contributions of the full series at u = 1/q and u = -1/q.
/// Agrees with the AffineFactor2 variant when infinity is ramified in F.
Rat quad_main_term_poles(const QuadBase& base, int N);

enum class EnvelopeVariant { R12, R14, Thm12, Uniform };
std::string to_string(EnvelopeVariant v);

struct ErrorEnvelope {
  EnvelopeVariant variant = EnvelopeVariant::R12;
  double A = 0;    // (1 - 1/e)^-2
  double B = 0;    // uniform-bound base
  double c_q = 0;  // 2 / (1 - q^-1/2)
  double R = 0;    // contour radius
  double eps = 0;
  double value = 0;
};

double envelope_A();
double envelope_B(std::uint64_t q);
double envelope_cq(std::uint64_t q);

/// Envelopes for the count at N = 2n. R12: 2 c_q^(2g) (1 + q^-1/2) q^n.
/// R14: the eps = 1/log q bracket times q^((n + eps)/2). Thm12: A^g q^(n/2 + (2g+1)/4).
ErrorEnvelope quad_error_envelope(const CurveZeta& z, int N, EnvelopeVariant v);
/// #Cl[2] B^(2g) q^(N+1).
ErrorEnvelope quad_uniform_bound(const CurveZeta& z, std::size_t cl2, int N);

struct CensusRow {
  int N = 0;
  Int count;
  Rat main_term;       // AffineFactor2
  Rat main_literal;    // AffineLiteral
  Rat main_poles;      // quad_main_term_poles
  double envelope_R12 = 0;
  double envelope_thm12 = 0;
  double uniform_bound = 0;
  bool within_envelope = true;  // |count - main_poles| <= envelope_R12 (even N only)
  bool has_oracle = false;
  bool oracle_equal = true;
};

struct CensusTable {
  std::string base;
  std::uint64_t q = 0;
  std::string convention = "affine";
  std::map<int, CensusRow> rows;
};

/// Rows N = 1..N_max; each count is compared with `oracle` when one is given.
CensusTable quad_census(const QuadBase& base, int N_max, const std::function<Int(int)>& oracle = {});

}  // namespace ffc

#endif
