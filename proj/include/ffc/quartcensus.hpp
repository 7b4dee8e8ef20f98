#ifndef FFC_QUARTCENSUS_HPP
#define FFC_QUARTCENSUS_HPP

// Quadratic-on-quadratic towers L/K/F over F = F_q(x). Counts are indexed
// by finite discriminant exponents: K has exponent d = deg g, L/K has
// relative exponent m, and the tower sits at N = 2d + m.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffc/quadcensus.hpp"
#include "ffc/tower.hpp"

namespace ffc {

/// Character of Cl(O_K)/Cl(O_K)^2 attached to D = f1*f2. `flips` holds the
/// ramified primes whose value had to be negated to make the character
/// trivial on principal ideals (empty when the genus rule was already right).
struct GenusCharacter {
  Poly f1, f2;
  std::vector<Poly> flips;
  bool trivial() const { return f1.degree() == 0 && f1.is_one(); }
};

/// Trivial character first, then the rest by (f1, f2) with f1 <= f2.
/// `reconciled` runs the principal-ideal check that fills in `flips`.
std::vector<GenusCharacter> genus_characters(const TowerField& K, bool reconciled = true);
int character_value(const TowerField& K, const GenusCharacter& chi, const PrimeIdeal& P);

enum class LMethod {
  Euler,          // truncated Euler product over primes of O_K, checked against the factorization
  Factorization,  // L(chi_f1) * L(chi_f2) over F_q[x] only
};

/// L-function of chi over O_K as a rational function in u.
RationalFn character_lfunction_over_K(const TowerField& K, const GenusCharacter& chi, LMethod method = LMethod::Euler);

QuadBase quad_base(const TowerField& K, LMethod method = LMethod::Euler);
/// Number of square classes of K^* whose ideal square-free part has norm
/// exponent m (the trivial class sits at m = 0).
Int quad_count_over_K(const TowerField& K, int m, LMethod method = LMethod::Euler);

enum class QuarticLabel { D4, C4, V4 };
std::string to_string(QuarticLabel l);

/// Galois type of K(sqrt alpha)/F from the norm square class. alpha in O_K
/// must not be a square in K.
QuarticLabel classify_tower(const TowerField& K, const KElem& alpha);

struct KummerClass {
  KElem alpha;
  int m = 0;
  bool trivial = false;
};

struct KummerCensus {
  int m_max = 0;
  int height_a = 0, height_b = 0;
  bool certified = false;
  std::vector<KummerClass> classes;
  std::vector<Int> counts() const;  // index m = 0..m_max
};

/// Box heights (deg a, deg b) that provably contain a representative of
/// every square class with relative exponent <= m. For split K this needs
/// the fundamental unit.
std::pair<int, int> certified_heights(const TowerField& K, int m);

/// Enumerate a + b y with deg a <= height_a, deg b <= height_b, normalized
/// up to F_q^*2, and keep one representative per square class with relative
/// exponent <= m_max. Without explicit heights the certified ones are used.
KummerCensus kummer_census(const TowerField& K, int m_max, std::optional<std::pair<int, int>> heights = std::nullopt);

/// Splitting-type oracle from Frobenius cycle patterns of a primitive
/// element's minimal polynomial modulo primes of degree <= max_deg. Prime q only.
struct SplittingOracle {
  QuarticLabel label = QuarticLabel::V4;
  bool certified = false;
  int primes_tested = 0;
  std::map<std::string, int> patterns;
};
SplittingOracle splitting_oracle(const TowerField& K, const KElem& alpha, int max_deg = 6, int min_primes = 30);

/// Sum over K with 2d <= N of (quad_count_over_K(K, N - 2d) - [N = 2d]).
Int tower_sum(const Field& F, int N, LMethod method = LMethod::Euler);
/// V4 fields with finite discriminant exponent d1 + d2 + d3 = N.
Int count_v4(const Field& F, int N);

struct TowerRow {
  int N = 0;
  Int tower_sum;  // from the generating series
  Int c4, v4, d4;
  bool parity_ok = true;
  // exhaustive Kummer classification
  bool oracle_certified = false;
  Int oracle_towers, oracle_d4_towers, oracle_c4_towers, oracle_v4_towers;
  bool oracle_ok = false;  // towers, c4, 3*v4 and 2*d4 all agree
};

/// Rows N = 0..N_max. c4 comes from classifying the exhaustive Kummer census.
std::vector<TowerRow> tower_census(const Field& F, int N_max, LMethod method = LMethod::Euler);

/// D_L = D_F^[L:F] * N(d_{L/F}) in exponents of q.
int disc_tower(int dF_exp, int d_rel_exp, int degree);
/// The two alternative relations D_F D_{L/F}^2 and D_{L/F} D_F^4.
int disc_tower_variant_a(int dF_exp, int d_rel_exp);
int disc_tower_variant_b(int dF_exp, int d_rel_exp);
/// Exponent of the full relative discriminant of F(sqrt D)/F_q(x),
/// including the place at infinity.
int full_rel_disc_quadratic(const Poly& D);

struct D4Constant {
  int J = 0;
  Rat partial;
  double tail_bound = 0;
};

/// Leading constant of tower_sum(N) / (2 q^N) in our finite-discriminant
/// convention: 1/2 sum over K with d <= J of (c+ + (-1)^N c-) q^(-2d).
D4Constant d4_constant_finite(const Field& F, int J, int parity);
/// 1/2 sum over d <= N/2 of the pole terms: the exact leading part of d4(N).
Rat d4_main_term_finite(const Field& F, int N);

/// (log q / 2) sum over K of genus j + 1, j = -1..J, of Res zeta_K / (q^(4j) Z(2)),
/// with Z(2) = zeta_F(2) (literal) or zeta_K(2), log q cancelled.
D4Constant d4_constant_literal(const Field& F, int J, bool use_zeta_K);

}  // namespace ffc

#endif
