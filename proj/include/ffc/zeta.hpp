#ifndef FFC_ZETA_HPP
#define FFC_ZETA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ffc/kernels.hpp"
#include "ffc/poly.hpp"
#include "ffc/ratfn.hpp"

namespace ffc {

enum class InfinityType { Ramified, Split, Inert };
std::string to_string(InfinityType t);

/// Behaviour of the place at infinity of F_q(x) in F_q(x, sqrt(D)).
InfinityType infinity_type(const Field& F, const Poly& D);

/// Zeta data of a function field with constant field F_q:
/// Z(u) = L(u) / ((1-u)(1-qu)), deg L = 2*genus.
struct CurveZeta {
  std::uint64_t q = 0;
  IntPoly lpoly{1};
  int genus = 0;
  /// Degrees of the places removed to get the affine ring (over the
  /// rational base: the single place at infinity).
  std::vector<int> infinite_degrees{1};

  int disc_exponent() const { return 2 * genus - 2; }
  RationalFn zeta() const;
  /// Zeta of the affine ring: zeta() times prod (1 - u^d) over infinite places.
  RationalFn affine_zeta() const;
};

RationalFn zeta_rational_base(const Field& F);
CurveZeta rational_curve_zeta(const Field& F);

struct LpolyOptions {
  /// Count points over F_{q^i} for all i <= 2g instead of i <= g, and check
  /// the counts against the completed polynomial.
  bool count_all = false;
  Exec exec = Exec::Parallel;
};

/// #C(F_{q^i}) for the smooth model of y^2 = D.
Int hyperelliptic_point_count(const Field& F, const Poly& D, unsigned i, Exec exec = Exec::Parallel);

/// L-polynomial of y^2 = D (D square-free, deg >= 1, any leading
/// coefficient) by point counting and Newton's identities.
CurveZeta hyperelliptic_lpoly(const Field& F, const Poly& D, const LpolyOptions& opt = {});

struct RhCheck {
  bool symmetric = false;
  double max_deviation = 0;  // max | |pi| - sqrt q | over inverse roots
  bool ok = false;
};
RhCheck rh_check(const CurveZeta& z, double tol = 1e-6);
bool check_rh(const CurveZeta& z, double tol = 1e-6);

/// Affine L-function of the quadratic character attached to g.
struct QuadCharacterL {
  Poly conductor;
  IntPoly lpoly_affine;
  InfinityType infinite_type = InfinityType::Ramified;
};

/// g monic square-free, deg g >= 1.
QuadCharacterL dirichlet_lpoly(const Field& F, const Poly& g);

/// sum over monic m with deg m < deg f of (f | m) u^deg m, for any
/// nonconstant square-free f (leading coefficient allowed).
IntPoly character_lpoly(const Field& F, const Poly& f);

/// L(u, chi_f) as a rational function; for constant f = c this is
/// 1/(1 - chi(c) q u).
RationalFn character_lfunction(const Field& F, const Poly& f);

/// r with Res_{s=1} zeta(s) = r / log q.
Rat residue_at_1(const CurveZeta& z);
Rat residue_affine(const CurveZeta& z);
/// Z(q^-2), i.e. zeta(2).
Rat zeta_value(const CurveZeta& z);
Rat zeta_value_affine(const CurveZeta& z);

/// h = L(1); throws ConsistencyError if h > (1 + sqrt q)^(2g).
Int class_number(const CurveZeta& z);
/// Exact test of h <= (1 + sqrt q)^(2g).
bool within_class_number_bound(const Int& h, std::uint64_t q, int genus);

}  // namespace ffc

#endif
