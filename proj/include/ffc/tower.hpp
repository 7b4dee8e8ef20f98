#ifndef FFC_TOWER_HPP
#define FFC_TOWER_HPP

// Arithmetic in O_K = F_q[x][y]/(y^2 - D) for K = F_q(x)(sqrt D), D = u*g
// with g monic square-free and u in {1, eps}. D = eps is the constant
// extension F_{q^2}(x).

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffc/poly.hpp"
#include "ffc/ratfn.hpp"
#include "ffc/zeta.hpp"

namespace ffc {

struct TowerField {
  Field F;
  Poly g;
  Elem twist;
  Poly D;
  InfinityType inf = InfinityType::Ramified;
  int genus = 0;  // over the exact constant field of K
  /// Zeta of O_K in u = q^-s (ideal norms measured over F_q).
  RationalFn zeta_affine;
  /// Zeta of the complete curve in the same variable.
  RationalFn zeta_curve;
  /// Present when the constant field is F_q (D nonconstant).
  std::optional<CurveZeta> curve;

  bool constant_extension() const { return g.degree() == 0; }
  int rel_disc() const { return g.degree(); }
  /// |O_K^* / O_K^*2|
  int unit_classes() const { return inf == InfinityType::Split ? 4 : 2; }
  std::string label() const;
};

/// g monic square-free; twist 1 or the field's canonical non-square.
/// (g = 1, twist = 1) is rejected: that is not a field.
TowerField make_tower_field(const Field& F, const Poly& g, Elem twist);
/// All quadratic extensions of F_q(x) with finite discriminant exponent d.
std::vector<TowerField> quadratic_fields(const Field& F, int d);

/// a + b*y
struct KElem {
  Poly a, b;
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  friend bool operator==(const KElem&, const KElem&) = default;
};

KElem kmul(const TowerField& K, const KElem& s, const KElem& t);
KElem kconj(const TowerField& K, const KElem& s);
/// a^2 - D b^2
Poly knorm(const TowerField& K, const KElem& s);

enum class PrimeKind { Split, Inert, Ramified };

/// A prime of O_K above the monic irreducible p. Split primes carry the
/// root of D mod p they correspond to: P = (p, y - root).
struct PrimeIdeal {
  Poly p;
  PrimeKind kind = PrimeKind::Inert;
  Poly root;
  /// Residue degree over F_q.
  int degree() const { return kind == PrimeKind::Inert ? 2 * p.degree() : p.degree(); }
  friend bool operator==(const PrimeIdeal&, const PrimeIdeal&) = default;
  friend auto operator<=>(const PrimeIdeal& a, const PrimeIdeal& b) {
    if (auto c = a.p <=> b.p; c != 0) return c;
    return a.root <=> b.root;
  }
};

/// A square root of a modulo the irreducible p (a a nonzero square mod p):
/// the smaller of the two in canonical order.
Poly sqrt_mod(const Field& F, const Poly& a, const Poly& p);

/// Primes above p, split primes in canonical root order.
std::vector<PrimeIdeal> primes_above(const TowerField& K, const Poly& p);
/// All primes of O_K of residue degree <= d, sorted.
std::vector<PrimeIdeal> primes_up_to(const TowerField& K, int d);

int prime_valuation(const TowerField& K, const PrimeIdeal& P, const KElem& s);
/// Memo of primes_above for repeated factorizations in one field.
using PrimeCache = std::map<Poly, std::vector<PrimeIdeal>>;

/// Prime factorization of the ideal (s), s nonzero, via its norm.
std::vector<std::pair<PrimeIdeal, int>> ideal_factorization(const TowerField& K, const KElem& s,
                                                            PrimeCache* cache = nullptr);

/// s = t^2 for some t in K (s in O_K, nonzero).
bool is_square(const TowerField& K, const KElem& s);

/// A fundamental unit a + b y (a^2 - D b^2 in F_q^*) of a split field, with
/// its degree r = deg a, from the continued fraction of sqrt D. Gives up
/// (nullopt) once deg b would exceed max_deg_b.
std::optional<std::pair<KElem, int>> fundamental_unit(const TowerField& K, int max_deg_b = 4096);

}  // namespace ffc

#endif
