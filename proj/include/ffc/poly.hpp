#ifndef FFC_POLY_HPP
#define FFC_POLY_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ffc/field.hpp"

namespace ffc {

/// Polynomial over F_q, coefficients lowest degree first, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(Elem c) { return Poly(std::vector<Elem>{c}); }
  static Poly one() { return constant(Elem{1}); }
  static Poly x() { return Poly(std::vector<Elem>{Elem{0}, Elem{1}}); }
  static Poly monomial(Elem c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == Elem{1}; }
  bool is_monic() const { return !c_.empty() && c_.back() == Elem{1}; }
  Elem lead() const { return c_.empty() ? Elem{0} : c_.back(); }
  Elem coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Elem{0};
  }
  const std::vector<Elem>& coeffs() const { return c_; }
  void set_coeff(int i, Elem v);

  friend bool operator==(const Poly&, const Poly&) = default;
  /// Canonical order: by degree, then coefficients from the top down.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

 private:
  void trim() {
    while (!c_.empty() && c_.back().v == 0) c_.pop_back();
  }
  std::vector<Elem> c_;
};

Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly neg(const Field& F, const Poly& a);
Poly scale(const Field& F, const Poly& a, Elem c);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly shift(const Poly& a, int k);  // a * x^k
Poly pow(const Field& F, const Poly& a, unsigned k);
/// Quotient and remainder; b nonzero.
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
Poly rem(const Field& F, const Poly& a, const Poly& b);
Poly quo(const Field& F, const Poly& a, const Poly& b);
/// Exact division; throws ConsistencyError if b does not divide a.
Poly exact_div(const Field& F, const Poly& a, const Poly& b);
bool divides(const Field& F, const Poly& d, const Poly& a);
Poly monic(const Field& F, const Poly& a);
/// Monic gcd (zero if both inputs are zero).
Poly gcd(const Field& F, const Poly& a, const Poly& b);
/// Returns (g, s, t) with s*a + t*b = g monic.
struct XGcd {
  Poly g, s, t;
};
XGcd xgcd(const Field& F, const Poly& a, const Poly& b);
/// Inverse of a modulo m; a must be coprime to m.
Poly inverse_mod(const Field& F, const Poly& a, const Poly& m);
Poly derivative(const Field& F, const Poly& a);
Elem eval(const Field& F, const Poly& a, Elem x);
Poly mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Field& F, const Poly& a, const mpz_class& k, const Poly& m);
/// Raise every coefficient to the power p^(e-1), i.e. invert Frobenius on
/// coefficients, and take the p-th root of the variable. a' must be zero.
Poly pth_root(const Field& F, const Poly& a);
/// Square root in F_q[x] if a is a perfect square (including its leading
/// coefficient); the root with canonical (smaller-index) leading coefficient.
std::optional<Poly> poly_sqrt(const Field& F, const Poly& a);
/// Valuation of a at the irreducible p (a nonzero).
int valuation(const Field& F, Poly a, const Poly& p);

/// "0,2,1" style text: decimal element indices, lowest degree first.
std::string to_text(const Poly& a);
Poly parse_poly(const Field& F, const std::string& text);

}  // namespace ffc

#endif
