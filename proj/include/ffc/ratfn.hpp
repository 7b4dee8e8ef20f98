#ifndef FFC_RATFN_HPP
#define FFC_RATFN_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ffc {

using Int = mpz_class;
using Rat = mpq_class;

/// Polynomial in u with integer coefficients, lowest degree first.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> c) : c_(std::move(c)) { trim(); }
  IntPoly(std::initializer_list<long> c);
  static IntPoly monomial(const Int& c, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Int operator[](int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Int(0); }
  const std::vector<Int>& coeffs() const { return c_; }

  Rat eval(const Rat& u) const;
  /// u -> u^k
  IntPoly substitute_power(int k) const;
  /// u -> c*u
  IntPoly scale_variable(const Int& c) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Int& c, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

/// num/den in lowest terms: no common factor in Q[u], integer coefficients
/// with overall content 1, den(0) > 0.
class RationalFn {
 public:
  RationalFn() : num_(IntPoly{0}), den_(IntPoly{1}) {}
  RationalFn(IntPoly num, IntPoly den);
  static RationalFn polynomial(IntPoly p) { return RationalFn(std::move(p), IntPoly{1}); }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  Rat eval(const Rat& u) const;
  /// First N+1 power-series coefficients at u = 0.
  std::vector<Rat> series(int N) const;
  RationalFn substitute_power(int k) const;

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  friend bool operator==(const RationalFn& a, const RationalFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  IntPoly num_, den_;
};

std::vector<Rat> series_coefficients(const RationalFn& r, int N);

/// lim_{u -> rho} (1 - u/rho) * r(u) at a simple pole rho != 0.
Rat pole_coefficient(const RationalFn& r, const Rat& rho);

/// Square-free part of p over Q, as a primitive integer polynomial.
IntPoly squarefree_part(const IntPoly& p);

std::string to_string(const Rat& r);

}  // namespace ffc

#endif
