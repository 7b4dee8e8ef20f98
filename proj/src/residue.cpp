#include "ffc/residue.hpp"

#include "ffc/factor.hpp"

namespace ffc {

int legendre_irreducible(const Field& F, const Poly& a, const Poly& p) {
  Poly r = rem(F, a, p);
  if (r.is_zero()) return 0;
  mpz_class qd;
  mpz_ui_pow_ui(qd.get_mpz_t(), F.q(), static_cast<unsigned long>(p.degree()));
  Poly e = powmod(F, r, (qd - 1) / 2, p);
  if (e.is_one()) return 1;
  if (e == Poly::constant(F.neg(F.one()))) return -1;
  throw ConsistencyError("Euler criterion produced neither +1 nor -1; modulus reducible?");
}

int residue_symbol(const Field& F, const Poly& top, const Poly& bottom) {
  if (bottom.is_zero()) throw UsageError("residue symbol with zero modulus");
  // For monic coprime a, b: (a|b) = (b|a) * (-1)^(((q-1)/2) deg a deg b),
  // and a constant c gives chi(c)^(deg b).
  const bool minus_one_square = ((F.q() - 1) / 2) % 2 == 0;
  int result = 1;
  Poly a = top, b = monic(F, bottom);
  for (;;) {
    if (b.degree() == 0) return result;
    a = rem(F, a, b);
    if (a.is_zero()) return 0;
    Elem c = a.lead();
    if (b.degree() % 2 == 1) result *= F.chi(c);
    a = monic(F, a);
    if (!minus_one_square && (a.degree() % 2 == 1) && (b.degree() % 2 == 1)) result = -result;
    std::swap(a, b);
  }
}

int jacobi_symbol(const Field& F, const Poly& m, const Poly& g) {
  if (m.is_zero()) throw UsageError("jacobi_symbol: m must be nonzero");
  if (!g.is_monic() || !is_squarefree(F, g)) throw UsageError("jacobi_symbol: g must be monic square-free");
  return residue_symbol(F, g, m);
}

}  // namespace ffc
