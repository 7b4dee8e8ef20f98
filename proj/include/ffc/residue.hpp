#ifndef FFC_RESIDUE_HPP
#define FFC_RESIDUE_HPP

#include "ffc/poly.hpp"

namespace ffc {

/// Legendre symbol of a modulo the irreducible p, by Euler's criterion in
/// F_q[x]/(p): a^((q^deg p - 1)/2).
int legendre_irreducible(const Field& F, const Poly& a, const Poly& p);

/// prod over p^k || bottom of legendre(top mod p)^k, for bottom nonzero
/// (its leading coefficient is ignored). Computed by F_q[x] reciprocity, no
/// factoring. Returns 0 iff gcd(top, bottom) is nonconstant.
int residue_symbol(const Field& F, const Poly& top, const Poly& bottom);

/// (g | m): the residue symbol of g extended multiplicatively over the
/// factorization of m. g must be monic square-free, m nonzero.
int jacobi_symbol(const Field& F, const Poly& m, const Poly& g);

}  // namespace ffc

#endif
