#ifndef FFC_FACTOR_HPP
#define FFC_FACTOR_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ffc/poly.hpp"

namespace ffc {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct Factorization {
  Elem unit;
  std::vector<std::pair<Poly, int>> factors;  // sorted by canonical order
};

/// Full factorization into monic irreducibles. Equal-degree splitting draws
/// from a generator seeded with `seed`, so output is reproducible.
Factorization factor(const Field& F, const Poly& f, std::uint64_t seed = kDefaultSeed);
Poly expand(const Field& F, const Factorization& fac);

bool is_squarefree(const Field& F, const Poly& f);
bool is_irreducible(const Field& F, const Poly& f);

/// f monic; returns (g_i, i) with f = prod g_i^i, each g_i square-free.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Field& F, const Poly& f);
/// f monic square-free; returns (h_d, d) where h_d is the product of the
/// degree-d irreducible factors of f.
std::vector<std::pair<Poly, int>> distinct_degree(const Field& F, const Poly& f);
/// f monic square-free with all irreducible factors of degree d.
std::vector<Poly> equal_degree(const Field& F, const Poly& f, int d, std::mt19937_64& rng);

/// pi(d) for a field of size q.
mpz_class count_irreducible(std::uint64_t q, int d);
int moebius(int n);

/// Distinct irreducible factors of degree <= T.
int omega_bounded(const Field& F, const Poly& f, int T);
int omega(const Field& F, const Poly& f);

/// Monic irreducibles of degree d, in enumeration order. Cached per field.
const std::vector<Poly>& irreducibles(const Field& F, int d);

}  // namespace ffc

#endif
