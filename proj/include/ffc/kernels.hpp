#ifndef FFC_KERNELS_HPP
#define FFC_KERNELS_HPP

// Exhaustive scans. Each has an OpenMP kernel (Exec::Parallel), the same
// kernel run on one thread (Exec::Serial), and where it matters a plain
// per-polynomial reference used by the tests.

#include <cstdint>
#include <vector>

#include "ffc/poly.hpp"

namespace ffc {

enum class Exec { Serial, Parallel };

/// sum over x in F of chi(D(x)); D has coefficients in F.
std::int64_t character_sum(const Field& F, const Poly& D, Exec exec = Exec::Parallel);

/// Flags over all monic degree-n polynomials, indexed by monic_index.
struct OmegaSieve {
  int n = 0;
  int T = 0;
  std::vector<std::uint8_t> squarefree;
  std::vector<std::uint8_t> omega;  // distinct irreducible factors of degree <= T
};

/// Sieve by multiples of irreducibles: p*h marks omega, p^2*h clears the
/// square-free flag. Guarded at 10^7 entries.
OmegaSieve omega_sieve(const Field& F, int n, int T, Exec exec = Exec::Parallel);

/// hist[k] = #{f in P_n : omega_T(f) = k}.
std::vector<std::uint64_t> omega_histogram(const Field& F, int n, int T, Exec exec = Exec::Parallel);
std::vector<std::uint64_t> omega_histogram_reference(const Field& F, int n, int T);

std::uint64_t squarefree_count(const Field& F, int n, Exec exec = Exec::Parallel);
std::uint64_t squarefree_count_reference(const Field& F, int n);

/// Largest exhaustive scan allowed without FFCENSUS_GUARD_OVERRIDE.
inline constexpr std::uint64_t kExhaustionGuard = 10'000'000;
void check_exhaustion_guard(std::uint64_t size, const char* what);

}  // namespace ffc

#endif
