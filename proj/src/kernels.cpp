#include "ffc/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <string>

#include "ffc/enumerate.hpp"
#include "ffc/factor.hpp"
#include "multiples.hpp"

namespace ffc {

void check_exhaustion_guard(std::uint64_t size, const char* what) {
  if (size > kExhaustionGuard && !guard_override())
    throw GuardError(std::string(what) + ": " + std::to_string(size) +
                     " items exceeds the exhaustion guard (set FFCENSUS_GUARD_OVERRIDE to lift)");
}

std::int64_t character_sum(const Field& F, const Poly& D, Exec exec) {
  const std::int64_t q = F.q();
  std::int64_t total = 0;
  const auto& c = D.coeffs();
  const int deg = D.degree();
  auto body = [&](std::int64_t x) {
    Elem acc{0}, ex{static_cast<std::uint32_t>(x)};
    for (int i = deg; i >= 0; --i) acc = F.add(F.mul(acc, ex), c[static_cast<std::size_t>(i)]);
    return F.chi(acc);
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (std::int64_t x = 0; x < q; ++x) total += body(x);
  } else {
    for (std::int64_t x = 0; x < q; ++x) total += body(x);
  }
  return total;
}

namespace {

template <class Fn>
void sieve_multiples(const Field& F, int n, const Poly& p, Exec exec, Fn&& fn) {
  const std::uint64_t total = monic_count(F, n - p.degree());
  const std::uint64_t chunk = 4096;
  if (exec == Exec::Serial || total < 2 * chunk) {
    detail::for_each_multiple(F, n, p, 0, total, fn);
    return;
  }
  const std::int64_t nchunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
  // Distinct h give distinct products, so chunks never write the same slot.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t c = 0; c < nchunks; ++c) {
    std::uint64_t a = static_cast<std::uint64_t>(c) * chunk;
    detail::for_each_multiple(F, n, p, a, std::min(total, a + chunk), fn);
  }
}

}  // namespace

OmegaSieve omega_sieve(const Field& F, int n, int T, Exec exec) {
  const std::uint64_t size = monic_count(F, n);
  check_exhaustion_guard(size, "omega sieve");
  OmegaSieve s;
  s.n = n;
  s.T = T;
  s.squarefree.assign(size, 1);
  s.omega.assign(size, 0);
  auto* sq = s.squarefree.data();
  auto* om = s.omega.data();
  for (int d = 1; d <= std::min(T, n); ++d)
    for (const Poly& p : irreducibles(F, d)) sieve_multiples(F, n, p, exec, [om](std::uint64_t i) { ++om[i]; });
  for (int d = 1; 2 * d <= n; ++d)
    for (const Poly& p : irreducibles(F, d))
      sieve_multiples(F, n, mul(F, p, p), exec, [sq](std::uint64_t i) { sq[i] = 0; });
  return s;
}

std::vector<std::uint64_t> omega_histogram(const Field& F, int n, int T, Exec exec) {
  OmegaSieve s = omega_sieve(F, n, T, exec);
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1, 0);
  const std::int64_t size = static_cast<std::int64_t>(s.omega.size());
  const int nh = n + 1;
  if (exec == Exec::Parallel) {
#pragma omp parallel
    {
      std::vector<std::uint64_t> local(static_cast<std::size_t>(nh), 0);
#pragma omp for schedule(static) nowait
      for (std::int64_t i = 0; i < size; ++i)
        if (s.squarefree[static_cast<std::size_t>(i)]) ++local[s.omega[static_cast<std::size_t>(i)]];
#pragma omp critical
      for (int k = 0; k < nh; ++k) hist[static_cast<std::size_t>(k)] += local[static_cast<std::size_t>(k)];
    }
  } else {
    for (std::int64_t i = 0; i < size; ++i)
      if (s.squarefree[static_cast<std::size_t>(i)]) ++hist[s.omega[static_cast<std::size_t>(i)]];
  }
  return hist;
}

std::vector<std::uint64_t> omega_histogram_reference(const Field& F, int n, int T) {
  check_exhaustion_guard(monic_count(F, n), "omega reference scan");
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1, 0);
  SquarefreeStream s(F, n);
  Poly f;
  while (s.next(f)) ++hist[static_cast<std::size_t>(omega_bounded(F, f, T))];
  return hist;
}

std::uint64_t squarefree_count(const Field& F, int n, Exec exec) {
  if (n == 0) return 1;
  OmegaSieve s = omega_sieve(F, n, 0, exec);
  std::uint64_t c = 0;
  for (auto v : s.squarefree) c += v;
  return c;
}

std::uint64_t squarefree_count_reference(const Field& F, int n) {
  check_exhaustion_guard(monic_count(F, n), "square-free reference scan");
  std::uint64_t c = 0;
  SquarefreeStream s(F, n);
  Poly f;
  while (s.next(f)) ++c;
  return c;
}

}  // namespace ffc
