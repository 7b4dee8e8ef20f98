#include "ffc/factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "ffc/enumerate.hpp"
#include "multiples.hpp"

namespace ffc {

namespace {

Poly frobenius_step(const Field& F, const Poly& h, const Poly& f) {
  return powmod(F, h, mpz_class(F.q()), f);
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

int moebius(int n) {
  int result = 1;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      result = -result;
    }
  if (n > 1) result = -result;
  return result;
}

mpz_class count_irreducible(std::uint64_t q, int d) {
  if (d < 1) throw UsageError("count_irreducible needs d >= 1");
  mpz_class sum = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    int mu = moebius(e);
    if (mu == 0) continue;
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), q, static_cast<unsigned long>(d / e));
    sum += mu * t;
  }
  return sum / d;
}

bool is_squarefree(const Field& F, const Poly& f) {
  if (f.is_zero()) throw UsageError("is_squarefree of zero");
  if (f.degree() <= 0) return true;
  Poly d = derivative(F, f);
  if (d.is_zero()) return false;
  return gcd(F, f, d).degree() == 0;
}

bool is_irreducible(const Field& F, const Poly& f) {
  if (f.is_zero()) throw UsageError("is_irreducible of zero");
  int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  Poly g = monic(F, f);
  Poly x = Poly::x();
  std::vector<Poly> powers(static_cast<std::size_t>(n) + 1);
  powers[0] = x;
  for (int k = 1; k <= n; ++k) powers[static_cast<std::size_t>(k)] = frobenius_step(F, powers[static_cast<std::size_t>(k - 1)], g);
  if (powers[static_cast<std::size_t>(n)] != rem(F, x, g)) return false;
  for (int l : prime_divisors(n)) {
    Poly t = sub(F, powers[static_cast<std::size_t>(n / l)], x);
    if (gcd(F, t, g).degree() != 0) return false;
  }
  return true;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Field& F, const Poly& f) {
  if (f.is_zero()) throw UsageError("squarefree_decomposition of zero");
  Poly a = monic(F, f);
  std::vector<std::pair<Poly, int>> out;
  if (a.degree() < 1) return out;
  Poly d = derivative(F, a);
  if (d.is_zero()) {
    for (auto& [g, m] : squarefree_decomposition(F, pth_root(F, a))) out.emplace_back(g, m * static_cast<int>(F.p()));
    return out;
  }
  Poly c = gcd(F, a, d);
  Poly w = exact_div(F, a, c);
  int i = 1;
  while (!w.is_one()) {
    Poly y = gcd(F, w, c);
    Poly fac = exact_div(F, w, y);
    if (fac.degree() > 0) out.emplace_back(fac, i);
    ++i;
    w = y;
    c = exact_div(F, c, y);
  }
  if (!c.is_one()) {
    for (auto& [g, m] : squarefree_decomposition(F, pth_root(F, c))) out.emplace_back(g, m * static_cast<int>(F.p()));
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.second < r.second; });
  return out;
}

std::vector<std::pair<Poly, int>> distinct_degree(const Field& F, const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  Poly rest = monic(F, f);
  Poly x = Poly::x();
  Poly h = rem(F, x, rest);
  int d = 0;
  while (rest.degree() >= 2 * (d + 1)) {
    ++d;
    h = frobenius_step(F, h, rest);
    Poly g = gcd(F, sub(F, h, x), rest);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = exact_div(F, rest, g);
      h = rem(F, h, rest);
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
  return out;
}

std::vector<Poly> equal_degree(const Field& F, const Poly& f, int d, std::mt19937_64& rng) {
  Poly g = monic(F, f);
  if (g.degree() == d) return {g};
  if (g.degree() % d != 0) throw ConsistencyError("equal_degree: degree mismatch");
  mpz_class qd;
  mpz_ui_pow_ui(qd.get_mpz_t(), F.q(), static_cast<unsigned long>(d));
  mpz_class e = (qd - 1) / 2;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Elem> c(static_cast<std::size_t>(g.degree()));
    for (auto& x : c) x = Elem{static_cast<std::uint32_t>(rng() % F.q())};
    Poly a(std::move(c));
    if (a.degree() < 1) continue;
    Poly b = sub(F, powmod(F, a, e, g), Poly::one());
    Poly s = gcd(F, b, g);
    if (s.degree() > 0 && s.degree() < g.degree()) {
      auto left = equal_degree(F, s, d, rng);
      auto right = equal_degree(F, exact_div(F, g, s), d, rng);
      left.insert(left.end(), right.begin(), right.end());
      std::sort(left.begin(), left.end());
      return left;
    }
  }
  throw ConsistencyError("equal_degree: splitting failed");
}

Factorization factor(const Field& F, const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw UsageError("factor of zero");
  Factorization out;
  out.unit = f.lead();
  std::mt19937_64 rng(seed);
  std::map<Poly, int> acc;
  for (auto& [part, mult] : squarefree_decomposition(F, f))
    for (auto& [block, d] : distinct_degree(F, part))
      for (auto& p : equal_degree(F, block, d, rng)) acc[p] += mult;
  for (auto& [p, m] : acc) out.factors.emplace_back(p, m);
  return out;
}

Poly expand(const Field& F, const Factorization& fac) {
  Poly r = Poly::constant(fac.unit);
  for (auto& [p, m] : fac.factors) r = mul(F, r, pow(F, p, static_cast<unsigned>(m)));
  return r;
}

int omega_bounded(const Field& F, const Poly& f, int T) {
  if (f.is_zero()) throw UsageError("omega of zero");
  int count = 0;
  for (auto& [part, mult] : squarefree_decomposition(F, f))
    for (auto& [block, d] : distinct_degree(F, part))
      if (d <= T) count += block.degree() / d;
  return count;
}

int omega(const Field& F, const Poly& f) { return omega_bounded(F, f, std::max(f.degree(), 1)); }

const std::vector<Poly>& irreducibles(const Field& F, int d) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, int>, std::vector<Poly>> cache;
  auto key = std::make_pair(field_header(F), d);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<Poly> out;
  const std::uint64_t total = monic_count(F, d);
  if (d >= 4 && total <= (std::uint64_t{1} << 24)) {
    // Cross off multiples of the irreducibles of degree <= d/2.
    std::vector<std::uint8_t> composite(total, 0);
    for (int k = 1; 2 * k <= d; ++k)
      for (const Poly& p : irreducibles(F, k))
        detail::for_each_multiple(F, d, p, 0, monic_count(F, d - k), [&](std::uint64_t i) { composite[i] = 1; });
    for (std::uint64_t i = 0; i < total; ++i)
      if (!composite[i]) out.push_back(monic_from_index(F, d, i));
  } else {
    MonicStream s(F, d);
    Poly f;
    while (s.next(f))
      if (is_irreducible(F, f)) out.push_back(f);
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace ffc
