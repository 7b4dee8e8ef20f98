#include "ffc/tower.hpp"

#include <algorithm>

#include "ffc/enumerate.hpp"
#include "ffc/factor.hpp"
#include "ffc/residue.hpp"

namespace ffc {

namespace {

Poly reduce(const Field& F, const Poly& a, const Poly& m) { return rem(F, a, m); }

// Element of F[x]/p with index i (base-q digits are the coefficients).
Poly residue_from_index(const Field& F, int d, std::uint64_t i) {
  std::vector<Elem> c(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    c[static_cast<std::size_t>(k)] = Elem{static_cast<std::uint32_t>(i % F.q())};
    i /= F.q();
  }
  return Poly(std::move(c));
}

// Root of D modulo p^k lifted from r (r^2 = D mod p) by Newton steps.
Poly hensel_lift(const Field& F, const Poly& D, Poly r, const Poly& p, int k) {
  if (k <= 1) return r;
  Poly pk = pow(F, p, static_cast<unsigned>(k));
  const Elem two = F.from_int(2);
  for (int prec = 1; prec < k; prec *= 2) {
    Poly f = sub(F, mul(F, r, r), D);
    Poly inv = inverse_mod(F, scale(F, r, two), pk);
    r = reduce(F, sub(F, r, mulmod(F, f, inv, pk)), pk);
  }
  return r;
}

}  // namespace

std::string TowerField::label() const {
  return "u=" + std::to_string(twist.v) + ";g=" + to_text(g);
}

TowerField make_tower_field(const Field& F, const Poly& g, Elem twist) {
  if (g.is_zero() || !g.is_monic()) throw UsageError("tower field needs monic g");
  if (!(twist == F.one() || twist == F.nonsquare())) throw UsageError("twist must be 1 or the canonical non-square");
  if (g.degree() == 0 && twist == F.one()) throw UsageError("D = 1 does not define a field");
  if (!is_squarefree(F, g)) throw UsageError("tower field needs square-free g");
  TowerField K{F, g, twist, scale(F, g, twist), InfinityType::Ramified, 0, {}, {}, std::nullopt};
  const long q = static_cast<long>(F.q());
  if (K.constant_extension()) {
    K.inf = InfinityType::Inert;
    K.genus = 0;
    K.zeta_affine = RationalFn(IntPoly{1}, IntPoly{1, 0, -q * q});
    K.zeta_curve = RationalFn(IntPoly{1}, IntPoly{1, 0, -1} * IntPoly{1, 0, -q * q});
  } else {
    K.curve = hyperelliptic_lpoly(F, K.D);
    K.inf = infinity_type(F, K.D);
    K.genus = K.curve->genus;
    K.zeta_affine = K.curve->affine_zeta();
    K.zeta_curve = K.curve->zeta();
  }
  return K;
}

std::vector<TowerField> quadratic_fields(const Field& F, int d) {
  std::vector<TowerField> out;
  if (d == 0) {
    out.push_back(make_tower_field(F, Poly::one(), F.nonsquare()));
    return out;
  }
  for (const Poly& g : squarefree_monic_polys(F, d)) {
    out.push_back(make_tower_field(F, g, F.one()));
    out.push_back(make_tower_field(F, g, F.nonsquare()));
  }
  return out;
}

KElem kmul(const TowerField& K, const KElem& s, const KElem& t) {
  const Field& F = K.F;
  Poly a = add(F, mul(F, s.a, t.a), mul(F, K.D, mul(F, s.b, t.b)));
  Poly b = add(F, mul(F, s.a, t.b), mul(F, s.b, t.a));
  return {a, b};
}

KElem kconj(const TowerField& K, const KElem& s) { return {s.a, neg(K.F, s.b)}; }

Poly knorm(const TowerField& K, const KElem& s) {
  const Field& F = K.F;
  return sub(F, mul(F, s.a, s.a), mul(F, K.D, mul(F, s.b, s.b)));
}

Poly sqrt_mod(const Field& F, const Poly& a0, const Poly& p) {
  Poly a = rem(F, a0, p);
  if (a.is_zero()) return a;
  const int d = p.degree();
  mpz_class Q;
  mpz_ui_pow_ui(Q.get_mpz_t(), F.q(), static_cast<unsigned long>(d));
  const mpz_class half = (Q - 1) / 2;
  if (!powmod(F, a, half, p).is_one()) throw UsageError("sqrt_mod of a non-square");
  // Tonelli-Shanks in F[x]/p.
  mpz_class t = Q - 1;
  int s = 0;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  Poly z;
  for (std::uint64_t i = 2;; ++i) {
    z = residue_from_index(F, d, i);
    if (z.is_zero()) continue;
    if (!powmod(F, z, half, p).is_one()) break;
  }
  int M = s;
  Poly c = powmod(F, z, t, p);
  Poly T = powmod(F, a, t, p);
  Poly R = powmod(F, a, (t + 1) / 2, p);
  while (!T.is_one()) {
    int i = 0;
    Poly u = T;
    while (!u.is_one()) {
      u = mulmod(F, u, u, p);
      ++i;
    }
    Poly b = c;
    for (int k = 0; k < M - i - 1; ++k) b = mulmod(F, b, b, p);
    M = i;
    c = mulmod(F, b, b, p);
    T = mulmod(F, T, c, p);
    R = mulmod(F, R, b, p);
  }
  if (!(mulmod(F, R, R, p) == a)) throw ConsistencyError("Tonelli-Shanks produced a wrong root");
  Poly other = rem(F, neg(F, R), p);
  return std::min(R, other);
}

std::vector<PrimeIdeal> primes_above(const TowerField& K, const Poly& p) {
  const Field& F = K.F;
  const int chi = residue_symbol(F, K.D, p);
  if (chi == 0) return {PrimeIdeal{p, PrimeKind::Ramified, Poly()}};
  if (chi < 0) return {PrimeIdeal{p, PrimeKind::Inert, Poly()}};
  Poly r = sqrt_mod(F, K.D, p);
  Poly r2 = rem(F, neg(F, r), p);
  return {PrimeIdeal{p, PrimeKind::Split, r}, PrimeIdeal{p, PrimeKind::Split, r2}};
}

std::vector<PrimeIdeal> primes_up_to(const TowerField& K, int d) {
  std::vector<PrimeIdeal> out;
  for (int k = 1; k <= d; ++k)
    for (const Poly& p : irreducibles(K.F, k))
      for (auto& P : primes_above(K, p))
        if (P.degree() <= d) out.push_back(P);
  std::sort(out.begin(), out.end());
  return out;
}

int prime_valuation(const TowerField& K, const PrimeIdeal& P, const KElem& s) {
  const Field& F = K.F;
  if (s.is_zero()) throw UsageError("valuation of zero");
  switch (P.kind) {
    case PrimeKind::Inert: {
      if (s.a.is_zero()) return valuation(F, s.b, P.p);
      if (s.b.is_zero()) return valuation(F, s.a, P.p);
      return std::min(valuation(F, s.a, P.p), valuation(F, s.b, P.p));
    }
    case PrimeKind::Ramified:
      return valuation(F, knorm(K, s), P.p);
    case PrimeKind::Split: {
      const int vn = valuation(F, knorm(K, s), P.p);
      if (vn == 0) return 0;
      Poly r = hensel_lift(F, K.D, P.root, P.p, vn);
      Poly image = add(F, s.a, mul(F, s.b, r));
      int v = 0;
      Poly pk = P.p;
      while (v < vn && rem(F, image, pk).is_zero()) {
        ++v;
        pk = mul(F, pk, P.p);
      }
      return v;
    }
  }
  return 0;
}

std::vector<std::pair<PrimeIdeal, int>> ideal_factorization(const TowerField& K, const KElem& s, PrimeCache* cache) {
  if (s.is_zero()) throw UsageError("factorization of zero");
  std::vector<std::pair<PrimeIdeal, int>> out;
  Poly n = knorm(K, s);
  if (n.degree() <= 0) return out;
  for (auto& [p, e] : factor(K.F, n).factors) {
    int norm_deg = 0;
    std::vector<PrimeIdeal> local;
    const std::vector<PrimeIdeal>* above = &local;
    if (cache) {
      auto it = cache->find(p);
      if (it == cache->end()) it = cache->emplace(p, primes_above(K, p)).first;
      above = &it->second;
    } else {
      local = primes_above(K, p);
    }
    for (auto& P : *above) {
      int v = prime_valuation(K, P, s);
      if (v > 0) {
        norm_deg += v * P.degree();
        out.emplace_back(P, v);
      }
    }
    if (norm_deg != e * p.degree()) throw ConsistencyError("ideal factorization does not account for the norm");
  }
  return out;
}

bool is_square(const TowerField& K, const KElem& s) {
  const Field& F = K.F;
  if (s.is_zero()) return true;
  auto root = poly_sqrt(F, knorm(K, s));
  if (!root) return false;
  const Elem half = F.inv(F.from_int(2));
  Poly twoD = scale(F, K.D, F.from_int(2));
  for (const Poly& sn : {*root, neg(F, *root)}) {
    Poly c2 = scale(F, add(F, s.a, sn), half);
    auto [d2, r] = divmod(F, sub(F, s.a, sn), twoD);
    if (!r.is_zero()) continue;
    auto c = c2.is_zero() ? std::optional<Poly>(Poly()) : poly_sqrt(F, c2);
    auto d = d2.is_zero() ? std::optional<Poly>(Poly()) : poly_sqrt(F, d2);
    if (!c || !d) continue;
    Poly cross = scale(F, mul(F, *c, *d), F.from_int(2));
    if (cross == s.b || neg(F, cross) == s.b) return true;
  }
  return false;
}

std::optional<std::pair<KElem, int>> fundamental_unit(const TowerField& K, int max_deg_b) {
  if (K.inf != InfinityType::Split) throw UsageError("fundamental_unit needs split infinity");
  const Field& F = K.F;
  const Poly& D = K.D;
  const int k = D.degree() / 2;
  // A = polynomial part of sqrt(D) in F((1/x))
  Poly A = Poly::monomial(F.one(), k);
  const Elem half = F.inv(F.from_int(2));
  for (int j = k - 1; j >= 0; --j) {
    Poly R = sub(F, D, mul(F, A, A));
    A = add(F, A, Poly::monomial(F.mul(R.coeff(k + j), half), j));
  }
  // continued fraction of sqrt(D); the first constant Q gives the unit
  Poly P, Q = Poly::one();
  Poly p1 = Poly::one(), p2, q1, q2 = Poly::one();
  for (;;) {
    Poly a = quo(F, add(F, P, A), Q);
    Poly p = add(F, mul(F, a, p1), p2);
    Poly qq = add(F, mul(F, a, q1), q2);
    if (qq.degree() > max_deg_b) return std::nullopt;
    P = sub(F, mul(F, a, Q), P);
    Q = exact_div(F, sub(F, D, mul(F, P, P)), Q);
    if (Q.degree() == 0) {
      KElem u{p, qq};
      if (knorm(K, u).degree() != 0) throw ConsistencyError("continued fraction gave a non-unit");
      return std::make_pair(u, p.degree());
    }
    p2 = std::move(p1);
    p1 = std::move(p);
    q2 = std::move(q1);
    q1 = std::move(qq);
  }
}

}  // namespace ffc
