#include "ffc/poly.hpp"

#include <sstream>

namespace ffc {

Poly Poly::monomial(Elem c, int degree) {
  if (c.v == 0) return Poly();
  std::vector<Elem> v(static_cast<std::size_t>(degree) + 1, Elem{0});
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::set_coeff(int i, Elem v) {
  if (i < 0) throw UsageError("negative coefficient index");
  auto k = static_cast<std::size_t>(i);
  if (k >= c_.size()) c_.resize(k + 1, Elem{0});
  c_[k] = v;
  trim();
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i).v <=> b.coeff(i).v;
  return std::strong_ordering::equal;
}

Poly add(const Field& F, const Poly& a, const Poly& b) {
  const auto &x = a.coeffs(), &y = b.coeffs();
  std::vector<Elem> r(std::max(x.size(), y.size()), Elem{0});
  for (std::size_t i = 0; i < r.size(); ++i) {
    Elem u = i < x.size() ? x[i] : Elem{0};
    Elem v = i < y.size() ? y[i] : Elem{0};
    r[i] = F.add(u, v);
  }
  return Poly(std::move(r));
}

Poly neg(const Field& F, const Poly& a) {
  std::vector<Elem> r(a.coeffs());
  for (auto& c : r) c = F.neg(c);
  return Poly(std::move(r));
}

Poly sub(const Field& F, const Poly& a, const Poly& b) { return add(F, a, neg(F, b)); }

Poly scale(const Field& F, const Poly& a, Elem c) {
  if (c.v == 0) return Poly();
  std::vector<Elem> r(a.coeffs());
  for (auto& x : r) x = F.mul(x, c);
  return Poly(std::move(r));
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const auto &x = a.coeffs(), &y = b.coeffs();
  std::vector<Elem> r(x.size() + y.size() - 1, Elem{0});
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].v == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(x[i], y[j]));
  }
  return Poly(std::move(r));
}

Poly shift(const Poly& a, int k) {
  if (a.is_zero() || k == 0) return a;
  std::vector<Elem> r(static_cast<std::size_t>(k), Elem{0});
  r.insert(r.end(), a.coeffs().begin(), a.coeffs().end());
  return Poly(std::move(r));
}

Poly pow(const Field& F, const Poly& a, unsigned k) {
  Poly result = Poly::one(), base = a;
  while (k) {
    if (k & 1) result = mul(F, result, base);
    k >>= 1;
    if (k) base = mul(F, base, base);
  }
  return result;
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw UsageError("division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Elem> r(a.coeffs());
  const auto& d = b.coeffs();
  int db = b.degree();
  Elem inv_lead = F.inv(b.lead());
  std::vector<Elem> q(static_cast<std::size_t>(a.degree() - db + 1), Elem{0});
  for (int k = a.degree(); k >= db; --k) {
    Elem c = r[static_cast<std::size_t>(k)];
    if (c.v == 0) continue;
    Elem t = F.mul(c, inv_lead);
    q[static_cast<std::size_t>(k - db)] = t;
    Elem nt = F.neg(t);
    for (int i = 0; i <= db; ++i) {
      auto idx = static_cast<std::size_t>(k - db + i);
      r[idx] = F.add(r[idx], F.mul(nt, d[static_cast<std::size_t>(i)]));
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly rem(const Field& F, const Poly& a, const Poly& b) {
  if (a.degree() < b.degree() && !b.is_zero()) return a;
  return divmod(F, a, b).second;
}

Poly quo(const Field& F, const Poly& a, const Poly& b) { return divmod(F, a, b).first; }

Poly exact_div(const Field& F, const Poly& a, const Poly& b) {
  auto [q, r] = divmod(F, a, b);
  if (!r.is_zero()) throw ConsistencyError("inexact polynomial division");
  return q;
}

bool divides(const Field& F, const Poly& d, const Poly& a) { return rem(F, a, d).is_zero(); }

Poly monic(const Field& F, const Poly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return scale(F, a, F.inv(a.lead()));
}

Poly gcd(const Field& F, const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = rem(F, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(F, x);
}

XGcd xgcd(const Field& F, const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b, s0 = Poly::one(), s1, t0, t1 = Poly::one();
  while (!r1.is_zero()) {
    auto [q, r] = divmod(F, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(F, s0, mul(F, q, s1));
    Poly t2 = sub(F, t0, mul(F, q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {Poly(), Poly(), Poly()};
  Elem il = F.inv(r0.lead());
  return {scale(F, r0, il), scale(F, s0, il), scale(F, t0, il)};
}

Poly inverse_mod(const Field& F, const Poly& a, const Poly& m) {
  auto r = xgcd(F, rem(F, a, m), m);
  if (!r.g.is_one()) throw UsageError("polynomial is not invertible modulo m");
  return rem(F, r.s, m);
}

Poly derivative(const Field& F, const Poly& a) {
  if (a.degree() < 1) return Poly();
  std::vector<Elem> r(static_cast<std::size_t>(a.degree()));
  for (int i = 1; i <= a.degree(); ++i) r[static_cast<std::size_t>(i - 1)] = F.mul(F.from_int(i), a.coeff(i));
  return Poly(std::move(r));
}

Elem eval(const Field& F, const Poly& a, Elem x) {
  Elem acc{0};
  for (int i = a.degree(); i >= 0; --i) acc = F.add(F.mul(acc, x), a.coeff(i));
  return acc;
}

Poly mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m) { return rem(F, mul(F, a, b), m); }

Poly powmod(const Field& F, const Poly& a, const mpz_class& k, const Poly& m) {
  if (k < 0) throw UsageError("negative exponent");
  Poly base = rem(F, a, m);
  Poly result = rem(F, Poly::one(), m);
  std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(F, result, result, m);
    if (mpz_tstbit(k.get_mpz_t(), i)) result = mulmod(F, result, base, m);
  }
  return result;
}

Poly pth_root(const Field& F, const Poly& a) {
  std::uint32_t p = F.p();
  std::uint64_t e = F.q() / p;  // Frobenius inverse is a -> a^(q/p)
  std::vector<Elem> r;
  for (int i = 0; i <= a.degree(); ++i) {
    Elem c = a.coeff(i);
    if (i % static_cast<int>(p) != 0) {
      if (c.v != 0) throw ConsistencyError("pth_root of a polynomial with nonzero derivative");
      continue;
    }
    r.push_back(F.pow(c, e));
  }
  return Poly(std::move(r));
}

std::optional<Poly> poly_sqrt(const Field& F, const Poly& a) {
  if (a.is_zero()) return Poly();
  if (a.degree() % 2 != 0) return std::nullopt;
  auto s0 = F.sqrt(a.lead());
  if (!s0) return std::nullopt;
  Poly A = monic(F, a);
  int k = A.degree() / 2;
  std::vector<Elem> r(static_cast<std::size_t>(k) + 1, Elem{0});
  r[static_cast<std::size_t>(k)] = F.one();
  Elem inv2 = F.inv(F.from_int(2));
  for (int i = k - 1; i >= 0; --i) {
    Elem acc = A.coeff(k + i);
    for (int j = i + 1; j <= k - 1; ++j) {
      int jj = k + i - j;
      if (jj <= i || jj >= k) continue;
      acc = F.sub(acc, F.mul(r[static_cast<std::size_t>(j)], r[static_cast<std::size_t>(jj)]));
    }
    r[static_cast<std::size_t>(i)] = F.mul(acc, inv2);
  }
  Poly root(std::move(r));
  if (mul(F, root, root) != A) return std::nullopt;
  return scale(F, root, *s0);
}

int valuation(const Field& F, Poly a, const Poly& p) {
  if (a.is_zero()) throw UsageError("valuation of zero");
  int v = 0;
  for (;;) {
    auto [q, r] = divmod(F, a, p);
    if (!r.is_zero()) return v;
    a = std::move(q);
    ++v;
  }
}

std::string to_text(const Poly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  for (int i = 0; i <= a.degree(); ++i) os << (i ? "," : "") << a.coeff(i).v;
  return os.str();
}

Poly parse_poly(const Field& F, const std::string& text) {
  if (text.empty()) throw UsageError("empty polynomial text");
  std::vector<Elem> c;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (tok.empty()) throw UsageError("empty coefficient in '" + text + "'");
    std::uint64_t v = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9') throw UsageError("malformed coefficient '" + tok + "'");
      v = v * 10 + static_cast<unsigned>(ch - '0');
      if (v >= F.q()) throw UsageError("coefficient " + tok + " is not a residue below q");
    }
    c.push_back(Elem{static_cast<std::uint32_t>(v)});
  }
  return Poly(std::move(c));
}

}  // namespace ffc
