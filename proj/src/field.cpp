#include "ffc/field.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "ffc/factor.hpp"
#include "ffc/poly.hpp"

namespace ffc {

bool guard_override() {
  const char* v = std::getenv("FFCENSUS_GUARD_OVERRIDE");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1 || p > 0xffffffffu) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), e);
}

struct Field::Tables {
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint32_t> exp, log, zech, neg;
  std::vector<std::int8_t> chi;
};

namespace {

using Coords = std::vector<std::uint32_t>;

std::uint32_t to_index(const Coords& c, std::uint32_t p) {
  std::uint32_t idx = 0;
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
  return idx;
}

Coords to_coords(std::uint32_t idx, std::uint32_t p, unsigned e) {
  Coords c(e);
  for (unsigned i = 0; i < e; ++i) {
    c[i] = idx % p;
    idx /= p;
  }
  return c;
}

// a*b mod the monic modulus, coordinates over F_p.
Coords mulmod(const Coords& a, const Coords& b, const Coords& mod, std::uint32_t p) {
  unsigned e = static_cast<unsigned>(a.size());
  std::vector<std::uint64_t> prod(2 * e, 0);
  for (unsigned i = 0; i < e; ++i)
    for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  for (unsigned k = 2 * e - 1; k >= e; --k) {
    std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < e; ++i) prod[k - e + i] = (prod[k - e + i] + (p - c) * mod[i]) % p;
  }
  Coords out(e);
  for (unsigned i = 0; i < e; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

bool modulus_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& mod) {
  Field fp = Field::make_large(p, 1);
  std::vector<Elem> c;
  for (auto v : mod) c.push_back(Elem{v});
  return is_irreducible(fp, Poly(std::move(c)));
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

using CacheKey = std::tuple<std::uint32_t, unsigned, std::vector<std::uint32_t>>;

std::map<CacheKey, std::shared_ptr<const void>>& cache() {
  static std::map<CacheKey, std::shared_ptr<const void>> c;
  return c;
}

}  // namespace

std::vector<std::uint32_t> Field::default_modulus(std::uint32_t p, unsigned e) {
  if (e == 1) return {0, 1};
  std::uint64_t total = 1;
  for (unsigned i = 0; i < e; ++i) total *= p;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<std::uint32_t> m(e + 1);
    std::uint64_t r = idx;
    for (unsigned i = 0; i < e; ++i) {
      m[i] = static_cast<std::uint32_t>(r % p);
      r /= p;
    }
    m[e] = 1;
    if (m[0] == 0) continue;
    if (modulus_irreducible(p, m)) return m;
  }
  throw ConsistencyError("no irreducible modulus found");
}

Field Field::make(std::uint32_t p, unsigned e, std::optional<std::vector<std::uint32_t>> modulus) {
  if (e > kMaxPublicDegree) throw UsageError("extension degree above 4 is not supported");
  return build(p, e, std::move(modulus), kMaxPublicQ);
}

Field Field::make_large(std::uint32_t p, unsigned e, std::optional<std::vector<std::uint32_t>> modulus) {
  return build(p, e, std::move(modulus), kMaxTableQ);
}

Field Field::build(std::uint32_t p, unsigned e, std::optional<std::vector<std::uint32_t>> modulus,
                   std::uint32_t max_q) {
  if (p == 2) throw UsageError("characteristic 2 is not supported");
  if (!is_prime(p)) throw UsageError("p = " + std::to_string(p) + " is not prime");
  if (e == 0) throw UsageError("extension degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > max_q) throw UsageError("field size exceeds the supported range");
  }
  std::vector<std::uint32_t> mod;
  if (e == 1) {
    mod = {0, 1};
  } else if (modulus) {
    mod = *modulus;
    if (mod.size() != e + 1 || mod[e] != 1) throw UsageError("modulus must be monic of degree e");
    for (auto c : mod)
      if (c >= p) throw UsageError("modulus coefficient out of range");
    if (!modulus_irreducible(p, mod)) throw UsageError("modulus is reducible over F_p");
  } else {
    mod = default_modulus(p, e);
  }

  CacheKey key{p, e, mod};
  std::shared_ptr<const Tables> tables;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache().find(key);
    if (it != cache().end()) tables = std::static_pointer_cast<const Tables>(it->second);
  }
  if (!tables) {
    auto t = std::make_shared<Tables>();
    t->modulus = mod;
    std::uint32_t qq = static_cast<std::uint32_t>(q);
    t->exp.assign(2 * (qq - 1) + 2, 0);
    t->log.assign(qq, kNoLog);
    t->neg.assign(qq, 0);
    t->chi.assign(qq, 0);
    Coords modc(mod.begin(), mod.begin() + e);
    // Generator: smallest index whose powers reach every nonzero element.
    for (std::uint32_t cand = 2; cand < qq; ++cand) {
      Coords g = to_coords(cand, p, e), cur = to_coords(1, p, e);
      std::fill(t->log.begin(), t->log.end(), kNoLog);
      bool ok = true;
      for (std::uint32_t k = 0; k < qq - 1; ++k) {
        std::uint32_t idx = to_index(cur, p);
        if (t->log[idx] != kNoLog) {
          ok = false;
          break;
        }
        t->log[idx] = k;
        t->exp[k] = idx;
        cur = e == 1 ? Coords{static_cast<std::uint32_t>(std::uint64_t(cur[0]) * g[0] % p)}
                     : mulmod(cur, g, modc, p);
      }
      if (ok) break;
    }
    for (std::uint32_t k = qq - 1; k < t->exp.size(); ++k) t->exp[k] = t->exp[k - (qq - 1)];
    for (std::uint32_t a = 0; a < qq; ++a) {
      Coords c = to_coords(a, p, e);
      for (auto& x : c) x = x == 0 ? 0 : p - x;
      t->neg[a] = to_index(c, p);
      t->chi[a] = a == 0 ? 0 : (t->log[a] % 2 == 0 ? 1 : -1);
    }
    if (e > 1) {
      t->zech.assign(qq - 1, kNoLog);
      for (std::uint32_t k = 0; k < qq - 1; ++k) {
        std::uint32_t idx = t->exp[k];
        std::uint32_t d0 = idx % p;
        std::uint32_t s = d0 == p - 1 ? idx - (p - 1) : idx + 1;
        t->zech[k] = s == 0 ? kNoLog : t->log[s];
      }
    }
    tables = t;
    std::lock_guard<std::mutex> lock(cache_mutex());
    cache().emplace(key, tables);
  }

  Field f;
  f.t_ = tables;
  f.p_ = p;
  f.e_ = e;
  f.q_ = static_cast<std::uint32_t>(q);
  f.exp_ = tables->exp.data();
  f.log_ = tables->log.data();
  f.zech_ = tables->zech.empty() ? nullptr : tables->zech.data();
  f.neg_ = tables->neg.data();
  f.chi_ = tables->chi.data();
  for (std::uint32_t a = 1; a < f.q_; ++a)
    if (f.chi_[a] < 0) {
      f.nonsquare_ = a;
      break;
    }
  return f;
}

const std::vector<std::uint32_t>& Field::modulus() const { return t_->modulus; }

Elem Field::inv(Elem a) const {
  if (a.v == 0) throw UsageError("inverse of zero");
  std::uint32_t l = log_[a.v];
  return {exp_[l == 0 ? 0 : (q_ - 1) - l]};
}

Elem Field::pow(Elem a, std::uint64_t k) const {
  if (k == 0) return one();
  if (a.v == 0) return zero();
  std::uint64_t l = (std::uint64_t(log_[a.v]) * (k % (q_ - 1))) % (q_ - 1);
  return {exp_[l]};
}

std::optional<Elem> Field::sqrt(Elem a) const {
  if (a.v == 0) return zero();
  std::uint32_t l = log_[a.v];
  if (l % 2 != 0) return std::nullopt;
  Elem r{exp_[l / 2]};
  Elem s = neg(r);
  return s.v < r.v ? s : r;
}

std::vector<std::uint32_t> Field::coords(Elem a) const { return to_coords(a.v, p_, e_); }

Elem Field::from_coords(const std::vector<std::uint32_t>& c) const {
  if (c.size() > e_) throw UsageError("too many coordinates");
  Coords cc(c);
  cc.resize(e_, 0);
  for (auto x : cc)
    if (x >= p_) throw UsageError("coordinate out of range");
  return {to_index(cc, p_)};
}

bool operator==(const Field& a, const Field& b) {
  return a.p_ == b.p_ && a.e_ == b.e_ && (a.t_ == b.t_ || a.modulus() == b.modulus());
}

std::string field_header(const Field& f) {
  std::ostringstream os;
  os << "q=" << f.q();
  if (f.degree() > 1) {
    os << ";mod=";
    const auto& m = f.modulus();
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  }
  return os.str();
}

namespace {
std::uint64_t parse_uint(const std::string& s) {
  if (s.empty()) throw UsageError("expected an integer");
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw UsageError("malformed integer '" + s + "'");
    v = v * 10 + static_cast<unsigned>(c - '0');
    if (v > (1ull << 40)) throw UsageError("integer out of range");
  }
  return v;
}
}  // namespace

Field parse_field_header(const std::string& text) {
  std::string qpart = text, modpart;
  auto semi = text.find(';');
  if (semi != std::string::npos) {
    qpart = text.substr(0, semi);
    modpart = text.substr(semi + 1);
  }
  if (qpart.rfind("q=", 0) != 0) throw UsageError("field header must start with q=");
  auto pe = prime_power(parse_uint(qpart.substr(2)));
  if (!pe) throw UsageError("q must be a prime power");
  std::optional<std::vector<std::uint32_t>> mod;
  if (!modpart.empty()) {
    if (modpart.rfind("mod=", 0) != 0) throw UsageError("expected mod= in field header");
    std::vector<std::uint32_t> m;
    std::stringstream ss(modpart.substr(4));
    std::string tok;
    while (std::getline(ss, tok, ',')) m.push_back(static_cast<std::uint32_t>(parse_uint(tok)));
    mod = m;
  }
  return Field::make(pe->first, pe->second, mod);
}

}  // namespace ffc
