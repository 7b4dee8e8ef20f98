#include "ffc/quartcensus.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ffc/enumerate.hpp"
#include "ffc/factor.hpp"
#include "ffc/residue.hpp"

namespace ffc {

namespace {

Int ipow(std::uint64_t q, int k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, static_cast<unsigned long>(k));
  return r;
}

int floordiv(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

// Polynomial of degree < len with coefficient digits of i (zero allowed).
Poly poly_from_index(const Field& F, int len, std::uint64_t i) {
  std::vector<Elem> c(static_cast<std::size_t>(len));
  for (auto& e : c) {
    e = Elem{static_cast<std::uint32_t>(i % F.q())};
    i /= F.q();
  }
  return Poly(std::move(c));
}

std::uint64_t box_size(const Field& F, int h) {
  if (h < 0) return 1;
  double s = std::pow(static_cast<double>(F.q()), h + 1);
  if (s > 1e15) throw GuardError("Kummer box too large");
  return static_cast<std::uint64_t>(std::llround(s));
}

// Unit of the residue class ring only through the leading coefficient.
bool normalized_lead(const Field& F, Elem c) { return c == F.one() || c == F.nonsquare(); }

int raw_value(const TowerField& K, const GenusCharacter& chi, const PrimeIdeal& P) {
  const Field& F = K.F;
  switch (P.kind) {
    case PrimeKind::Inert:
      return 1;
    case PrimeKind::Split:
      return residue_symbol(F, chi.f1, P.p);
    case PrimeKind::Ramified: {
      const Poly& unit = divides(F, P.p, chi.f1) ? chi.f2 : chi.f1;
      return residue_symbol(F, unit, P.p);
    }
  }
  return 1;
}

using IdealFactors = std::vector<std::pair<PrimeIdeal, int>>;

// Factorizations of the principal ideals (alpha), alpha in a small box.
std::vector<IdealFactors> principal_sample(const TowerField& K) {
  const Field& F = K.F;
  int h = 0;
  while (box_size(F, h + 1) * box_size(F, h + 1) <= 4096) ++h;
  const std::uint64_t n = box_size(F, h);
  PrimeCache cache;
  std::vector<IdealFactors> out;
  for (std::uint64_t ia = 0; ia < n; ++ia)
    for (std::uint64_t ib = 0; ib < n; ++ib) {
      KElem alpha{poly_from_index(F, h + 1, ia), poly_from_index(F, h + 1, ib)};
      if (!alpha.is_zero()) out.push_back(ideal_factorization(K, alpha, &cache));
    }
  return out;
}

// Make chi trivial on the sampled principal ideals by negating its value on
// some ramified primes. Rows of the GF(2) system are kept in echelon form
// keyed by their top bit.
void reconcile(const TowerField& K, GenusCharacter& chi, const std::vector<Poly>& ram,
               const std::vector<IdealFactors>& sample) {
  const int r = static_cast<int>(ram.size());
  std::map<int, std::pair<std::uint64_t, int>> rows;
  for (const IdealFactors& fac : sample) {
    std::uint64_t mask = 0;
    int rhs = 0;
    for (auto& [P, e] : fac) {
      if (e % 2 == 0) continue;
      if (P.kind == PrimeKind::Ramified) mask ^= std::uint64_t{1} << (std::find(ram.begin(), ram.end(), P.p) - ram.begin());
      if (raw_value(K, chi, P) < 0) rhs ^= 1;
    }
    while (mask) {
      int top = 63 - __builtin_clzll(mask);
      auto it = rows.find(top);
      if (it == rows.end()) {
        rows.emplace(top, std::make_pair(mask, rhs));
        break;
      }
      mask ^= it->second.first;
      rhs ^= it->second.second;
    }
    if (!mask && rhs) throw ConsistencyError("genus character " + to_text(chi.f1) + " is nontrivial on a principal ideal");
  }
  // back substitution, free variables zero
  std::vector<int> x(static_cast<std::size_t>(r), 0);
  for (auto& [top, row] : rows) {
    int v = row.second;
    for (int j = 0; j < top; ++j)
      if ((row.first >> j) & 1) v ^= x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(top)] = v;
  }
  for (int j = 0; j < r; ++j)
    if (x[static_cast<std::size_t>(j)]) chi.flips.push_back(ram[static_cast<std::size_t>(j)]);
}

std::string cycle_pattern(std::vector<int> d) {
  std::sort(d.rbegin(), d.rend());
  std::string s;
  for (int k : d) s += (s.empty() ? "" : ",") + std::to_string(k);
  return s;
}

}  // namespace

std::vector<GenusCharacter> genus_characters(const TowerField& K, bool reconciled) {
  const Field& F = K.F;
  std::vector<Poly> ps;
  for (auto& [p, e] : factor(F, K.g).factors) ps.push_back(p);
  const std::size_t w = ps.size();
  if (w > 20) throw GuardError("too many prime factors for genus characters");
  const Elem c = K.twist;
  std::set<std::pair<Poly, Poly>> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w); ++mask) {
    Poly fS = Poly::one();
    for (std::size_t i = 0; i < w; ++i)
      if ((mask >> i) & 1) fS = mul(F, fS, ps[i]);
    if (fS.degree() % 2 != 0) continue;
    Poly rest = exact_div(F, K.g, fS);
    std::vector<Elem> kappas{F.one()};
    if (K.inf == InfinityType::Inert) kappas.push_back(F.nonsquare());
    for (Elem kappa : kappas) {
      Poly f1 = scale(F, fS, kappa);
      Poly f2 = scale(F, rest, F.div(c, kappa));
      if (f2 < f1) std::swap(f1, f2);
      seen.emplace(f1, f2);
    }
  }
  std::vector<GenusCharacter> out;
  out.push_back({Poly::one(), K.D, {}});
  for (auto& [f1, f2] : seen)
    if (!(f1.is_one() && f2 == K.D)) out.push_back({f1, f2, {}});
  if (reconciled && out.size() > 1) {
    auto sample = principal_sample(K);
    for (auto& chi : out)
      if (!chi.trivial()) reconcile(K, chi, ps, sample);
  }
  return out;
}

int character_value(const TowerField& K, const GenusCharacter& chi, const PrimeIdeal& P) {
  int v = raw_value(K, chi, P);
  if (P.kind == PrimeKind::Ramified && std::find(chi.flips.begin(), chi.flips.end(), P.p) != chi.flips.end()) v = -v;
  return v;
}

RationalFn character_lfunction_over_K(const TowerField& K, const GenusCharacter& chi, LMethod method) {
  const Field& F = K.F;
  RationalFn fact = character_lfunction(F, chi.f1) * character_lfunction(F, chi.f2);
  if (method == LMethod::Factorization) return fact;
  int B = 0;
  IntPoly den{1};
  const long q = static_cast<long>(F.q());
  for (const Poly* f : {&chi.f1, &chi.f2}) {
    if (f->degree() > 0)
      B += f->degree() - 1;
    else
      den = den * IntPoly{1, -F.chi(f->coeff(0)) * q};
  }
  const int Bmax = B + 2;
  std::vector<Int> s(static_cast<std::size_t>(Bmax + 1), 0);
  s[0] = 1;
  for (const PrimeIdeal& P : primes_up_to(K, Bmax)) {
    const int v = character_value(K, chi, P);
    if (v == 0) continue;
    const int d = P.degree();
    // multiply by 1 / (1 - v u^d)
    for (int k = d; k <= Bmax; ++k) s[static_cast<std::size_t>(k)] += v * s[static_cast<std::size_t>(k - d)];
  }
  IntPoly t = IntPoly(s) * den;
  for (int k = B + 1; k <= Bmax; ++k)
    if (t[k] != 0) throw ConsistencyError("Euler product of " + to_text(chi.f1) + " does not terminate at degree " + std::to_string(B));
  std::vector<Int> num;
  for (int k = 0; k <= B; ++k) num.push_back(t[k]);
  RationalFn euler(IntPoly(num), den);
  if (!(euler.num() * fact.den() == fact.num() * euler.den()))
    throw ConsistencyError("Euler product and factorization disagree for " + to_text(chi.f1) + " * " + to_text(chi.f2));
  return euler;
}

QuadBase quad_base(const TowerField& K, LMethod method) {
  QuadBase b;
  b.description = K.label();
  b.q = K.F.q();
  b.genus = K.genus;
  b.zeta_affine = K.zeta_affine;
  b.curve = K.curve;
  b.unit_classes = K.unit_classes();
  for (const auto& chi : genus_characters(K, method == LMethod::Euler)) b.characters.push_back(character_lfunction_over_K(K, chi, method));
  const RationalFn& triv = b.characters.front();
  if (!(triv.num() * K.zeta_affine.den() == K.zeta_affine.num() * triv.den()))
    throw ConsistencyError("trivial character L-function differs from the affine zeta of " + K.label());
  return b;
}

Int quad_count_over_K(const TowerField& K, int m, LMethod method) { return quad_count_series(quad_base(K, method), m); }

std::string to_string(QuarticLabel l) {
  switch (l) {
    case QuarticLabel::D4:
      return "D4";
    case QuarticLabel::C4:
      return "C4";
    case QuarticLabel::V4:
      return "V4";
  }
  return "?";
}

QuarticLabel classify_tower(const TowerField& K, const KElem& alpha) {
  const Field& F = K.F;
  if (is_square(K, alpha)) throw UsageError("alpha is a square in K");
  Poly n = knorm(K, alpha);
  if (poly_sqrt(F, n)) return QuarticLabel::V4;
  auto [quot, r] = divmod(F, n, K.D);
  if (r.is_zero() && poly_sqrt(F, quot)) return QuarticLabel::C4;
  return QuarticLabel::D4;
}

std::vector<Int> KummerCensus::counts() const {
  std::vector<Int> out(static_cast<std::size_t>(m_max + 1), 0);
  for (auto& c : classes) out[static_cast<std::size_t>(c.m)] += 1;
  return out;
}

std::pair<int, int> certified_heights(const TowerField& K, int m) {
  if (K.constant_extension()) return {m / 2, m / 2};
  const int dD = K.D.degree();
  if (K.inf != InfinityType::Split) {
    const int dinf = K.inf == InfinityType::Ramified ? 1 : 2;
    const int M = m + 2 * (K.genus + dinf - 1);
    return {floordiv(M, 2), floordiv(M - dD, 2)};
  }
  auto unit = fundamental_unit(K);
  if (!unit) throw GuardError("fundamental unit not found for " + K.label());
  const int hA = (m + 2 * K.genus) / 2 + unit->second;
  return {hA, hA - dD / 2};
}

KummerCensus kummer_census(const TowerField& K, int m_max, std::optional<std::pair<int, int>> heights) {
  const Field& F = K.F;
  auto cert = certified_heights(K, m_max);
  KummerCensus out;
  out.m_max = m_max;
  auto [hA, hB] = heights.value_or(cert);
  out.height_a = hA;
  out.height_b = hB;
  out.certified = hA >= cert.first && hB >= cert.second;
  const std::uint64_t na = hA >= 0 ? box_size(F, hA) : 1;
  const std::uint64_t nb = hB >= 0 ? box_size(F, hB) : 1;
  check_exhaustion_guard(na * nb, "Kummer census");
  PrimeCache cache;
  std::map<std::vector<PrimeIdeal>, std::vector<std::size_t>> groups;
  for (std::uint64_t ib = 0; ib < nb; ++ib) {
    Poly b = hB >= 0 ? poly_from_index(F, hB + 1, ib) : Poly();
    if (!b.is_zero() && !normalized_lead(F, b.lead())) continue;
    for (std::uint64_t ia = 0; ia < na; ++ia) {
      Poly a = hA >= 0 ? poly_from_index(F, hA + 1, ia) : Poly();
      if (b.is_zero() && (a.is_zero() || !normalized_lead(F, a.lead()))) continue;
      KElem alpha{a, b};
      std::vector<PrimeIdeal> support;
      int m = 0;
      for (auto& [P, e] : ideal_factorization(K, alpha, &cache))
        if (e % 2 == 1) {
          support.push_back(P);
          m += P.degree();
        }
      if (m > m_max) continue;
      auto& members = groups[support];
      bool fresh = true;
      for (std::size_t j : members)
        if (is_square(K, kmul(K, alpha, out.classes[j].alpha))) {
          fresh = false;
          break;
        }
      if (!fresh) continue;
      members.push_back(out.classes.size());
      out.classes.push_back({alpha, m, is_square(K, alpha)});
    }
  }
  return out;
}

SplittingOracle splitting_oracle(const TowerField& K, const KElem& alpha, int max_deg, int min_primes) {
  const Field& F = K.F;
  if (F.degree() != 1) throw UsageError("splitting oracle needs prime q");
  if (is_square(K, alpha)) throw UsageError("alpha is a square in K");
  // X^4 + c2 X^2 + c0 with root sqrt(alpha) (or sqrt(a) + sqrt(D) when b = 0)
  Poly c2, c0;
  const Elem m2 = F.from_int(-2);
  if (!alpha.b.is_zero()) {
    c2 = scale(F, alpha.a, m2);
    c0 = knorm(K, alpha);
  } else {
    c2 = scale(F, add(F, alpha.a, K.D), m2);
    Poly diff = sub(F, alpha.a, K.D);
    c0 = mul(F, diff, diff);
  }
  SplittingOracle out;
  for (int d = 1; d <= max_deg && out.primes_tested < 4 * min_primes; ++d) {
    for (const Poly& p : irreducibles(F, d)) {
      std::vector<std::uint32_t> mod;
      for (int i = 0; i <= d; ++i) mod.push_back(p.coeff(i).v);
      Field R = d == 1 ? F : Field::make_large(F.p(), static_cast<unsigned>(d), mod);
      auto reduce = [&](const Poly& c) {
        Poly r = rem(F, c, p);
        std::uint32_t v = 0, base = 1;
        for (int i = 0; i <= r.degree(); ++i, base *= F.q()) v += r.coeff(i).v * base;
        return Elem{v};
      };
      Poly f(std::vector<Elem>{reduce(c0), Elem{0}, reduce(c2), Elem{0}, Elem{1}});
      if (!is_squarefree(R, f)) continue;
      std::vector<int> degs;
      for (auto& [fac, e] : factor(R, f).factors)
        for (int k = 0; k < e; ++k) degs.push_back(fac.degree());
      std::string pat = cycle_pattern(degs);
      if (pat == "3,1") throw ConsistencyError("cycle type (3,1) cannot occur in a quadratic tower");
      ++out.patterns[pat];
      ++out.primes_tested;
    }
  }
  if (out.patterns.count("2,1,1"))
    out.label = QuarticLabel::D4;
  else if (out.patterns.count("4"))
    out.label = QuarticLabel::C4;
  else
    out.label = QuarticLabel::V4;
  out.certified = out.primes_tested >= min_primes;
  return out;
}

Int tower_sum(const Field& F, int N, LMethod method) {
  Int total = 0;
  for (int d = 0; 2 * d <= N; ++d)
    for (const TowerField& K : quadratic_fields(F, d)) total += quad_count_over_K(K, N - 2 * d, method) - (N == 2 * d ? 1 : 0);
  return total;
}

Int count_v4(const Field& F, int N) {
  struct Cls {
    Elem c;
    Poly g;
  };
  std::vector<Cls> cls;
  for (int d = 0; d <= N / 2; ++d) {
    if (d == 0) {
      cls.push_back({F.nonsquare(), Poly::one()});
      continue;
    }
    for (const Poly& g : squarefree_monic_polys(F, d)) {
      cls.push_back({F.one(), g});
      cls.push_back({F.nonsquare(), g});
    }
  }
  Int pairs = 0;
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = i + 1; j < cls.size(); ++j) {
      const int d1 = cls[i].g.degree(), d2 = cls[j].g.degree();
      Poly h = gcd(F, cls[i].g, cls[j].g);
      const int d3 = d1 + d2 - 2 * h.degree();
      if (d1 + d2 + d3 == N) ++pairs;
    }
  if (pairs % 3 != 0) throw ConsistencyError("V4 pair count not divisible by 3");
  return pairs / 3;
}

std::vector<TowerRow> tower_census(const Field& F, int N_max, LMethod method) {
  std::vector<TowerRow> rows(static_cast<std::size_t>(N_max + 1));
  for (int N = 0; N <= N_max; ++N) rows[static_cast<std::size_t>(N)].N = N;
  bool certified = true;
  for (int d = 0; 2 * d <= N_max; ++d)
    for (const TowerField& K : quadratic_fields(F, d)) {
      const int m_max = N_max - 2 * d;
      auto counts = quad_count_series_all(quad_base(K, method), m_max);
      KummerCensus kc = kummer_census(K, m_max);
      certified = certified && kc.certified;
      for (int m = 0; m <= m_max; ++m) rows[static_cast<std::size_t>(2 * d + m)].tower_sum += counts[static_cast<std::size_t>(m)] - (m == 0 ? 1 : 0);
      for (const KummerClass& c : kc.classes) {
        if (c.trivial) continue;
        TowerRow& r = rows[static_cast<std::size_t>(2 * d + c.m)];
        r.oracle_towers += 1;
        switch (classify_tower(K, c.alpha)) {
          case QuarticLabel::D4:
            r.oracle_d4_towers += 1;
            break;
          case QuarticLabel::C4:
            r.oracle_c4_towers += 1;
            break;
          case QuarticLabel::V4:
            r.oracle_v4_towers += 1;
            break;
        }
      }
    }
  for (TowerRow& r : rows) {
    r.oracle_certified = certified;
    r.c4 = r.oracle_c4_towers;
    r.v4 = count_v4(F, r.N);
    Int rest = r.tower_sum - r.c4 - 3 * r.v4;
    r.parity_ok = rest % 2 == 0;
    r.d4 = rest / 2;
    r.oracle_ok = r.oracle_towers == r.tower_sum && r.oracle_v4_towers == 3 * r.v4 && r.oracle_d4_towers == 2 * r.d4;
  }
  return rows;
}

int disc_tower(int dF_exp, int d_rel_exp, int degree) { return degree * dF_exp + d_rel_exp; }
int disc_tower_variant_a(int dF_exp, int d_rel_exp) { return dF_exp + 2 * d_rel_exp; }
int disc_tower_variant_b(int dF_exp, int d_rel_exp) { return d_rel_exp + 4 * dF_exp; }

int full_rel_disc_quadratic(const Poly& D) {
  if (D.degree() <= 0) return 0;
  return D.degree() + (D.degree() % 2);
}

D4Constant d4_constant_finite(const Field& F, int J, int parity) {
  const double q = F.q();
  D4Constant out;
  out.J = J;
  out.partial = 0;
  for (int d = 0; d <= J; ++d) {
    Rat scale(1, 1);
    scale /= Rat(ipow(F.q(), 2 * d));
    for (const TowerField& K : quadratic_fields(F, d)) {
      auto [plus, minus] = census_poles(quad_base(K, LMethod::Factorization));
      out.partial += (parity % 2 == 0 ? Rat(plus + minus) : Rat(plus - minus)) * scale;
    }
  }
  out.partial /= 2;
  const double C = 8 * std::pow(1 + 1 / q, 2) / std::pow(1 - 1 / (q * q), 2);
  const double rho = (1 + std::pow(q, -0.5)) / (1 - std::pow(q, -1.5));
  const double x = rho / q;
  out.tail_bound = C * std::pow(x, J + 1) / (1 - x);
  return out;
}

Rat d4_main_term_finite(const Field& F, int N) {
  Rat total = 0;
  for (int d = 0; 2 * d <= N; ++d) {
    const int m = N - 2 * d;
    for (const TowerField& K : quadratic_fields(F, d)) {
      auto [plus, minus] = census_poles(quad_base(K, LMethod::Factorization));
      total += (m % 2 == 0 ? Rat(plus + minus) : Rat(plus - minus)) * Rat(ipow(F.q(), m));
    }
  }
  return total / 2;
}

D4Constant d4_constant_literal(const Field& F, int J, bool use_zeta_K) {
  const std::uint64_t qi = F.q();
  const double q = static_cast<double>(qi);
  const Rat zF2 = zeta_value(rational_curve_zeta(F));
  const Rat weight = use_zeta_K ? Rat(1) : Rat(1, 2);
  D4Constant out;
  out.J = J;
  out.partial = 0;
  for (int j = -1; j <= J; ++j) {
    const int genus = j + 1;
    // q^(-4j)
    Rat qpow = j < 0 ? Rat(ipow(qi, 4)) : Rat(1) / Rat(ipow(qi, 4 * j));
    std::vector<int> degrees{2 * genus + 1, 2 * genus + 2};
    if (genus == 0) degrees.insert(degrees.begin(), 0);
    for (int d : degrees)
      for (const TowerField& K : quadratic_fields(F, d)) {
        const Rat rK = pole_coefficient(K.zeta_curve, Rat(1, static_cast<unsigned long>(qi)));
        const Rat z2 = use_zeta_K ? K.zeta_curve.eval(Rat(1, static_cast<unsigned long>(qi * qi))) : zF2;
        out.partial += weight * rK * qpow / z2;
      }
  }
  // Weil bounds: r_K <= (1 + q^-1/2)^(2g) q/(q-1), zeta_K(2) >= (1 - q^-3/2)^(2g),
  // at most 4 q^(2g+2) fields of genus g.
  const double w = use_zeta_K ? 1.0 : 0.5;
  const double zmin = use_zeta_K ? 1.0 : zF2.get_d();
  const double R = std::pow(1 + std::pow(q, -0.5), 2) / (use_zeta_K ? std::pow(1 - std::pow(q, -1.5), 2) : 1.0);
  double tail = 0;
  for (int j = J + 1; j <= J + 200; ++j) {
    const int genus = j + 1;
    const double log_term = (2 * genus + 3 - 4 * j) * std::log(q) + genus * std::log(R);
    tail += w * 4 * std::exp(log_term) / (q - 1) / zmin;
  }
  out.tail_bound = tail;
  return out;
}

}  // namespace ffc
