#include "ffc/quadcensus.hpp"

#include <cmath>

#include "ffc/enumerate.hpp"
#include "ffc/factor.hpp"

namespace ffc {

namespace {

Int ipow(std::uint64_t q, int k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, static_cast<unsigned long>(k));
  return r;
}

bool power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

RationalFn series_of(const QuadBase& base) {
  if (!power_of_two(base.cl2()))
    throw UsageError("character list has " + std::to_string(base.cl2()) + " entries, not a power of 2");
  RationalFn sum = base.characters.front();
  for (std::size_t i = 1; i < base.characters.size(); ++i) sum = sum + base.characters[i];
  RationalFn denom = base.zeta_affine.substitute_power(2);
  return RationalFn::polynomial(IntPoly{static_cast<long>(base.unit_classes)}) * sum / denom;
}

}  // namespace

QuadBase rational_base(const Field& F) {
  QuadBase b;
  b.description = "rational";
  b.q = F.q();
  b.curve = rational_curve_zeta(F);
  b.zeta_affine = b.curve->affine_zeta();
  b.unit_classes = 2;
  b.characters = {b.zeta_affine};
  return b;
}

std::vector<Int> quad_count_series_all(const QuadBase& base, int N_max) {
  auto s = series_of(base).series(N_max);
  std::vector<Int> out;
  for (auto& c : s) {
    if (c.get_den() != 1 || c < 0) throw ConsistencyError("census coefficient " + to_string(c) + " is not a count");
    out.push_back(c.get_num());
  }
  return out;
}

Int quad_count_series(const QuadBase& base, int N) {
  if (N < 0) throw UsageError("negative discriminant exponent");
  return quad_count_series_all(base, N)[static_cast<std::size_t>(N)];
}

Int quad_count_bruteforce(const Field& F, int N, Exec exec) {
  if (N < 0) throw UsageError("negative discriminant exponent");
  if (N == 0) return 2;
  // a*u is square-free iff a is, so the sieve flags serve both twists.
  OmegaSieve s = omega_sieve(F, N, 0, exec);
  const int twists = 2;  // u in {1, eps}
  Int count = 0;
  for (std::uint8_t flag : s.squarefree)
    for (int u = 0; u < twists; ++u) count += flag;
  return count;
}

Int quad_count_bruteforce_reference(const Field& F, int N) {
  if (N < 0) throw UsageError("negative discriminant exponent");
  check_exhaustion_guard(monic_count(F, N), "quadratic brute force");
  const Elem twists[2] = {F.one(), F.nonsquare()};
  Int count = 0;
  MonicStream s(F, N);
  Poly a;
  while (s.next(a))
    for (Elem u : twists)
      if (is_squarefree(F, scale(F, a, u))) ++count;
  return count;
}

Int quad_count_closed_form(std::uint64_t q, int N) {
  if (N == 0) return 2;
  if (N == 1) return 2 * Int(static_cast<unsigned long>(q));
  return 2 * (ipow(q, N) - ipow(q, N - 1));
}

std::string to_string(MainTermVariant v) {
  switch (v) {
    case MainTermVariant::AffineFactor2:
      return "affine_factor2";
    case MainTermVariant::CurveFactor2:
      return "curve_factor2";
    case MainTermVariant::AffineLiteral:
      return "affine_literal";
    case MainTermVariant::CurveLiteral:
      return "curve_literal";
  }
  return "?";
}

Rat quad_main_term(const CurveZeta& z, int N, MainTermVariant v) {
  const bool affine = v == MainTermVariant::AffineFactor2 || v == MainTermVariant::AffineLiteral;
  const bool factor2 = v == MainTermVariant::AffineFactor2 || v == MainTermVariant::CurveFactor2;
  Rat r = affine ? residue_affine(z) : residue_at_1(z);
  Rat zeta2 = affine ? zeta_value_affine(z) : zeta_value(z);
  Rat out = Rat(ipow(z.q, N)) * r / zeta2;
  return factor2 ? 2 * out : out;
}

std::pair<Rat, Rat> census_poles(const QuadBase& base) {
  RationalFn f = series_of(base);
  Rat out[2] = {0, 0};
  for (int k = 0; k < 2; ++k) {
    Rat rho(k == 0 ? 1 : -1, static_cast<unsigned long>(base.q));
    if (f.den().eval(rho) == 0) out[k] = pole_coefficient(f, rho);
  }
  return {out[0], out[1]};
}

Rat quad_main_term_poles(const QuadBase& base, int N) {
  // c / (1 - u/rho) contributes c * rho^-N
  auto [plus, minus] = census_poles(base);
  Rat qN(ipow(base.q, N));
  return plus * qN + (N % 2 == 0 ? minus : -minus) * qN;
}

std::string to_string(EnvelopeVariant v) {
  switch (v) {
    case EnvelopeVariant::R12:
      return "R12";
    case EnvelopeVariant::R14:
      return "R14";
    case EnvelopeVariant::Thm12:
      return "thm12";
    case EnvelopeVariant::Uniform:
      return "uniform";
  }
  return "?";
}

double envelope_A() {
  const double t = 1.0 - std::exp(-1.0);
  return 1.0 / (t * t);
}

double envelope_B(std::uint64_t q) {
  const double qd = static_cast<double>(q);
  const double t = (1.0 + std::exp(-1.0) / std::sqrt(qd)) / (1.0 - std::exp(-2.0) * std::pow(qd, -1.5));
  return t * t;
}

double envelope_cq(std::uint64_t q) { return 2.0 / (1.0 - 1.0 / std::sqrt(static_cast<double>(q))); }

ErrorEnvelope quad_error_envelope(const CurveZeta& z, int N, EnvelopeVariant v) {
  ErrorEnvelope e;
  e.variant = v;
  e.A = envelope_A();
  e.B = envelope_B(z.q);
  e.c_q = envelope_cq(z.q);
  const double q = static_cast<double>(z.q);
  const double n = N / 2.0;
  const int g = z.genus;
  switch (v) {
    case EnvelopeVariant::R12:
      e.R = 1.0 / std::sqrt(q);
      e.value = 2.0 * std::pow(e.c_q, 2 * g) * (1.0 + 1.0 / std::sqrt(q)) * std::pow(q, n);
      break;
    case EnvelopeVariant::R14: {
      e.eps = 1.0 / std::log(q);
      e.R = std::pow(q, -0.25 - e.eps);
      const double bracket = std::pow(1.0 + std::pow(q, 0.25 - e.eps), 2 * g) * (1.0 + std::pow(q, -0.5 - e.eps)) *
                             (1.0 + std::pow(q, 0.75 - e.eps)) / std::pow(1.0 - std::pow(q, -e.eps), 2 * g);
      e.value = bracket * std::pow(q, (n + e.eps) / 2.0);
      break;
    }
    case EnvelopeVariant::Thm12:
      e.eps = 1.0 / std::log(q);
      e.R = std::pow(q, -0.25 - e.eps);
      e.value = std::pow(e.A, g) * std::pow(q, n / 2.0 + (2.0 * g + 1.0) / 4.0);
      break;
    case EnvelopeVariant::Uniform:
      return quad_uniform_bound(z, 1, N);
  }
  return e;
}

ErrorEnvelope quad_uniform_bound(const CurveZeta& z, std::size_t cl2, int N) {
  ErrorEnvelope e;
  e.variant = EnvelopeVariant::Uniform;
  e.A = envelope_A();
  e.B = envelope_B(z.q);
  e.c_q = envelope_cq(z.q);
  const double q = static_cast<double>(z.q);
  e.R = 1.0 / (std::exp(1.0) * q);
  e.value = static_cast<double>(cl2) * std::pow(e.B, 2 * z.genus) * std::pow(q, N + 1);
  return e;
}

CensusTable quad_census(const QuadBase& base, int N_max, const std::function<Int(int)>& oracle) {
  if (!base.curve) throw UsageError("census table needs a base with constant field F_q");
  const CurveZeta& z = *base.curve;
  CensusTable t;
  t.base = base.description;
  t.q = base.q;
  auto counts = quad_count_series_all(base, N_max);
  for (int N = 1; N <= N_max; ++N) {
    CensusRow r;
    r.N = N;
    r.count = counts[static_cast<std::size_t>(N)];
    r.main_term = quad_main_term(z, N, MainTermVariant::AffineFactor2);
    r.main_literal = quad_main_term(z, N, MainTermVariant::AffineLiteral);
    r.envelope_R12 = quad_error_envelope(z, N, EnvelopeVariant::R12).value;
    r.envelope_thm12 = quad_error_envelope(z, N, EnvelopeVariant::Thm12).value;
    r.uniform_bound = quad_uniform_bound(z, base.cl2(), N).value;
    r.main_poles = quad_main_term_poles(base, N);
    if (N % 2 == 0) {
      Rat gap = Rat(r.count) - r.main_poles;
      r.within_envelope = std::abs(gap.get_d()) <= r.envelope_R12;
    }
    if (oracle) {
      r.has_oracle = true;
      r.oracle_equal = oracle(N) == r.count;
    }
    t.rows.emplace(N, std::move(r));
  }
  return t;
}

}  // namespace ffc
