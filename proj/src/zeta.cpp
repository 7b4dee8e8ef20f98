#include "ffc/zeta.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "ffc/enumerate.hpp"
#include "ffc/extension.hpp"
#include "ffc/factor.hpp"
#include "ffc/residue.hpp"

namespace ffc {

std::string to_string(InfinityType t) {
  switch (t) {
    case InfinityType::Ramified:
      return "ramified";
    case InfinityType::Split:
      return "split";
    case InfinityType::Inert:
      return "inert";
  }
  return "?";
}

InfinityType infinity_type(const Field& F, const Poly& D) {
  if (D.is_zero()) throw UsageError("infinity_type of zero");
  if (D.degree() % 2 == 1) return InfinityType::Ramified;
  return F.chi(D.lead()) > 0 ? InfinityType::Split : InfinityType::Inert;
}

namespace {
std::vector<int> infinite_degrees_of(InfinityType t) {
  switch (t) {
    case InfinityType::Ramified:
      return {1};
    case InfinityType::Split:
      return {1, 1};
    case InfinityType::Inert:
      return {2};
  }
  return {1};
}

Int ipow(std::uint64_t q, int k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, static_cast<unsigned long>(k));
  return r;
}
}  // namespace

RationalFn CurveZeta::zeta() const {
  IntPoly den = IntPoly{1, -1} * IntPoly{1, -static_cast<long>(q)};
  return RationalFn(lpoly, den);
}

RationalFn CurveZeta::affine_zeta() const {
  IntPoly extra{1};
  for (int d : infinite_degrees) extra = extra * (IntPoly{1} - IntPoly::monomial(1, d));
  return zeta() * RationalFn::polynomial(extra);
}

RationalFn zeta_rational_base(const Field& F) { return rational_curve_zeta(F).zeta(); }

CurveZeta rational_curve_zeta(const Field& F) {
  CurveZeta z;
  z.q = F.q();
  return z;
}

Int hyperelliptic_point_count(const Field& F, const Poly& D, unsigned i, Exec exec) {
  const ConstantExtension& ext = constant_extension(F, i);
  Poly Dbig = ext.map(D);
  Int qi = ipow(F.q(), static_cast<int>(i));
  Int affine = qi + Int(static_cast<long>(character_sum(ext.big, Dbig, exec)));
  long inf = D.degree() % 2 == 1 ? 1 : 1 + ext.big.chi(Dbig.lead());
  return affine + inf;
}

CurveZeta hyperelliptic_lpoly(const Field& F, const Poly& D, const LpolyOptions& opt) {
  if (D.degree() < 1) throw UsageError("hyperelliptic_lpoly needs deg D >= 1");
  if (!is_squarefree(F, D)) throw UsageError("hyperelliptic_lpoly needs square-free D");
  CurveZeta z;
  z.q = F.q();
  z.genus = (D.degree() - 1) / 2;
  z.infinite_degrees = infinite_degrees_of(infinity_type(F, D));
  const int g = z.genus;
  const int imax = opt.count_all ? 2 * g : g;
  std::vector<Int> s(static_cast<std::size_t>(imax) + 1, Int(0));
  for (int i = 1; i <= imax; ++i)
    s[static_cast<std::size_t>(i)] =
        ipow(F.q(), i) + 1 - hyperelliptic_point_count(F, D, static_cast<unsigned>(i), opt.exec);
  std::vector<Int> b(static_cast<std::size_t>(2 * g) + 1, Int(0));
  b[0] = 1;
  for (int k = 1; k <= g; ++k) {
    Int acc = 0;
    for (int j = 1; j <= k; ++j) acc += s[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
    if (acc % k != 0) throw ConsistencyError("Newton identity produced a non-integer coefficient");
    b[static_cast<std::size_t>(k)] = -acc / k;
  }
  for (int i = 0; i < g; ++i) b[static_cast<std::size_t>(2 * g - i)] = ipow(F.q(), g - i) * b[static_cast<std::size_t>(i)];
  z.lpoly = IntPoly(b);
  if (opt.count_all) {
    // Power sums implied by the completed polynomial must match every count.
    std::vector<Int> t(static_cast<std::size_t>(imax) + 1, Int(0));
    for (int k = 1; k <= imax; ++k) {
      Int acc = -Int(k) * z.lpoly[k];
      for (int j = 1; j < k; ++j) acc -= t[static_cast<std::size_t>(j)] * z.lpoly[k - j];
      t[static_cast<std::size_t>(k)] = acc;
      if (t[static_cast<std::size_t>(k)] != s[static_cast<std::size_t>(k)])
        throw ConsistencyError("point count over F_q^" + std::to_string(k) + " disagrees with the L-polynomial");
    }
  }
  return z;
}

RhCheck rh_check(const CurveZeta& z, double tol) {
  RhCheck r;
  const int g = z.genus;
  r.symmetric = z.lpoly.degree() == 2 * g && z.lpoly[0] == 1;
  for (int i = 0; r.symmetric && i <= g; ++i)
    if (z.lpoly[2 * g - i] != ipow(z.q, g - i) * z.lpoly[i]) r.symmetric = false;
  if (g > 0 && z.lpoly.degree() >= 1) {
    // Inverse roots are the roots of the reversed square-free part.
    IntPoly sf = squarefree_part(z.lpoly);
    const int n = sf.degree();
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
    const double lead = sf[0].get_d();  // reversed polynomial: leading coeff is sf[0]
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -sf[n - i].get_d() / lead;
    Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
    const double sq = std::sqrt(static_cast<double>(z.q));
    for (int i = 0; i < n; ++i) r.max_deviation = std::max(r.max_deviation, std::abs(std::abs(es.eigenvalues()[i]) - sq));
  }
  r.ok = r.symmetric && r.max_deviation < tol;
  return r;
}

bool check_rh(const CurveZeta& z, double tol) { return rh_check(z, tol).ok; }

IntPoly character_lpoly(const Field& F, const Poly& f) {
  if (f.degree() < 1) throw UsageError("character_lpoly needs a nonconstant modulus");
  std::vector<Int> c;
  for (int k = 0; k < f.degree(); ++k) {
    const std::int64_t total = static_cast<std::int64_t>(monic_count(F, k));
    long sum = 0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
    for (std::int64_t i = 0; i < total; ++i)
      sum += residue_symbol(F, f, monic_from_index(F, k, static_cast<std::uint64_t>(i)));
    c.emplace_back(sum);
  }
  return IntPoly(std::move(c));
}

QuadCharacterL dirichlet_lpoly(const Field& F, const Poly& g) {
  if (g.degree() < 1 || !g.is_monic()) throw UsageError("dirichlet_lpoly needs monic g of degree >= 1");
  if (!is_squarefree(F, g)) throw UsageError("dirichlet_lpoly needs square-free g");
  QuadCharacterL r;
  r.conductor = g;
  r.lpoly_affine = character_lpoly(F, g);
  r.infinite_type = infinity_type(F, g);
  if (r.lpoly_affine.degree() != g.degree() - 1 || r.lpoly_affine[0] != 1)
    throw ConsistencyError("affine L-polynomial has unexpected degree");
  return r;
}

RationalFn character_lfunction(const Field& F, const Poly& f) {
  if (f.is_zero()) throw UsageError("character of zero");
  if (f.degree() == 0) return RationalFn(IntPoly{1}, IntPoly{1, -static_cast<long>(F.chi(f.lead())) * static_cast<long>(F.q())});
  return RationalFn::polynomial(character_lpoly(F, f));
}

Rat residue_at_1(const CurveZeta& z) {
  Rat u(1, static_cast<unsigned long>(z.q));
  return z.lpoly.eval(u) / (1 - u);
}

Rat residue_affine(const CurveZeta& z) {
  return pole_coefficient(z.affine_zeta(), Rat(1, static_cast<unsigned long>(z.q)));
}

Rat zeta_value(const CurveZeta& z) {
  Rat u(1, static_cast<unsigned long>(z.q * z.q));
  return z.lpoly.eval(u) / ((1 - u) * (1 - Rat(static_cast<unsigned long>(z.q)) * u));
}

Rat zeta_value_affine(const CurveZeta& z) {
  return z.affine_zeta().eval(Rat(1, static_cast<unsigned long>(z.q * z.q)));
}

bool within_class_number_bound(const Int& h, std::uint64_t q, int genus) {
  // (1 + sqrt q)^(2g) = A + B sqrt q
  Int A = 0, B = 0;
  for (int k = 0; k <= 2 * genus; ++k) {
    Int binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * genus), static_cast<unsigned long>(k));
    if (k % 2 == 0)
      A += binom * ipow(q, k / 2);
    else
      B += binom * ipow(q, (k - 1) / 2);
  }
  Int d = h - A;
  return d <= 0 || d * d <= B * B * Int(static_cast<unsigned long>(q));
}

Int class_number(const CurveZeta& z) {
  Int h = 0;
  for (auto& c : z.lpoly.coeffs()) h += c;
  if (h < 1 || !within_class_number_bound(h, z.q, z.genus))
    throw ConsistencyError("class number " + h.get_str() + " violates the bound (1 + sqrt q)^(2g)");
  return h;
}

}  // namespace ffc
