#include "ffc/ratfn.hpp"

#include <sstream>
#include <stdexcept>

#include "ffc/field.hpp"

namespace ffc {

namespace {

using QPoly = std::vector<Rat>;

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly to_q(const IntPoly& p) {
  QPoly r;
  for (auto& c : p.coeffs()) r.emplace_back(c);
  return r;
}

std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  if (b.empty()) throw UsageError("division by zero polynomial");
  trim(a);
  if (a.size() < b.size()) return {QPoly{}, a};
  const std::size_t db = b.size() - 1;
  QPoly q(a.size() - db);
  for (std::size_t k = a.size() - 1;; --k) {
    Rat t = a[k] / b.back();
    q[k - db] = t;
    if (t != 0)
      for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= t * b[i];
    if (k == db) break;
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat l = a.back();
    for (auto& c : a) c /= l;
  }
  return a;
}

// Scale a family of rational polynomials by one common positive rational so
// that all become integral with joint content 1.
std::vector<IntPoly> primitive_together(const std::vector<QPoly>& ps) {
  Int l = 1;
  for (auto& p : ps)
    for (auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<std::vector<Int>> ints;
  Int g = 0;
  for (auto& p : ps) {
    std::vector<Int> v;
    for (auto& c : p) {
      Rat s = c * l;
      v.push_back(s.get_num());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.back().get_mpz_t());
    }
    ints.push_back(std::move(v));
  }
  std::vector<IntPoly> out;
  for (auto& v : ints) {
    if (g != 0 && g != 1)
      for (auto& c : v) c /= g;
    out.emplace_back(std::move(v));
  }
  return out;
}

}  // namespace

IntPoly::IntPoly(std::initializer_list<long> c) {
  for (long v : c) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::monomial(const Int& c, int k) {
  std::vector<Int> v(static_cast<std::size_t>(k) + 1, Int(0));
  v.back() = c;
  return IntPoly(std::move(v));
}

Rat IntPoly::eval(const Rat& u) const {
  Rat acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * u + Rat(c_[i]);
  return acc;
}

IntPoly IntPoly::substitute_power(int k) const {
  if (c_.empty()) return *this;
  std::vector<Int> v(static_cast<std::size_t>(degree() * k) + 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * static_cast<std::size_t>(k)] = c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::scale_variable(const Int& c) const {
  std::vector<Int> v(c_);
  Int pw = 1;
  for (auto& x : v) {
    x *= pw;
    pw *= c;
  }
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[static_cast<int>(i)] - b[static_cast<int>(i)];
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> v(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(v));
}

IntPoly operator*(const Int& c, const IntPoly& a) {
  std::vector<Int> v(a.c_);
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i].get_str();
  os << "]";
  return os.str();
}

RationalFn::RationalFn(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw UsageError("rational function with zero denominator");
  QPoly n = to_q(num), d = to_q(den);
  QPoly g = gcd(n, d);
  if (!n.empty() && g.size() > 1) {
    n = divmod(n, g).first;
    d = divmod(d, g).first;
  } else if (n.empty()) {
    d = QPoly{Rat(1)};
  }
  if (d.empty() || d[0] == 0) throw UsageError("denominator must have nonzero constant term");
  if (d[0] < 0) {
    for (auto& c : n) c = -c;
    for (auto& c : d) c = -c;
  }
  auto both = primitive_together({n, d});
  num_ = both[0];
  den_ = both[1];
}

Rat RationalFn::eval(const Rat& u) const {
  Rat d = den_.eval(u);
  if (d == 0) throw UsageError("evaluation at a pole");
  return num_.eval(u) / d;
}

std::vector<Rat> RationalFn::series(int N) const {
  std::vector<Rat> out(static_cast<std::size_t>(N) + 1);
  Rat d0(den_[0]);
  for (int n = 0; n <= N; ++n) {
    Rat acc(num_[n]);
    for (int k = 1; k <= std::min(n, den_.degree()); ++k) acc -= Rat(den_[k]) * out[static_cast<std::size_t>(n - k)];
    out[static_cast<std::size_t>(n)] = acc / d0;
  }
  return out;
}

RationalFn RationalFn::substitute_power(int k) const {
  return RationalFn(num_.substitute_power(k), den_.substitute_power(k));
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}
RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

std::vector<Rat> series_coefficients(const RationalFn& r, int N) { return r.series(N); }

Rat pole_coefficient(const RationalFn& r, const Rat& rho) {
  if (rho == 0) throw UsageError("pole at zero");
  // den = (1 - u/rho) * d1
  QPoly lin{Rat(1), Rat(-1) / rho};
  auto [d1, rm] = divmod(to_q(r.den()), lin);
  if (!rm.empty()) throw UsageError("not a pole");
  Rat v = 0;
  for (std::size_t i = d1.size(); i-- > 0;) v = v * rho + d1[i];
  if (v == 0) throw UsageError("pole is not simple");
  return r.num().eval(rho) / v;
}

IntPoly squarefree_part(const IntPoly& p) {
  QPoly a = to_q(p);
  QPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * Rat(static_cast<long>(i)));
  QPoly g = gcd(a, d);
  QPoly s = g.size() > 1 ? divmod(a, g).first : a;
  return primitive_together({s})[0];
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace ffc
