#ifndef FFC_SRC_MULTIPLES_HPP
#define FFC_SRC_MULTIPLES_HPP

#include <cstdint>
#include <vector>

#include "ffc/enumerate.hpp"
#include "ffc/poly.hpp"

namespace ffc::detail {

// Visit the monic_index of p*h for h = monic_from_index(m, t), t in [first, last).
// The product's digits are updated incrementally as h steps through the
// odometer, so each step costs O(deg p).
template <class Fn>
void for_each_multiple(const Field& F, int n, const Poly& p, std::uint64_t first, std::uint64_t last, Fn&& fn) {
  if (first >= last) return;
  const int d = p.degree(), m = n - d;
  const std::uint32_t q = F.q();
  std::vector<std::uint64_t> pw(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) pw[static_cast<std::size_t>(i)] = pw[static_cast<std::size_t>(i - 1)] * q;
  Poly h = monic_from_index(F, m, first);
  Poly prod = mul(F, p, h);
  std::vector<std::uint32_t> hd(static_cast<std::size_t>(m)), pd(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) hd[static_cast<std::size_t>(i)] = h.coeff(i).v;
  std::uint64_t idx = 0;
  for (int i = 0; i < n; ++i) {
    pd[static_cast<std::size_t>(i)] = prod.coeff(i).v;
    idx += pw[static_cast<std::size_t>(i)] * prod.coeff(i).v;
  }
  std::vector<Elem> pc(p.coeffs());
  const bool prime = F.degree() == 1;
  for (std::uint64_t t = first;;) {
    fn(idx);
    if (++t == last) break;
    for (int j = 0; j < m; ++j) {
      std::uint32_t old = hd[static_cast<std::size_t>(j)];
      std::uint32_t nw = old + 1 == q ? 0 : old + 1;
      hd[static_cast<std::size_t>(j)] = nw;
      Elem delta = prime ? F.one() : F.sub(Elem{nw}, Elem{old});
      for (int i = 0; i <= d; ++i) {
        auto pos = static_cast<std::size_t>(j + i);
        Elem add = prime ? pc[static_cast<std::size_t>(i)] : F.mul(delta, pc[static_cast<std::size_t>(i)]);
        std::uint32_t before = pd[pos];
        std::uint32_t after = F.add(Elem{before}, add).v;
        pd[pos] = after;
        idx += pw[pos] * after;
        idx -= pw[pos] * before;
      }
      if (nw != 0) break;
    }
  }
}

}  // namespace ffc::detail

#endif
