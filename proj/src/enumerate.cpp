#include "ffc/enumerate.hpp"

#include "ffc/factor.hpp"

namespace ffc {

std::uint64_t monic_count(const Field& F, int n) {
  if (n < 0) throw UsageError("negative degree");
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > (std::uint64_t(1) << 62) / F.q()) throw GuardError("enumeration size overflows 63 bits");
    total *= F.q();
  }
  return total;
}

Poly monic_from_index(const Field& F, int n, std::uint64_t index) {
  std::vector<Elem> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    c[static_cast<std::size_t>(i)] = Elem{static_cast<std::uint32_t>(index % F.q())};
    index /= F.q();
  }
  c.back() = F.one();
  return Poly(std::move(c));
}

std::uint64_t monic_index(const Field& F, const Poly& f) {
  if (!f.is_monic()) throw UsageError("monic_index of a non-monic polynomial");
  std::uint64_t idx = 0;
  for (int i = f.degree() - 1; i >= 0; --i) idx = idx * F.q() + f.coeff(i).v;
  return idx;
}

MonicStream::MonicStream(const Field& F, int n) : MonicStream(F, n, 0, monic_count(F, n)) {}

MonicStream::MonicStream(const Field& F, int n, std::uint64_t first, std::uint64_t last)
    : F_(F), n_(n), first_(first), last_(last), pos_(first) {
  if (last > monic_count(F, n) || first > last) throw UsageError("bad enumeration range");
}

bool MonicStream::next(Poly& out) {
  if (pos_ >= last_) return false;
  out = monic_from_index(F_, n_, pos_++);
  return true;
}

SquarefreeStream::SquarefreeStream(const Field& F, int n) : F_(F), inner_(F, n) {}
SquarefreeStream::SquarefreeStream(const Field& F, int n, std::uint64_t first, std::uint64_t last)
    : F_(F), inner_(F, n, first, last) {}

bool SquarefreeStream::next(Poly& out) {
  while (inner_.next(out))
    if (is_squarefree(F_, out)) return true;
  return false;
}

std::vector<Poly> monic_polys(const Field& F, int n) {
  std::vector<Poly> out;
  MonicStream s(F, n);
  Poly f;
  while (s.next(f)) out.push_back(f);
  return out;
}

std::vector<Poly> squarefree_monic_polys(const Field& F, int n) {
  std::vector<Poly> out;
  SquarefreeStream s(F, n);
  Poly f;
  while (s.next(f)) out.push_back(f);
  return out;
}

}  // namespace ffc
