#ifndef FFC_ENUMERATE_HPP
#define FFC_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "ffc/poly.hpp"

namespace ffc {

/// q^n, throwing GuardError if it does not fit in 63 bits.
std::uint64_t monic_count(const Field& F, int n);

/// Monic degree-n polynomial number `index` in enumeration order: the
/// coefficient of x^i is digit i of `index` in base q (constant term fastest).
Poly monic_from_index(const Field& F, int n, std::uint64_t index);
std::uint64_t monic_index(const Field& F, const Poly& f);

/// Restartable stream over the index range [first, last) of monic degree-n
/// polynomials. Ranges partition cleanly, so a scan can be split by
/// coefficient prefix (contiguous index blocks).
class MonicStream {
 public:
  MonicStream(const Field& F, int n);
  MonicStream(const Field& F, int n, std::uint64_t first, std::uint64_t last);

  bool next(Poly& out);
  void reset() { pos_ = first_; }
  std::uint64_t size() const { return last_ - first_; }
  std::uint64_t position() const { return pos_; }

 private:
  Field F_;
  int n_;
  std::uint64_t first_, last_, pos_;
};

/// Square-free members of a MonicStream.
class SquarefreeStream {
 public:
  SquarefreeStream(const Field& F, int n);
  SquarefreeStream(const Field& F, int n, std::uint64_t first, std::uint64_t last);
  bool next(Poly& out);
  void reset() { inner_.reset(); }

 private:
  Field F_;
  MonicStream inner_;
};

std::vector<Poly> monic_polys(const Field& F, int n);
std::vector<Poly> squarefree_monic_polys(const Field& F, int n);

}  // namespace ffc

#endif
