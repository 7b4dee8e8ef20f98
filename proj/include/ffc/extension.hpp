#ifndef FFC_EXTENSION_HPP
#define FFC_EXTENSION_HPP

#include <vector>

#include "ffc/poly.hpp"

namespace ffc {

/// F_{q^k} together with an embedding of F_q into it.
struct ConstantExtension {
  Field big;
  unsigned k = 1;
  std::vector<Elem> embed;  // embed[a.v] is the image of a

  Elem map(Elem a) const { return embed[a.v]; }
  Poly map(const Poly& f) const;
};

/// Cached per (field, k). Throws UsageError beyond the table limit.
const ConstantExtension& constant_extension(const Field& F, unsigned k);

}  // namespace ffc

#endif
