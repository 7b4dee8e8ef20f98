#include "ffc/extension.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "ffc/factor.hpp"

namespace ffc {

Poly ConstantExtension::map(const Poly& f) const {
  std::vector<Elem> c;
  for (auto x : f.coeffs()) c.push_back(map(x));
  return Poly(std::move(c));
}

const ConstantExtension& constant_extension(const Field& F, unsigned k) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, unsigned>, std::unique_ptr<ConstantExtension>> cache;
  auto key = std::make_pair(field_header(F), k);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto ext = std::make_unique<ConstantExtension>();
  ext->k = k;
  if (k == 1) {
    ext->big = F;
    for (std::uint32_t a = 0; a < F.q(); ++a) ext->embed.push_back(Elem{a});
  } else {
    ext->big = Field::make_large(F.p(), F.degree() * k);
    const Field& B = ext->big;
    if (F.degree() == 1) {
      for (std::uint32_t a = 0; a < F.q(); ++a) ext->embed.push_back(Elem{a});
    } else {
      // Image of the generator z of F_q: smallest-index root of its modulus in B.
      std::vector<Elem> mc;
      for (auto c : F.modulus()) mc.push_back(Elem{c});
      Poly m(std::move(mc));
      Elem beta{0};
      bool found = false;
      for (auto& [fac, mult] : factor(B, m).factors)
        if (fac.degree() == 1) {
          Elem r = B.neg(fac.coeff(0));
          if (!found || r.v < beta.v) beta = r;
          found = true;
        }
      if (!found) throw ConsistencyError("constant extension does not contain F_q");
      for (std::uint32_t a = 0; a < F.q(); ++a) {
        auto co = F.coords(Elem{a});
        Elem acc{0}, pw = B.one();
        for (auto c : co) {
          acc = B.add(acc, B.mul(Elem{c}, pw));
          pw = B.mul(pw, beta);
        }
        ext->embed.push_back(acc);
      }
    }
  }
  std::lock_guard<std::mutex> lock(mutex);
  return *cache.emplace(key, std::move(ext)).first->second;
}

}  // namespace ffc
