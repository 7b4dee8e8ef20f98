#ifndef FFC_FIELD_HPP
#define FFC_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffc {

/// Bad input from a caller (unsupported field, malformed polynomial, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that must hold did not. Never swallowed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Guard exceeded (exhaustive scan too large, table too big).
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// True when FFCENSUS_GUARD_OVERRIDE is set to a non-empty value other than "0".
bool guard_override();

// Elements are encoded by their coordinate index sum c_i p^i, so 0 and 1 are
// the field's zero and one, and the prime subfield is {0, ..., p-1}.
struct Elem {
  std::uint32_t v = 0;
  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr std::uint32_t kMaxPublicQ = 1u << 16;
inline constexpr unsigned kMaxPublicDegree = 4;
inline constexpr std::uint32_t kMaxTableQ = 1u << 22;

class Field {
 public:
  /// Public constructor: odd prime p, q = p^e <= 2^16, e <= 4. The modulus,
  /// if given, is the coefficient list (lowest first) of a monic degree-e
  /// polynomial over F_p and must be irreducible.
  static Field make(std::uint32_t p, unsigned e = 1,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Same checks, but allows any q up to 2^22 and any e. Used for residue
  /// fields and constant-field extensions.
  static Field make_large(std::uint32_t p, unsigned e,
                          std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// First monic irreducible of degree e over F_p in enumeration order
  /// (constant coefficient varying fastest).
  static std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned e);

  std::uint32_t p() const { return p_; }
  unsigned degree() const { return e_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const;

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  Elem from_int(std::int64_t k) const {
    std::int64_t r = k % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
  }

  Elem add(Elem a, Elem b) const {
    if (e_ == 1) {
      std::uint32_t s = a.v + b.v;
      return {s >= p_ ? s - p_ : s};
    }
    if (a.v == 0) return b;
    if (b.v == 0) return a;
    std::uint32_t la = log_[a.v], lb = log_[b.v];
    std::uint32_t k = lb >= la ? lb - la : lb + (q_ - 1) - la;
    std::uint32_t z = zech_[k];
    if (z == kNoLog) return {0};
    return {exp_[la + z]};
  }
  Elem neg(Elem a) const { return {neg_[a.v]}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (e_ == 1) return {static_cast<std::uint32_t>(std::uint64_t(a.v) * b.v % p_)};
    if (a.v == 0 || b.v == 0) return {0};
    return {exp_[log_[a.v] + log_[b.v]]};
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;
  /// Quadratic character: 0, +1 or -1.
  int chi(Elem a) const { return chi_[a.v]; }
  bool is_square(Elem a) const { return chi_[a.v] >= 0; }
  std::optional<Elem> sqrt(Elem a) const;
  /// Smallest-index non-square; the fixed twist element epsilon.
  Elem nonsquare() const { return {nonsquare_}; }
  /// Generator of the multiplicative group used for the log tables.
  Elem generator() const { return {exp_[1]}; }

  std::vector<std::uint32_t> coords(Elem a) const;
  Elem from_coords(const std::vector<std::uint32_t>& c) const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  static constexpr std::uint32_t kNoLog = 0xffffffffu;
  struct Tables;
  static Field build(std::uint32_t p, unsigned e, std::optional<std::vector<std::uint32_t>> modulus,
                     std::uint32_t max_q);

  std::shared_ptr<const Tables> t_;
  std::uint32_t p_ = 0, q_ = 0;
  unsigned e_ = 0;
  std::uint32_t nonsquare_ = 0;
  const std::uint32_t* exp_ = nullptr;
  const std::uint32_t* log_ = nullptr;
  const std::uint32_t* zech_ = nullptr;
  const std::uint32_t* neg_ = nullptr;
  const std::int8_t* chi_ = nullptr;
};

bool is_prime(std::uint64_t n);
/// Returns (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q);

/// Text header "q=3" or "q=9;mod=1,0,1".
std::string field_header(const Field& f);
Field parse_field_header(const std::string& text);

}  // namespace ffc

#endif
