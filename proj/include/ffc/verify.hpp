#ifndef FFC_VERIFY_HPP
#define FFC_VERIFY_HPP

// The acceptance suite. Criteria 1-11 are computed here; criterion 12
// (determinism) is added by the caller after comparing two runs.

#include <cstdint>
#include <functional>
#include <vector>

#include "ffc/factor.hpp"
#include "ffc/report.hpp"

namespace ffc {

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Called after each criterion with its wall time in seconds. Times never
  /// enter the report.
  std::function<void(const Criterion&, double)> progress;
};

Report run_verify(const VerifyOptions& opt = {});

/// Appends criterion 12 given whether two serialized runs matched.
void add_determinism_criterion(Report& r, bool identical);

}  // namespace ffc

#endif
