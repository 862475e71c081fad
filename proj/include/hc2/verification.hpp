#pragma once

// The reproduction suite.  Every quantitative claim the kernel rests on is
// rechecked here end to end with seeded randomness: curvature values and
// closed-form identities, the non-totally-geodesic bisector witness, the
// whole-space construction residuals, hull classification against the
// sampling oracle, distance calibration, and invariance of the classifier
// under permutations and form-preserving maps.  The CLI prints the records
// as JSON lines; the acceptance harness groups them by criterion and adds
// wall-clock limits (kept out of the records so reports stay byte-stable).

#include <cstdint>
#include <string>
#include <vector>

#include "hc2/hermitian.hpp"

namespace hc2 {

struct CheckRecord {
  std::string name;
  double expected = 0.0;
  double computed = 0.0;
  double residual = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t oracle_samples = 10000;  // per audited point set
  Tolerance tol;
};

// One criterion (1..8) of the suite; unknown index throws.
std::vector<CheckRecord> verify_criterion(int criterion,
                                          const VerifyOptions& opt);

// All criteria in order.
std::vector<CheckRecord> run_verification_suite(const VerifyOptions& opt);

}  // namespace hc2
