// Structural validation of tiles and sample pairs. Violations are data, not
// exceptions: a validation result enumerates everything that is wrong.
#pragma once

#include <string>
#include <vector>

#include "pansharp/core/types.hpp"

namespace pansharp {

enum class Violation {
  NonFiniteValue,
  ValueOutOfRange,
  NoBands,
  TooSmall,          // height or width < 8
  NotDivisibleBy4,   // pyramid depth constraint
  RatioMismatch,     // pan size != ratio * ms size
  GtSizeMismatch,    // gt spatial size != pan spatial size
  GtBandMismatch,    // gt band count != ms band count
  BadRatio,          // ratio not in {2,4}
  RatioSatelliteMismatch,  // ratio 2 is reserved for LC7/LC8
};

const char* violation_name(Violation v);

struct PairValidation {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

std::vector<Violation> validate_tile(const RasterTile& tile);
PairValidation validate_pair(const SamplePair& pair);

}  // namespace pansharp
