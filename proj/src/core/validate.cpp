#include "pansharp/core/validate.hpp"

#include <algorithm>
#include <cmath>

namespace pansharp {

const char* violation_name(Violation v) {
  switch (v) {
    case Violation::NonFiniteValue: return "NonFiniteValue";
    case Violation::ValueOutOfRange: return "ValueOutOfRange";
    case Violation::NoBands: return "NoBands";
    case Violation::TooSmall: return "TooSmall";
    case Violation::NotDivisibleBy4: return "NotDivisibleBy4";
    case Violation::RatioMismatch: return "RatioMismatch";
    case Violation::GtSizeMismatch: return "GtSizeMismatch";
    case Violation::GtBandMismatch: return "GtBandMismatch";
    case Violation::BadRatio: return "BadRatio";
    case Violation::RatioSatelliteMismatch: return "RatioSatelliteMismatch";
  }
  return "?";
}

std::string PairValidation::describe() const {
  if (ok()) return "valid";
  std::string out;
  for (size_t i = 0; i < violations.size(); ++i) {
    if (i) out += ", ";
    out += violation_name(violations[i]);
  }
  return out;
}

static void append_unique(std::vector<Violation>& list, Violation v) {
  if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
}

std::vector<Violation> validate_tile(const RasterTile& tile) {
  std::vector<Violation> out;
  if (tile.bands < 1) append_unique(out, Violation::NoBands);
  if (tile.height < 8 || tile.width < 8) append_unique(out, Violation::TooSmall);
  if (tile.height % 4 != 0 || tile.width % 4 != 0) {
    append_unique(out, Violation::NotDivisibleBy4);
  }
  if (int64_t(tile.data.size()) != tile.size()) {
    append_unique(out, Violation::ValueOutOfRange);
    return out;
  }
  for (double v : tile.data) {
    if (!std::isfinite(v)) {
      append_unique(out, Violation::NonFiniteValue);
      break;
    }
  }
  for (double v : tile.data) {
    if (v < 0.0 || v > 1.0) {
      append_unique(out, Violation::ValueOutOfRange);
      break;
    }
  }
  return out;
}

PairValidation validate_pair(const SamplePair& pair) {
  PairValidation result;
  for (const RasterTile* tile : {&pair.ms, &pair.pan, &pair.gt}) {
    for (Violation v : validate_tile(*tile)) append_unique(result.violations, v);
  }
  if (pair.ratio != 2 && pair.ratio != 4) {
    append_unique(result.violations, Violation::BadRatio);
  } else {
    if (pair.pan.height != pair.ratio * pair.ms.height ||
        pair.pan.width != pair.ratio * pair.ms.width) {
      append_unique(result.violations, Violation::RatioMismatch);
    }
    if (pair.ratio != satellite_ratio(pair.satellite)) {
      append_unique(result.violations, Violation::RatioSatelliteMismatch);
    }
  }
  if (pair.gt.height != pair.pan.height || pair.gt.width != pair.pan.width) {
    append_unique(result.violations, Violation::GtSizeMismatch);
  }
  if (pair.gt.bands != pair.ms.bands) {
    append_unique(result.violations, Violation::GtBandMismatch);
  }
  return result;
}

}  // namespace pansharp
