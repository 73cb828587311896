#include "pansharp/core/normalize.hpp"

#include <algorithm>
#include <cmath>

namespace pansharp {

static int64_t full_scale(int bit_depth) {
  if (bit_depth < 1 || bit_depth > 31) {
    fail(ErrorKind::BadConfig, "bit depth out of range: " + std::to_string(bit_depth));
  }
  return (int64_t(1) << bit_depth) - 1;
}

RasterTile normalize(const RawTile& raw) {
  const int64_t scale = full_scale(raw.bit_depth);
  RasterTile out;
  out.bands = raw.bands;
  out.height = raw.height;
  out.width = raw.width;
  out.bit_depth = raw.bit_depth;
  out.band_names = raw.band_names;
  out.data.resize(size_t(raw.size()));
  const double inv = 1.0 / double(scale);
  for (size_t i = 0; i < out.data.size(); ++i) {
    int32_t v = raw.data[i];
    if (v < 0) {
      fail(ErrorKind::NegativeValue,
           "raw value " + std::to_string(v) + " below zero");
    }
    if (v > scale) {
      fail(ErrorKind::DepthOverflow,
           "raw value " + std::to_string(v) + " exceeds " + std::to_string(scale) +
               " for depth " + std::to_string(raw.bit_depth));
    }
    out.data[i] = std::clamp(double(v) * inv, 0.0, 1.0);
  }
  return out;
}

RawTile denormalize(const RasterTile& tile) {
  const int64_t scale = full_scale(tile.bit_depth);
  RawTile out;
  out.bands = tile.bands;
  out.height = tile.height;
  out.width = tile.width;
  out.bit_depth = tile.bit_depth;
  out.band_names = tile.band_names;
  out.data.resize(size_t(tile.size()));
  for (size_t i = 0; i < out.data.size(); ++i) {
    double v = std::clamp(tile.data[i], 0.0, 1.0);
    out.data[i] = int32_t(std::llround(v * double(scale)));
  }
  return out;
}

}  // namespace pansharp
