// Domain types: raster tiles, sample pairs, satellite/scene/split tags.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pansharp/core/error.hpp"

namespace pansharp {

enum class Satellite { GF1, GF2, GF6, LC7, LC8, WV2, WV3, WV4, QB, IN };
enum class SceneKind { Water, Urban, IceSnow, Crops, Vegetation, Barren };
enum class Split { Train, Val, Test };

const std::array<Satellite, 10>& all_satellites();
const std::array<SceneKind, 6>& all_scenes();

const char* to_string(Satellite s);
const char* to_string(SceneKind k);
const char* to_string(Split s);
Satellite satellite_from_string(const std::string& name);
SceneKind scene_from_string(const std::string& name);
Split split_from_string(const std::string& name);

// PAN-to-MS resolution ratio by sensor: 2 for the Landsat pair, 4 otherwise.
int satellite_ratio(Satellite s);
// Source quantization used when tiles for this satellite are written to disk.
int satellite_bit_depth(Satellite s);

// Real-valued raster, band-major (band, row, col), values in [0,1] once
// normalized. bit_depth records the source quantization for the inverse map.
struct RasterTile {
  int bands = 0;
  int height = 0;
  int width = 0;
  int bit_depth = 16;
  std::vector<std::string> band_names;
  std::vector<double> data;

  static RasterTile zeros(int bands, int height, int width, int bit_depth,
                          std::vector<std::string> band_names);

  int64_t size() const { return int64_t(bands) * height * width; }
  double& at(int b, int y, int x) {
    return data[(int64_t(b) * height + y) * width + x];
  }
  double at(int b, int y, int x) const {
    return data[(int64_t(b) * height + y) * width + x];
  }
  const double* band(int b) const { return data.data() + int64_t(b) * height * width; }
  double* band(int b) { return data.data() + int64_t(b) * height * width; }
};

// Integer raster as read from or written to disk. int32 storage so that
// out-of-range source values (negative, above full scale) can be detected
// rather than silently wrapped.
struct RawTile {
  int bands = 0;
  int height = 0;
  int width = 0;
  int bit_depth = 16;
  std::vector<std::string> band_names;
  std::vector<int32_t> data;

  int64_t size() const { return int64_t(bands) * height * width; }
};

// One training/evaluation unit. ms is the low-resolution multispectral tile,
// pan the high-resolution panchromatic tile, gt the full-resolution target.
struct SamplePair {
  std::string id;
  RasterTile ms;
  RasterTile pan;
  RasterTile gt;
  int ratio = 4;
  Satellite satellite = Satellite::GF1;
  SceneKind scene = SceneKind::Water;
};

std::vector<std::string> default_ms_band_names();
std::vector<std::string> default_pan_band_names();

}  // namespace pansharp
