#include "pansharp/core/types.hpp"

#include "pansharp/core/error.hpp"

namespace pansharp {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NegativeValue: return "NegativeValue";
    case ErrorKind::DepthOverflow: return "DepthOverflow";
    case ErrorKind::StratumTooSmall: return "StratumTooSmall";
    case ErrorKind::SizeNotDivisible: return "SizeNotDivisible";
    case ErrorKind::BadWeights: return "BadWeights";
    case ErrorKind::TileTooLarge: return "TileTooLarge";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::AllBandsDegenerate: return "AllBandsDegenerate";
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::BadMode: return "BadMode";
    case ErrorKind::EmptySplit: return "EmptySplit";
    case ErrorKind::Divergence: return "Divergence";
    case ErrorKind::ConfigMismatch: return "ConfigMismatch";
    case ErrorKind::CorruptCheckpoint: return "CorruptCheckpoint";
    case ErrorKind::IoFailure: return "IoFailure";
    case ErrorKind::BadConfig: return "BadConfig";
  }
  return "UnknownError";
}

const std::array<Satellite, 10>& all_satellites() {
  static const std::array<Satellite, 10> sats = {
      Satellite::GF1, Satellite::GF2, Satellite::GF6, Satellite::LC7,
      Satellite::LC8, Satellite::WV2, Satellite::WV3, Satellite::WV4,
      Satellite::QB,  Satellite::IN};
  return sats;
}

const std::array<SceneKind, 6>& all_scenes() {
  static const std::array<SceneKind, 6> scenes = {
      SceneKind::Water, SceneKind::Urban,      SceneKind::IceSnow,
      SceneKind::Crops, SceneKind::Vegetation, SceneKind::Barren};
  return scenes;
}

const char* to_string(Satellite s) {
  switch (s) {
    case Satellite::GF1: return "GF1";
    case Satellite::GF2: return "GF2";
    case Satellite::GF6: return "GF6";
    case Satellite::LC7: return "LC7";
    case Satellite::LC8: return "LC8";
    case Satellite::WV2: return "WV2";
    case Satellite::WV3: return "WV3";
    case Satellite::WV4: return "WV4";
    case Satellite::QB: return "QB";
    case Satellite::IN: return "IN";
  }
  return "?";
}

const char* to_string(SceneKind k) {
  switch (k) {
    case SceneKind::Water: return "water";
    case SceneKind::Urban: return "urban";
    case SceneKind::IceSnow: return "ice_snow";
    case SceneKind::Crops: return "crops";
    case SceneKind::Vegetation: return "vegetation";
    case SceneKind::Barren: return "barren";
  }
  return "?";
}

const char* to_string(Split s) {
  switch (s) {
    case Split::Train: return "train";
    case Split::Val: return "val";
    case Split::Test: return "test";
  }
  return "?";
}

Satellite satellite_from_string(const std::string& name) {
  for (Satellite s : all_satellites()) {
    if (name == to_string(s)) return s;
  }
  fail(ErrorKind::BadConfig, "unknown satellite '" + name + "'");
}

SceneKind scene_from_string(const std::string& name) {
  for (SceneKind k : all_scenes()) {
    if (name == to_string(k)) return k;
  }
  fail(ErrorKind::BadConfig, "unknown scene '" + name + "'");
}

Split split_from_string(const std::string& name) {
  if (name == "train") return Split::Train;
  if (name == "val") return Split::Val;
  if (name == "test") return Split::Test;
  fail(ErrorKind::BadConfig, "unknown split '" + name + "'");
}

int satellite_ratio(Satellite s) {
  return (s == Satellite::LC7 || s == Satellite::LC8) ? 2 : 4;
}

int satellite_bit_depth(Satellite s) {
  switch (s) {
    case Satellite::GF1:
    case Satellite::GF2:
    case Satellite::GF6: return 10;
    case Satellite::LC7: return 8;
    case Satellite::LC8: return 16;
    case Satellite::WV2:
    case Satellite::WV3:
    case Satellite::WV4:
    case Satellite::QB:
    case Satellite::IN: return 11;
  }
  return 16;
}

RasterTile RasterTile::zeros(int bands, int height, int width, int bit_depth,
                             std::vector<std::string> band_names) {
  RasterTile t;
  t.bands = bands;
  t.height = height;
  t.width = width;
  t.bit_depth = bit_depth;
  t.band_names = std::move(band_names);
  t.data.assign(size_t(int64_t(bands) * height * width), 0.0);
  return t;
}

std::vector<std::string> default_ms_band_names() { return {"R", "G", "B", "NIR"}; }
std::vector<std::string> default_pan_band_names() { return {"PAN"}; }

}  // namespace pansharp
