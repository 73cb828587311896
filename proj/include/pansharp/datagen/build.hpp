// Dataset builder: generates scenes, degrades them into MS/PAN/GT triples,
// writes tile files, and assembles the split manifest.
#pragma once

#include <filesystem>

#include "pansharp/core/manifest.hpp"
#include "pansharp/datagen/scene.hpp"
#include "pansharp/datagen/wald.hpp"

namespace pansharp {

struct DatasetItem {
  SceneRecipe recipe;
  Satellite satellite = Satellite::GF1;
};

struct DatagenOptions {
  std::array<double, 4> pan_weights = {0.25, 0.25, 0.25, 0.25};
  double blur_sigma = 0.0;  // <= 0 selects ratio/2 per item
  int kernel_radius = 0;
};

struct DatasetPlan {
  int per_scene = 10;      // recipes per scene kind (ignored if total > 0)
  int total = 0;           // exact sample count, round-robin over scenes
  int tile_size = 64;
  uint64_t seed = 1;
  std::vector<SceneKind> scenes;      // defaults to all six
  std::vector<Satellite> satellites;  // defaults to all ten, round-robin
  int octave_min = 1;
  int octave_max = 5;
  double contrast_lo = 0.08;
  double contrast_hi = 0.92;
};

// Expands a plan into concrete recipe/satellite items, deterministically.
std::vector<DatasetItem> plan_dataset(const DatasetPlan& plan);

// Generates every item, writes tiles under out_dir/tiles, and returns the
// manifest (also written to out_dir/manifest.jsonl). Every produced pair
// passes validate_pair; Landsat items are emitted at their native ratio 2.
Manifest build_dataset(const std::vector<DatasetItem>& items,
                       const DatagenOptions& options, const SplitSpec& split,
                       const std::filesystem::path& out_dir);

// One item's in-memory pair, exactly as build_dataset would write it.
SamplePair make_sample(const DatasetItem& item, const DatagenOptions& options,
                       const std::string& sample_id);

}  // namespace pansharp
