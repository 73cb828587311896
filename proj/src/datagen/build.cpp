#include "pansharp/datagen/build.hpp"

#include <cstdio>

#include "pansharp/core/normalize.hpp"
#include "pansharp/core/rng.hpp"
#include "pansharp/core/tile_io.hpp"
#include "pansharp/core/validate.hpp"

namespace pansharp {

namespace fs = std::filesystem;

std::vector<DatasetItem> plan_dataset(const DatasetPlan& plan) {
  std::vector<SceneKind> scenes = plan.scenes;
  if (scenes.empty()) {
    scenes.assign(all_scenes().begin(), all_scenes().end());
  }
  std::vector<Satellite> sats = plan.satellites;
  if (sats.empty()) {
    sats.assign(all_satellites().begin(), all_satellites().end());
  }
  int total = plan.total > 0 ? plan.total : plan.per_scene * int(scenes.size());

  std::vector<DatasetItem> items;
  items.reserve(size_t(total));
  for (int i = 0; i < total; ++i) {
    DatasetItem item;
    item.recipe.kind = scenes[size_t(i) % scenes.size()];
    item.recipe.height = plan.tile_size;
    item.recipe.width = plan.tile_size;
    item.recipe.seed = hash_seed(plan.seed, {uint64_t(i)});
    item.recipe.octave_min = plan.octave_min;
    item.recipe.octave_max = plan.octave_max;
    item.recipe.contrast_lo = plan.contrast_lo;
    item.recipe.contrast_hi = plan.contrast_hi;
    item.satellite = sats[size_t(i) % sats.size()];
    items.push_back(item);
  }
  return items;
}

SamplePair make_sample(const DatasetItem& item, const DatagenOptions& options,
                       const std::string& sample_id) {
  SamplePair pair;
  pair.id = sample_id;
  pair.satellite = item.satellite;
  pair.scene = item.recipe.kind;
  pair.ratio = satellite_ratio(item.satellite);

  RasterTile gt = generate_scene(item.recipe);
  const int depth = satellite_bit_depth(item.satellite);
  gt.bit_depth = depth;
  // Quantize once so the in-memory pair matches what a round-trip through
  // the tile files yields.
  gt = normalize(denormalize(gt));

  DegradationSpec spec;
  spec.ratio = pair.ratio;
  spec.blur_sigma = options.blur_sigma;
  spec.kernel_radius = options.kernel_radius;

  pair.gt = gt;
  pair.ms = normalize(denormalize(wald_degrade(gt, spec)));
  pair.pan = normalize(denormalize(synth_pan(gt, options.pan_weights)));
  return pair;
}

Manifest build_dataset(const std::vector<DatasetItem>& items,
                       const DatagenOptions& options, const SplitSpec& split,
                       const fs::path& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir / "tiles", ec);
  if (ec) fail(ErrorKind::IoFailure, "cannot create " + (out_dir / "tiles").string());

  std::vector<ManifestEntry> entries;
  entries.reserve(items.size());
  for (size_t i = 0; i < items.size(); ++i) {
    char id[64];
    std::snprintf(id, sizeof(id), "%s_%05zu", to_string(items[i].recipe.kind), i);
    SamplePair pair = make_sample(items[i], options, id);

    PairValidation check = validate_pair(pair);
    if (!check.ok()) {
      fail(ErrorKind::BadShape,
           "generated pair " + pair.id + " invalid: " + check.describe());
    }

    ManifestEntry e;
    e.sample_id = pair.id;
    e.ms_path = "tiles/" + pair.id + "_ms.tile";
    e.pan_path = "tiles/" + pair.id + "_pan.tile";
    e.gt_path = "tiles/" + pair.id + "_gt.tile";
    e.satellite = pair.satellite;
    e.scene = pair.scene;
    e.native_ratio = pair.ratio;
    save_tile(out_dir / e.ms_path, pair.ms);
    save_tile(out_dir / e.pan_path, pair.pan);
    save_tile(out_dir / e.gt_path, pair.gt);
    entries.push_back(std::move(e));
  }

  Manifest manifest = make_splits(std::move(entries), split);
  manifest.write(out_dir / "manifest.jsonl");
  return manifest;
}

}  // namespace pansharp
