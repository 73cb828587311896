#include "pansharp/core/dataset.hpp"

#include "pansharp/core/resample.hpp"
#include "pansharp/core/tile_io.hpp"
#include "pansharp/core/validate.hpp"

namespace pansharp {

SamplePair load_pair(const ManifestEntry& entry,
                     const std::filesystem::path& root) {
  SamplePair pair;
  pair.id = entry.sample_id;
  pair.satellite = entry.satellite;
  pair.scene = entry.scene;
  pair.ratio = entry.native_ratio;
  pair.ms = load_tile(root / entry.ms_path);
  pair.pan = load_tile(root / entry.pan_path);
  pair.gt = load_tile(root / entry.gt_path);
  return pair;
}

SamplePair ingest_for_model(SamplePair pair) {
  if (pair.ratio == 2) {
    pair.ms = resize_bicubic(pair.ms, pair.pan.height / 4, pair.pan.width / 4);
    pair.ratio = 4;
  }
  return pair;
}

std::vector<LoadedSample> load_split(const Manifest& manifest,
                                     const std::filesystem::path& root,
                                     Split split) {
  std::vector<LoadedSample> out;
  for (const auto& entry : manifest.entries) {
    if (entry.split != split) continue;
    LoadedSample sample;
    sample.entry = entry;
    SamplePair raw = load_pair(entry, root);
    PairValidation check = validate_pair(raw);
    if (!check.ok()) {
      fail(ErrorKind::BadShape,
           "sample " + entry.sample_id + " invalid: " + check.describe());
    }
    sample.pair = ingest_for_model(std::move(raw));
    out.push_back(std::move(sample));
  }
  return out;
}

}  // namespace pansharp
