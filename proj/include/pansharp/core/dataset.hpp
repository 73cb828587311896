// Manifest-driven sample loading. Pairs captured at the Landsat ratio are
// resampled onto the ratio-4 grid here so the network sees a single ratio.
#pragma once

#include <filesystem>
#include <vector>

#include "pansharp/core/manifest.hpp"

namespace pansharp {

struct LoadedSample {
  SamplePair pair;   // ingested: always ratio 4
  ManifestEntry entry;
};

// Loads one entry's tiles relative to root, without ingestion.
SamplePair load_pair(const ManifestEntry& entry,
                     const std::filesystem::path& root);

// Bicubic-resamples a native ratio-2 MS tile down to the ratio-4 grid.
SamplePair ingest_for_model(SamplePair pair);

// Loads and ingests every entry of a split, in manifest order.
std::vector<LoadedSample> load_split(const Manifest& manifest,
                                     const std::filesystem::path& root,
                                     Split split);

}  // namespace pansharp
