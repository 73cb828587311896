// Dataset manifest: line-delimited JSON records indexing sample tiles, plus
// the deterministic stratified train/val/test splitter.
#pragma once

#include <filesystem>
#include <vector>

#include "pansharp/core/types.hpp"

namespace pansharp {

struct ManifestEntry {
  std::string sample_id;
  std::string ms_path;   // relative to the manifest's directory
  std::string pan_path;
  std::string gt_path;
  Satellite satellite = Satellite::GF1;
  SceneKind scene = SceneKind::Water;
  Split split = Split::Train;
  int native_ratio = 4;  // 2 flags pairs captured at the Landsat ratio
};

struct Manifest {
  static constexpr int kSchemaVersion = 1;
  int schema_version = kSchemaVersion;
  std::vector<ManifestEntry> entries;

  std::vector<ManifestEntry> split_entries(Split split) const;

  void write(const std::filesystem::path& path) const;
  static Manifest read(const std::filesystem::path& path);
};

struct SplitSpec {
  double train_fraction = 0.8;
  double val_fraction = 0.1;
  double test_fraction = 0.1;
  uint64_t seed = 0;
  bool stratify_by_satellite = false;
  bool stratify_by_scene = false;

  void validate() const;  // fractions positive, sum to 1
};

// Assigns a split to every entry. Deterministic for a fixed seed and
// independent of input order (entries are keyed by sample_id per stratum).
// Per-stratum counts follow round(fraction * n) for val/test with the
// remainder in train, which keeps every stratum within one sample of the
// requested fractions. Requires >= 10 entries per stratum when stratified.
Manifest make_splits(std::vector<ManifestEntry> entries, const SplitSpec& spec);

}  // namespace pansharp
