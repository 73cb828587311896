#include "pansharp/core/manifest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <set>

#include "pansharp/core/rng.hpp"

namespace pansharp {

using nlohmann::json;

std::vector<ManifestEntry> Manifest::split_entries(Split split) const {
  std::vector<ManifestEntry> out;
  for (const auto& e : entries) {
    if (e.split == split) out.push_back(e);
  }
  return out;
}

void Manifest::write(const std::filesystem::path& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(ErrorKind::IoFailure, "cannot open for write: " + path.string());
  json header = {{"schema_version", schema_version}};
  os << header.dump() << "\n";
  for (const auto& e : entries) {
    json rec = {
        {"sample_id", e.sample_id},
        {"ms_path", e.ms_path},
        {"pan_path", e.pan_path},
        {"gt_path", e.gt_path},
        {"satellite", to_string(e.satellite)},
        {"scene", to_string(e.scene)},
        {"split", to_string(e.split)},
        {"native_ratio", e.native_ratio},
    };
    os << rec.dump() << "\n";
  }
  if (!os) fail(ErrorKind::IoFailure, "write failed: " + path.string());
}

Manifest Manifest::read(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail(ErrorKind::IoFailure, "cannot open manifest: " + path.string());
  Manifest manifest;
  std::string line;
  bool saw_header = false;
  std::set<std::string> seen_ids;
  static const std::set<std::string> known_keys = {
      "sample_id", "ms_path", "pan_path",     "gt_path",
      "satellite", "scene",   "split",        "native_ratio"};
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    json rec = json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object()) {
      fail(ErrorKind::IoFailure, "bad manifest line: " + line);
    }
    if (!saw_header) {
      if (!rec.contains("schema_version")) {
        fail(ErrorKind::IoFailure,
             "manifest header missing schema_version: " + path.string());
      }
      manifest.schema_version = rec.at("schema_version").get<int>();
      if (manifest.schema_version != kSchemaVersion) {
        fail(ErrorKind::IoFailure,
             "unsupported manifest schema_version " +
                 std::to_string(manifest.schema_version));
      }
      saw_header = true;
      continue;
    }
    for (auto it = rec.begin(); it != rec.end(); ++it) {
      if (!known_keys.count(it.key())) {
        fail(ErrorKind::IoFailure, "unknown manifest field '" + it.key() + "'");
      }
    }
    ManifestEntry e;
    e.sample_id = rec.at("sample_id").get<std::string>();
    e.ms_path = rec.at("ms_path").get<std::string>();
    e.pan_path = rec.at("pan_path").get<std::string>();
    e.gt_path = rec.at("gt_path").get<std::string>();
    e.satellite = satellite_from_string(rec.at("satellite").get<std::string>());
    e.scene = scene_from_string(rec.at("scene").get<std::string>());
    e.split = split_from_string(rec.at("split").get<std::string>());
    e.native_ratio = rec.at("native_ratio").get<int>();
    if (!seen_ids.insert(e.sample_id).second) {
      fail(ErrorKind::IoFailure, "duplicate sample_id '" + e.sample_id + "'");
    }
    manifest.entries.push_back(std::move(e));
  }
  if (!saw_header) {
    fail(ErrorKind::IoFailure, "empty manifest: " + path.string());
  }
  return manifest;
}

void SplitSpec::validate() const {
  if (train_fraction <= 0 || val_fraction <= 0 || test_fraction <= 0) {
    fail(ErrorKind::BadConfig, "split fractions must be positive");
  }
  double sum = train_fraction + val_fraction + test_fraction;
  if (std::abs(sum - 1.0) > 1e-9) {
    fail(ErrorKind::BadConfig, "split fractions must sum to 1");
  }
}

Manifest make_splits(std::vector<ManifestEntry> entries, const SplitSpec& spec) {
  spec.validate();

  const bool stratified = spec.stratify_by_satellite || spec.stratify_by_scene;
  std::map<std::string, std::vector<size_t>> strata;
  for (size_t i = 0; i < entries.size(); ++i) {
    std::string key;
    if (spec.stratify_by_satellite) key += to_string(entries[i].satellite);
    if (spec.stratify_by_scene) {
      key += "/";
      key += to_string(entries[i].scene);
    }
    strata[key].push_back(i);
  }

  for (auto& [key, members] : strata) {
    if (stratified && members.size() < 10) {
      fail(ErrorKind::StratumTooSmall,
           "stratum '" + key + "' has " + std::to_string(members.size()) +
               " entries; need at least 10");
    }
    // Stable ordering independent of caller order, then a seeded shuffle.
    std::sort(members.begin(), members.end(), [&](size_t a, size_t b) {
      return entries[a].sample_id < entries[b].sample_id;
    });
    uint64_t key_hash = 1469598103934665603ULL;
    for (char c : key) key_hash = (key_hash ^ uint64_t(uint8_t(c))) * 1099511628211ULL;
    Rng rng(hash_seed(spec.seed, {key_hash}));
    rng.shuffle(members);

    const size_t n = members.size();
    const size_t n_val = size_t(std::llround(spec.val_fraction * double(n)));
    const size_t n_test = size_t(std::llround(spec.test_fraction * double(n)));
    if (n_val + n_test > n) {
      fail(ErrorKind::StratumTooSmall,
           "stratum '" + key + "' too small for requested fractions");
    }
    for (size_t j = 0; j < n; ++j) {
      Split s = Split::Train;
      if (j < n_val) {
        s = Split::Val;
      } else if (j < n_val + n_test) {
        s = Split::Test;
      }
      entries[members[j]].split = s;
    }
  }

  std::set<std::string> ids;
  for (const auto& e : entries) {
    if (!ids.insert(e.sample_id).second) {
      fail(ErrorKind::BadConfig, "duplicate sample_id '" + e.sample_id + "'");
    }
  }

  Manifest manifest;
  manifest.entries = std::move(entries);
  return manifest;
}

}  // namespace pansharp
