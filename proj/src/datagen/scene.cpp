#include "pansharp/datagen/scene.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pansharp/core/rng.hpp"

namespace pansharp {

void SceneRecipe::validate() const {
  if (height < 8 || width < 8 || height % 4 != 0 || width % 4 != 0) {
    fail(ErrorKind::BadShape, "scene size must be >= 8 and divisible by 4");
  }
  if (octave_min < 0 || octave_max < octave_min) {
    fail(ErrorKind::BadConfig, "bad octave band");
  }
  if (contrast_lo < 0.0 || contrast_hi > 1.0 || contrast_hi < contrast_lo) {
    fail(ErrorKind::BadConfig, "contrast range must be within [0,1]");
  }
}

namespace {

double unit(uint64_t h) { return double(h >> 11) * 0x1.0p-53; }

double smoothstep(double t) { return t * t * (3.0 - 2.0 * t); }

// One value-noise octave: a (cells+1)^2 lattice of hashed node values in
// [-1,1], smoothly interpolated. Node values depend only on (seed, node), so
// the field is independent of evaluation order.
void add_value_noise(std::vector<double>& field, int h, int w, uint64_t seed,
                     int cells, double amplitude) {
  if (amplitude == 0.0) return;
  const double sy = double(cells) / h;
  const double sx = double(cells) / w;
  for (int y = 0; y < h; ++y) {
    double fy = (y + 0.5) * sy;
    int gy = std::min(int(fy), cells - 1);
    double ty = smoothstep(fy - gy);
    for (int x = 0; x < w; ++x) {
      double fx = (x + 0.5) * sx;
      int gx = std::min(int(fx), cells - 1);
      double tx = smoothstep(fx - gx);
      double v00 = 2.0 * unit(hash_seed(seed, {uint64_t(gy), uint64_t(gx)})) - 1.0;
      double v01 = 2.0 * unit(hash_seed(seed, {uint64_t(gy), uint64_t(gx + 1)})) - 1.0;
      double v10 = 2.0 * unit(hash_seed(seed, {uint64_t(gy + 1), uint64_t(gx)})) - 1.0;
      double v11 = 2.0 * unit(hash_seed(seed, {uint64_t(gy + 1), uint64_t(gx + 1)})) - 1.0;
      double v0 = v00 + (v01 - v00) * tx;
      double v1 = v10 + (v11 - v10) * tx;
      field[size_t(y) * w + x] += amplitude * (v0 + (v1 - v0) * ty);
    }
  }
}

// Multi-octave field in roughly [-1,1]: octave o uses a 2^o-cell lattice.
std::vector<double> noise_field(int h, int w, uint64_t seed, int oct_min,
                                int oct_max, double persistence) {
  std::vector<double> field(size_t(h) * w, 0.0);
  double amp = 1.0, total = 0.0;
  for (int o = oct_min; o <= oct_max; ++o) {
    total += amp;
    amp *= persistence;
  }
  amp = 1.0;
  for (int o = oct_min; o <= oct_max; ++o) {
    int cells = std::min(1 << o, std::max(2, std::min(h, w)));
    add_value_noise(field, h, w, hash_seed(seed, {uint64_t(o)}), cells,
                    amp / total);
    amp *= persistence;
  }
  return field;
}

struct KindProfile {
  double base[4];        // mean reflectance per band (R,G,B,NIR)
  double band_gain[4];   // per-band multiplier on the shared field
  double low_amp;        // shared low-frequency amplitude
  double high_amp;       // shared high-frequency amplitude (PAN-only detail)
  double indep_amp;      // per-band low-frequency amplitude (spectral detail)
  bool rectangles;       // blocky structures (urban)
  bool stripes;          // periodic furrows (crops)
};

KindProfile profile_for(SceneKind kind) {
  switch (kind) {
    case SceneKind::Water:
      return {{0.28, 0.34, 0.46, 0.10}, {1.0, 1.0, 1.0, 0.5}, 0.06, 0.015, 0.025, false, false};
    case SceneKind::Urban:
      return {{0.50, 0.47, 0.44, 0.38}, {1.0, 1.0, 1.0, 0.9}, 0.16, 0.07, 0.055, true, false};
    case SceneKind::IceSnow:
      return {{0.80, 0.82, 0.85, 0.70}, {1.0, 1.0, 1.0, 0.8}, 0.09, 0.02, 0.035, false, false};
    case SceneKind::Crops:
      return {{0.32, 0.45, 0.26, 0.60}, {1.0, 0.9, 1.0, 1.1}, 0.12, 0.05, 0.10, false, true};
    case SceneKind::Vegetation:
      return {{0.20, 0.38, 0.16, 0.68}, {0.9, 1.0, 0.9, 1.2}, 0.14, 0.05, 0.09, false, false};
    case SceneKind::Barren:
      return {{0.58, 0.48, 0.38, 0.46}, {1.1, 1.0, 0.9, 1.0}, 0.15, 0.04, 0.05, false, false};
  }
  fail(ErrorKind::BadConfig, "unknown scene kind");
}

void add_rectangles(std::vector<double>& field, int h, int w, uint64_t seed) {
  Rng rng(seed);
  int count = std::max(4, h * w / 260);
  for (int i = 0; i < count; ++i) {
    int rh = 3 + int(rng.below(uint64_t(std::max(2, h / 5))));
    int rw = 3 + int(rng.below(uint64_t(std::max(2, w / 5))));
    int y0 = int(rng.below(uint64_t(std::max(1, h - rh))));
    int x0 = int(rng.below(uint64_t(std::max(1, w - rw))));
    double delta = rng.uniform(-1.0, 1.0);
    for (int y = y0; y < y0 + rh; ++y) {
      for (int x = x0; x < x0 + rw; ++x) {
        field[size_t(y) * w + x] += delta;
      }
    }
  }
  for (double& v : field) v = std::clamp(v, -1.5, 1.5);
}

void add_stripes(std::vector<double>& field, int h, int w, uint64_t seed) {
  Rng rng(seed);
  double angle = rng.uniform(0.0, std::numbers::pi);
  double period = rng.uniform(5.0, 13.0);
  double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
  double cy = std::sin(angle), cx = std::cos(angle);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      field[size_t(y) * w + x] +=
          0.8 * std::sin(2.0 * std::numbers::pi * (cx * x + cy * y) / period + phase);
    }
  }
}

}  // namespace

RasterTile generate_scene(const SceneRecipe& recipe) {
  recipe.validate();
  const int h = recipe.height, w = recipe.width;
  const KindProfile prof = profile_for(recipe.kind);
  const uint64_t kind_seed = hash_seed(recipe.seed, {uint64_t(recipe.kind)});

  // Shared structure. The high-frequency part lives above the MS Nyquist
  // band, so only the PAN observation retains it after degradation.
  int hi_min = std::max(recipe.octave_min, 4);
  int hi_max = std::max(recipe.octave_max, hi_min);
  std::vector<double> shared_lo =
      noise_field(h, w, hash_seed(kind_seed, {1}), recipe.octave_min,
                  std::min(recipe.octave_max, 3), 0.6);
  std::vector<double> shared_hi =
      noise_field(h, w, hash_seed(kind_seed, {2}), hi_min, hi_max, 0.8);
  if (prof.rectangles) add_rectangles(shared_hi, h, w, hash_seed(kind_seed, {3}));
  if (prof.stripes) add_stripes(shared_hi, h, w, hash_seed(kind_seed, {4}));

  // Per-band spectral detail: low-frequency so it survives MS degradation
  // but cannot be recovered from the single-channel PAN.
  std::vector<std::vector<double>> indep(4);
  for (int b = 0; b < 4; ++b) {
    indep[b] = noise_field(h, w, hash_seed(kind_seed, {5, uint64_t(b)}),
                           std::max(1, recipe.octave_min), 3, 0.6);
  }

  // Per-tile spectral jitter, one offset per band.
  Rng jitter_rng(hash_seed(kind_seed, {6}));
  double jitter[4];
  for (double& j : jitter) j = jitter_rng.uniform(-0.05, 0.05);

  RasterTile tile = RasterTile::zeros(4, h, w, 16, default_ms_band_names());
  const double span = recipe.contrast_hi - recipe.contrast_lo;
  for (int b = 0; b < 4; ++b) {
    double* dst = tile.band(b);
    for (int64_t i = 0; i < int64_t(h) * w; ++i) {
      double raw = prof.base[b] + jitter[b] +
                   prof.band_gain[b] * (prof.low_amp * shared_lo[size_t(i)] +
                                        prof.high_amp * shared_hi[size_t(i)]) +
                   prof.indep_amp * indep[b][size_t(i)];
      raw = std::clamp(raw, 0.0, 1.0);
      dst[i] = recipe.contrast_lo + span * raw;
    }
  }
  return tile;
}

}  // namespace pansharp
