#include "pansharp/datagen/wald.hpp"

#include <algorithm>
#include <cmath>

namespace pansharp {

DegradationSpec DegradationSpec::for_ratio(int ratio) {
  DegradationSpec spec;
  spec.ratio = ratio;
  return spec;
}

double DegradationSpec::sigma() const {
  return blur_sigma > 0.0 ? blur_sigma : ratio / 2.0;
}

int DegradationSpec::radius() const {
  return kernel_radius > 0 ? kernel_radius : int(std::ceil(3.0 * sigma()));
}

void DegradationSpec::validate() const {
  if (ratio != 2 && ratio != 4) {
    fail(ErrorKind::BadConfig, "degradation ratio must be 2 or 4");
  }
  if (sigma() <= 0.0) fail(ErrorKind::BadConfig, "blur sigma must be positive");
}

namespace {

// Mirror about the edge pixel (no edge repeat): -1 -> 1, n -> n-2.
int reflect_index(int i, int n) {
  if (n == 1) return 0;
  while (i < 0 || i >= n) {
    if (i < 0) i = -i;
    if (i >= n) i = 2 * n - 2 - i;
  }
  return i;
}

std::vector<double> gaussian_kernel(double sigma, int radius) {
  std::vector<double> k(size_t(2 * radius + 1));
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    double v = std::exp(-0.5 * double(i) * i / (sigma * sigma));
    k[size_t(i + radius)] = v;
    sum += v;
  }
  for (double& v : k) v /= sum;
  return k;
}

}  // namespace

RasterTile gaussian_blur(const RasterTile& in, double sigma, int radius) {
  const std::vector<double> kernel = gaussian_kernel(sigma, radius);
  RasterTile out = in;
  std::vector<double> tmp(size_t(in.height) * in.width);
  for (int b = 0; b < in.bands; ++b) {
    const double* src = in.band(b);
    // Horizontal pass.
    for (int y = 0; y < in.height; ++y) {
      for (int x = 0; x < in.width; ++x) {
        double acc = 0.0;
        for (int k = -radius; k <= radius; ++k) {
          acc += kernel[size_t(k + radius)] *
                 src[int64_t(y) * in.width + reflect_index(x + k, in.width)];
        }
        tmp[size_t(y) * in.width + x] = acc;
      }
    }
    // Vertical pass.
    double* dst = out.band(b);
    for (int y = 0; y < in.height; ++y) {
      for (int x = 0; x < in.width; ++x) {
        double acc = 0.0;
        for (int k = -radius; k <= radius; ++k) {
          acc += kernel[size_t(k + radius)] *
                 tmp[size_t(reflect_index(y + k, in.height)) * in.width + x];
        }
        dst[int64_t(y) * in.width + x] = acc;
      }
    }
  }
  return out;
}

RasterTile wald_degrade(const RasterTile& gt, const DegradationSpec& spec) {
  spec.validate();
  if (gt.height % spec.ratio != 0 || gt.width % spec.ratio != 0) {
    fail(ErrorKind::SizeNotDivisible,
         "tile size " + std::to_string(gt.height) + "x" + std::to_string(gt.width) +
             " not divisible by ratio " + std::to_string(spec.ratio));
  }
  RasterTile blurred = gaussian_blur(gt, spec.sigma(), spec.radius());
  const int r = spec.ratio;
  RasterTile out = RasterTile::zeros(gt.bands, gt.height / r, gt.width / r,
                                     gt.bit_depth, gt.band_names);
  for (int b = 0; b < gt.bands; ++b) {
    const double* src = blurred.band(b);
    double* dst = out.band(b);
    for (int y = 0; y < out.height; ++y) {
      for (int x = 0; x < out.width; ++x) {
        double v = src[int64_t(y) * r * gt.width + int64_t(x) * r];
        dst[int64_t(y) * out.width + x] = std::clamp(v, 0.0, 1.0);
      }
    }
  }
  return out;
}

RasterTile synth_pan(const RasterTile& gt, const std::array<double, 4>& weights) {
  if (gt.bands != 4) {
    fail(ErrorKind::BadShape, "synth_pan expects a 4-band tile");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) fail(ErrorKind::BadWeights, "negative pan weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    fail(ErrorKind::BadWeights, "pan weights must sum to 1");
  }
  RasterTile out = RasterTile::zeros(1, gt.height, gt.width, gt.bit_depth,
                                     default_pan_band_names());
  double* dst = out.band(0);
  for (int b = 0; b < 4; ++b) {
    const double* src = gt.band(b);
    const double w = weights[size_t(b)];
    for (int64_t i = 0; i < int64_t(gt.height) * gt.width; ++i) {
      dst[i] += w * src[i];
    }
  }
  return out;
}

std::vector<RasterTile> tile_raster(const RasterTile& large, int tile_size,
                                    int stride) {
  if (tile_size < 1 || tile_size > large.height || tile_size > large.width) {
    fail(ErrorKind::TileTooLarge,
         "tile size " + std::to_string(tile_size) + " exceeds raster " +
             std::to_string(large.height) + "x" + std::to_string(large.width));
  }
  if (stride < 1) fail(ErrorKind::BadConfig, "stride must be >= 1");
  std::vector<RasterTile> tiles;
  for (int y0 = 0; y0 + tile_size <= large.height; y0 += stride) {
    for (int x0 = 0; x0 + tile_size <= large.width; x0 += stride) {
      RasterTile t = RasterTile::zeros(large.bands, tile_size, tile_size,
                                       large.bit_depth, large.band_names);
      for (int b = 0; b < large.bands; ++b) {
        for (int y = 0; y < tile_size; ++y) {
          const double* src = large.band(b) + int64_t(y0 + y) * large.width + x0;
          std::copy(src, src + tile_size, t.band(b) + int64_t(y) * tile_size);
        }
      }
      tiles.push_back(std::move(t));
    }
  }
  return tiles;
}

}  // namespace pansharp
