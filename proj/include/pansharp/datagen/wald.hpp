// Reduced-resolution pipeline: the full-resolution synthetic scene is the
// ground truth, the degraded copy becomes the MS input, and a spectral mix
// stands in for the PAN sensor.
#pragma once

#include <array>
#include <vector>

#include "pansharp/core/types.hpp"

namespace pansharp {

struct DegradationSpec {
  int ratio = 4;
  double blur_sigma = 0.0;  // <= 0 selects the default ratio/2
  int kernel_radius = 0;    // <= 0 selects ceil(3 * sigma)

  static DegradationSpec for_ratio(int ratio);
  double sigma() const;
  int radius() const;
  void validate() const;
};

// Separable Gaussian blur (reflected borders) followed by decimation by the
// ratio with top-left phase. Output size = input size / ratio.
RasterTile wald_degrade(const RasterTile& gt, const DegradationSpec& spec);

// Single-band convex combination of the ground-truth bands.
RasterTile synth_pan(const RasterTile& gt, const std::array<double, 4>& weights);

// Row-major tiling; windows that would overrun the border are dropped.
std::vector<RasterTile> tile_raster(const RasterTile& large, int tile_size,
                                    int stride);

// Gaussian blur helper used by wald_degrade; exposed for tests.
RasterTile gaussian_blur(const RasterTile& in, double sigma, int radius);

}  // namespace pansharp
