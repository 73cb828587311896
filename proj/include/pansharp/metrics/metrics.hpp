// Reduced-resolution image quality metrics. Conventions, fixed here and
// echoed in the report headers: unit-range data, PSNR capped at 100 dB when
// the MSE drops below 1e-10, SAM in radians, MSE reported as MSE x 10^4.
#pragma once

#include <vector>

#include "pansharp/core/types.hpp"

namespace pansharp {

inline constexpr double kPsnrCap = 100.0;
inline constexpr double kPsnrMseFloor = 1e-10;

struct MetricValues {
  double psnr = 0;
  double ssim = 0;
  double sam = 0;
  double ergas = 0;
  double scc = 0;
  double mse_scaled = 0;  // MSE x 10^4
};

// -10*log10(MSE) with peak 1; capped at 100 dB for MSE < 1e-10.
double psnr(const RasterTile& y, const RasterTile& gt);

// Mean SSIM per band, averaged over bands. 11x11 Gaussian window
// (sigma 1.5) over the valid region, k1 = 0.01, k2 = 0.03, dynamic range 1.
// Requires both spatial dimensions >= 11.
double ssim(const RasterTile& y, const RasterTile& gt);

// Mean spectral angle (radians) between per-pixel band vectors. Norms are
// floored at 1e-8; pixels where both vectors vanish contribute zero.
double sam(const RasterTile& y, const RasterTile& gt);

// 100 * (1/ratio) * sqrt(mean_b (RMSE_b / mu_b)^2) over usable bands; bands
// whose reference mean falls below 1e-8 are excluded and flagged.
double ergas(const RasterTile& y, const RasterTile& gt, int ratio,
             std::vector<int>* excluded_bands = nullptr);

// Mean per-band Pearson correlation of Laplacian-filtered images
// (8-neighbour kernel, reflected borders); bands whose filtered signal has
// zero variance contribute zero.
double scc(const RasterTile& y, const RasterTile& gt);

double mse_scaled(const RasterTile& y, const RasterTile& gt);

struct MaeMap {
  int height = 0;
  int width = 0;
  std::vector<double> values;  // mean |y - gt| across bands, per pixel
};

MaeMap mae_map(const RasterTile& y, const RasterTile& gt);

MetricValues compute_all_metrics(const RasterTile& y, const RasterTile& gt,
                                 int ratio);

}  // namespace pansharp
