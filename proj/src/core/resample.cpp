#include "pansharp/core/resample.hpp"

#include <algorithm>
#include <cmath>

namespace pansharp {

double bicubic_weight(double t) {
  constexpr double a = -0.5;
  double x = std::abs(t);
  if (x <= 1.0) return ((a + 2.0) * x - (a + 3.0)) * x * x + 1.0;
  if (x < 2.0) return ((a * x - 5.0 * a) * x + 8.0 * a) * x - 4.0 * a;
  return 0.0;
}

namespace {

struct Taps {
  // Four source indices (clamped) and weights per output coordinate.
  std::vector<int> idx;     // 4 * out
  std::vector<double> wgt;  // 4 * out
};

Taps make_taps(int in_n, int out_n) {
  Taps taps;
  taps.idx.resize(size_t(out_n) * 4);
  taps.wgt.resize(size_t(out_n) * 4);
  const double scale = double(in_n) / double(out_n);
  for (int o = 0; o < out_n; ++o) {
    // Half-pixel centres: output centre mapped into input coordinates.
    double src = (o + 0.5) * scale - 0.5;
    double base = std::floor(src);
    double frac = src - base;
    for (int k = -1; k <= 2; ++k) {
      int i = int(base) + k;
      taps.idx[size_t(o) * 4 + (k + 1)] = std::clamp(i, 0, in_n - 1);
      taps.wgt[size_t(o) * 4 + (k + 1)] = bicubic_weight(double(k) - frac);
    }
  }
  return taps;
}

}  // namespace

RasterTile resize_bicubic(const RasterTile& in, int out_height, int out_width,
                          bool clamp01) {
  if (in.bands < 1 || in.height < 1 || in.width < 1) {
    fail(ErrorKind::BadShape, "resize_bicubic: empty input tile");
  }
  if (out_height < 1 || out_width < 1) {
    fail(ErrorKind::BadShape, "resize_bicubic: empty output size");
  }
  const Taps ty = make_taps(in.height, out_height);
  const Taps tx = make_taps(in.width, out_width);

  RasterTile out = RasterTile::zeros(in.bands, out_height, out_width,
                                     in.bit_depth, in.band_names);
  // Pass 1: horizontal, at input height.
  std::vector<double> row_pass(size_t(in.height) * out_width);
  for (int b = 0; b < in.bands; ++b) {
    const double* src = in.band(b);
    for (int y = 0; y < in.height; ++y) {
      const double* src_row = src + int64_t(y) * in.width;
      double* dst_row = row_pass.data() + int64_t(y) * out_width;
      for (int x = 0; x < out_width; ++x) {
        const int* ix = &tx.idx[size_t(x) * 4];
        const double* wx = &tx.wgt[size_t(x) * 4];
        dst_row[x] = wx[0] * src_row[ix[0]] + wx[1] * src_row[ix[1]] +
                     wx[2] * src_row[ix[2]] + wx[3] * src_row[ix[3]];
      }
    }
    // Pass 2: vertical.
    double* dst = out.band(b);
    for (int y = 0; y < out_height; ++y) {
      const int* iy = &ty.idx[size_t(y) * 4];
      const double* wy = &ty.wgt[size_t(y) * 4];
      const double* r0 = row_pass.data() + int64_t(iy[0]) * out_width;
      const double* r1 = row_pass.data() + int64_t(iy[1]) * out_width;
      const double* r2 = row_pass.data() + int64_t(iy[2]) * out_width;
      const double* r3 = row_pass.data() + int64_t(iy[3]) * out_width;
      double* dst_row = dst + int64_t(y) * out_width;
      for (int x = 0; x < out_width; ++x) {
        dst_row[x] = wy[0] * r0[x] + wy[1] * r1[x] + wy[2] * r2[x] + wy[3] * r3[x];
      }
    }
  }
  if (clamp01) {
    for (double& v : out.data) v = std::clamp(v, 0.0, 1.0);
  }
  return out;
}

}  // namespace pansharp
