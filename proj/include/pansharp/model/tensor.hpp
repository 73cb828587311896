// Dense CHW tensor of doubles. Weight tensors reuse the same storage with
// shape (out_channels, in_channels, kernel*kernel).
#pragma once

#include <cstdint>
#include <vector>

#include "pansharp/core/types.hpp"

namespace pansharp::nn {

struct Tensor {
  int c = 0, h = 0, w = 0;
  std::vector<double> v;

  Tensor() = default;
  Tensor(int c_, int h_, int w_) : c(c_), h(h_), w(w_), v(size_t(int64_t(c_) * h_ * w_), 0.0) {}

  int64_t size() const { return int64_t(c) * h * w; }
  bool same_shape(const Tensor& o) const { return c == o.c && h == o.h && w == o.w; }
  double& at(int ci, int y, int x) { return v[(size_t(ci) * h + y) * w + x]; }
  double at(int ci, int y, int x) const { return v[(size_t(ci) * h + y) * w + x]; }
  double* data() { return v.data(); }
  const double* data() const { return v.data(); }
  void zero() { std::fill(v.begin(), v.end(), 0.0); }
};

Tensor tensor_from_tile(const RasterTile& tile);
RasterTile tile_from_tensor(const Tensor& t, int bit_depth,
                            std::vector<std::string> band_names,
                            bool clamp01 = true);

}  // namespace pansharp::nn
