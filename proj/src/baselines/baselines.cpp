#include "pansharp/baselines/baselines.hpp"

#include <cmath>

namespace pansharp {

using nn::Tape;
using nn::Tensor;

RasterTile bicubic_baseline(const RasterTile& ms, int ratio) {
  if (ratio != 2 && ratio != 4) {
    fail(ErrorKind::BadShape, "bicubic_baseline ratio must be 2 or 4");
  }
  if (ms.bands < 1 || ms.height < 1 || ms.width < 1) {
    fail(ErrorKind::BadShape, "bicubic_baseline: empty input");
  }
  return resize_bicubic(ms, ms.height * ratio, ms.width * ratio, true);
}

void PnnConfig::validate() const {
  if (width1 < 1 || width2 < 1) fail(ErrorKind::BadConfig, "PNN widths must be >= 1");
  for (int k : {kernel1, kernel2, kernel3}) {
    if (k < 1 || k % 2 == 0) fail(ErrorKind::BadConfig, "PNN kernels must be odd");
  }
  if (bands != 4) fail(ErrorKind::BadConfig, "PNN bands must be 4");
  if (ratio != 2 && ratio != 4) fail(ErrorKind::BadConfig, "PNN ratio must be 2 or 4");
}

nlohmann::json PnnConfig::to_json() const {
  return {
      {"width1", width1}, {"width2", width2}, {"kernel1", kernel1},
      {"kernel2", kernel2}, {"kernel3", kernel3}, {"bands", bands},
      {"ratio", ratio},
  };
}

PnnConfig PnnConfig::from_json(const nlohmann::json& j) {
  PnnConfig c;
  c.width1 = j.at("width1").get<int>();
  c.width2 = j.at("width2").get<int>();
  c.kernel1 = j.at("kernel1").get<int>();
  c.kernel2 = j.at("kernel2").get<int>();
  c.kernel3 = j.at("kernel3").get<int>();
  c.bands = j.at("bands").get<int>();
  c.ratio = j.at("ratio").get<int>();
  c.validate();
  return c;
}

Pnn::Pnn(const PnnConfig& config, uint64_t init_seed) : config_(config) {
  config_.validate();
  Rng rng(hash_seed(init_seed, {0x3a71}));
  auto add_conv = [&](const std::string& name, int cout, int cin, int k) {
    Tensor weight(cout, cin, k * k);
    const double scale = std::sqrt(2.0 / double(cin * k * k));
    for (double& v : weight.v) v = scale * rng.gaussian();
    params_.push_back({name + ".w", std::move(weight)});
    int w = int(params_.size()) - 1;
    params_.push_back({name + ".b", Tensor(cout, 1, 1)});
    return std::pair<int, int>(w, int(params_.size()) - 1);
  };
  std::tie(w1_, b1_) = add_conv("pnn.conv1", config_.width1, config_.bands + 1,
                                config_.kernel1);
  std::tie(w2_, b2_) = add_conv("pnn.conv2", config_.width2, config_.width1,
                                config_.kernel2);
  std::tie(w3_, b3_) = add_conv("pnn.conv3", config_.bands, config_.width2,
                                config_.kernel3);
}

int Pnn::forward(Tape& tape, const Tensor& ms, const Tensor& pan) const {
  if (ms.c != config_.bands || pan.c != 1) {
    fail(ErrorKind::BadShape, "PNN expects 4-band MS and 1-band PAN input");
  }
  if (pan.h != config_.ratio * ms.h || pan.w != config_.ratio * ms.w) {
    fail(ErrorKind::BadShape, "PNN: PAN size is not ratio x the MS size");
  }
  // Channel splice of the bicubic-upsampled MS with the PAN. The stack is a
  // constant from the graph's point of view, so it is built off-tape.
  RasterTile ms_tile = tile_from_tensor(ms, 16, default_ms_band_names(), false);
  RasterTile up = resize_bicubic(ms_tile, pan.h, pan.w, true);
  Tensor stack(config_.bands + 1, pan.h, pan.w);
  std::copy(up.data.begin(), up.data.end(), stack.v.begin());
  std::copy(pan.v.begin(), pan.v.end(),
            stack.v.begin() + size_t(int64_t(config_.bands) * pan.h * pan.w));

  int x = tape.input(std::move(stack));
  int h = tape.conv2d(x, tape.param(w1_), tape.param(b1_));
  h = tape.silu(h);
  h = tape.conv2d(h, tape.param(w2_), tape.param(b2_));
  h = tape.silu(h);
  return tape.conv2d(h, tape.param(w3_), tape.param(b3_));
}

}  // namespace pansharp
