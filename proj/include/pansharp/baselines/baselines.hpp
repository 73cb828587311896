// Comparison methods: a non-learned bicubic upsampler and a PNN-style
// single-branch network (up-sampled MS and PAN spliced on the channel axis,
// then three convolution layers).
#pragma once

#include <nlohmann/json.hpp>

#include "pansharp/core/resample.hpp"
#include "pansharp/core/rng.hpp"
#include "pansharp/model/fusion_model.hpp"

namespace pansharp {

// Bicubic x ratio upsample of the MS tile, clamped to [0,1].
RasterTile bicubic_baseline(const RasterTile& ms, int ratio);

struct PnnConfig {
  int width1 = 64;
  int width2 = 32;
  int kernel1 = 9;
  int kernel2 = 5;
  int kernel3 = 5;
  int bands = 4;
  int ratio = 4;

  void validate() const;
  nlohmann::json to_json() const;
  static PnnConfig from_json(const nlohmann::json& j);
  bool operator==(const PnnConfig&) const = default;
};

class Pnn : public FusionModel {
 public:
  Pnn(const PnnConfig& config, uint64_t init_seed);

  int forward(nn::Tape& tape, const nn::Tensor& ms,
              const nn::Tensor& pan) const override;

  std::vector<nn::ParamTensor>& params() override { return params_; }
  const std::vector<nn::ParamTensor>& params() const override { return params_; }
  std::string kind() const override { return "pnn"; }
  nlohmann::json config_json() const override { return config_.to_json(); }
  const PnnConfig& config() const { return config_; }

 private:
  PnnConfig config_;
  std::vector<nn::ParamTensor> params_;
  int w1_, b1_, w2_, b2_, w3_, b3_;
};

}  // namespace pansharp
