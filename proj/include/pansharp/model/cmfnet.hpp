// Cascaded multiscale fusion network. Two decoupled encoders turn the MS and
// PAN inputs into three-level feature pyramids; a fusion autoencoder merges
// same-scale features level by level and decodes back to full resolution,
// optionally re-injecting encoder features into every decoder stage.
//
// Channel/size algebra (C = base_channels, input PAN H x W):
//   MS pyramid   level i: (C * 2^(3-i)) x H/2^(3-i) x W/2^(3-i), i in 1..3
//   PAN pyramid  level i: (C * 2^(i-1)) x H/2^(i-1) x W/2^(i-1), i in 1..3
//   fusion pyramid follows the PAN convention up to cascade_levels.
// Resamplers change scale and channel count together (bilinear x2 followed by
// a channel-halving 1x1 conv going up; 2x2 mean pool followed by a
// channel-doubling 1x1 conv going down), which keeps every Block
// channel-preserving and swappable.
#pragma once

#include <nlohmann/json.hpp>

#include "pansharp/core/rng.hpp"
#include "pansharp/model/fusion_model.hpp"

namespace pansharp {

enum class TaskMode { Pansharpen, SrNoPan, ColorizeNoMs };
enum class BlockKind { ResidualConv };

const char* to_string(TaskMode m);
TaskMode task_mode_from_string(const std::string& name);

struct ModelConfig {
  int base_channels = 32;
  int cascade_levels = 3;
  bool injection = true;
  TaskMode mode = TaskMode::Pansharpen;
  BlockKind block_kind = BlockKind::ResidualConv;
  int bands = 4;
  int ratio = 4;
  bool output_residual = false;  // add bicubic-upsampled MS to the output

  void validate() const;
  nlohmann::json to_json() const;
  static ModelConfig from_json(const nlohmann::json& j);
  bool operator==(const ModelConfig&) const = default;
};

// Node ids of one feature pyramid on a tape; level(i) uses 1-based indexing.
struct Pyramid {
  std::vector<int> nodes;
  int level(int i) const { return nodes[size_t(i) - 1]; }
  int depth() const { return int(nodes.size()); }
};

class CmfNet : public FusionModel {
 public:
  CmfNet(const ModelConfig& config, uint64_t init_seed);

  // The four architecture stages, exposed for tests and inspection.
  Pyramid ms_encode(nn::Tape& tape, int x_ms) const;
  Pyramid pan_encode(nn::Tape& tape, int x_pan) const;
  Pyramid fusion_encode(nn::Tape& tape, const Pyramid& s, const Pyramid& p) const;
  int fusion_decode(nn::Tape& tape, const Pyramid& e, const Pyramid& s,
                    const Pyramid& p) const;

  int forward(nn::Tape& tape, const nn::Tensor& ms,
              const nn::Tensor& pan) const override;

  struct Trace {
    Pyramid s, p, e;
    int f_o = -1;
    int y = -1;
  };
  Trace forward_trace(nn::Tape& tape, const nn::Tensor& ms,
                      const nn::Tensor& pan) const;

  std::vector<nn::ParamTensor>& params() override { return params_; }
  const std::vector<nn::ParamTensor>& params() const override { return params_; }
  std::string kind() const override { return "cmfnet"; }
  nlohmann::json config_json() const override { return config_.to_json(); }
  const ModelConfig& config() const { return config_; }

 private:
  struct ConvRef {
    int w = -1, b = -1;
  };
  struct BlockRef {
    ConvRef conv1, conv2;
    ConvRef proj;  // 1x1 skip projection, unused while cin == cout
    bool has_proj = false;
  };

  ConvRef add_conv(const std::string& name, int cout, int cin, int k, Rng& rng);
  BlockRef add_block(const std::string& name, int cin, int cout, Rng& rng);
  int run_conv(nn::Tape& tape, const ConvRef& conv, int x) const;
  int run_block(nn::Tape& tape, const BlockRef& block, int x) const;
  int upsample(nn::Tape& tape, const ConvRef& channel_conv, int x) const;
  int downsample(nn::Tape& tape, const ConvRef& channel_conv, int x) const;
  void check_input(const nn::Tensor& ms, const nn::Tensor& pan) const;

  ModelConfig config_;
  std::vector<nn::ParamTensor> params_;

  ConvRef ms_stem_, pan_stem_, head_;
  BlockRef ms_block_[3], pan_block_[3];
  ConvRef ms_up_[2], pan_down_[2];        // between pyramid levels
  BlockRef fuse_block_[3];
  ConvRef fuse_down_[2];                  // fusion encoder, levels 2..L
  BlockRef dec_block_[2];
  ConvRef dec_up_[2];                     // decoder, levels L-1..1
};

// Total learnable scalar count for a configuration; strictly increasing in
// base_channels and cascade_levels.
int64_t count_params(const ModelConfig& config);

}  // namespace pansharp
