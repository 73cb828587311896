#include "pansharp/model/cmfnet.hpp"

#include <cmath>

#include "pansharp/core/resample.hpp"

namespace pansharp {

using nn::Tape;
using nn::Tensor;

const char* to_string(TaskMode m) {
  switch (m) {
    case TaskMode::Pansharpen: return "pansharpen";
    case TaskMode::SrNoPan: return "sr_no_pan";
    case TaskMode::ColorizeNoMs: return "colorize_no_ms";
  }
  return "?";
}

TaskMode task_mode_from_string(const std::string& name) {
  if (name == "pansharpen") return TaskMode::Pansharpen;
  if (name == "sr_no_pan") return TaskMode::SrNoPan;
  if (name == "colorize_no_ms") return TaskMode::ColorizeNoMs;
  fail(ErrorKind::BadMode, "unknown task mode '" + name + "'");
}

void ModelConfig::validate() const {
  if (base_channels < 4) fail(ErrorKind::BadConfig, "base_channels must be >= 4");
  if (cascade_levels < 1 || cascade_levels > 3) {
    fail(ErrorKind::BadConfig, "cascade_levels must be in {1,2,3}");
  }
  if (bands != 4) fail(ErrorKind::BadConfig, "bands must be 4");
  if (ratio != 4) fail(ErrorKind::BadConfig, "model ratio must be 4");
}

nlohmann::json ModelConfig::to_json() const {
  return {
      {"base_channels", base_channels},
      {"cascade_levels", cascade_levels},
      {"injection", injection},
      {"mode", to_string(mode)},
      {"block_kind", "residual_conv"},
      {"bands", bands},
      {"ratio", ratio},
      {"output_residual", output_residual},
  };
}

ModelConfig ModelConfig::from_json(const nlohmann::json& j) {
  ModelConfig c;
  c.base_channels = j.at("base_channels").get<int>();
  c.cascade_levels = j.at("cascade_levels").get<int>();
  c.injection = j.at("injection").get<bool>();
  c.mode = task_mode_from_string(j.at("mode").get<std::string>());
  if (j.at("block_kind").get<std::string>() != "residual_conv") {
    fail(ErrorKind::BadConfig, "unknown block_kind");
  }
  c.bands = j.at("bands").get<int>();
  c.ratio = j.at("ratio").get<int>();
  c.output_residual = j.at("output_residual").get<bool>();
  c.validate();
  return c;
}

// ---------------------------------------------------------------------------

CmfNet::ConvRef CmfNet::add_conv(const std::string& name, int cout, int cin,
                                 int k, Rng& rng) {
  ConvRef ref;
  Tensor weight(cout, cin, k * k);
  const double scale = std::sqrt(2.0 / double(cin * k * k));
  for (double& v : weight.v) v = scale * rng.gaussian();
  params_.push_back({name + ".w", std::move(weight)});
  ref.w = int(params_.size()) - 1;
  params_.push_back({name + ".b", Tensor(cout, 1, 1)});
  ref.b = int(params_.size()) - 1;
  return ref;
}

CmfNet::BlockRef CmfNet::add_block(const std::string& name, int cin, int cout,
                                   Rng& rng) {
  BlockRef block;
  block.conv1 = add_conv(name + ".conv1", cout, cin, 3, rng);
  block.conv2 = add_conv(name + ".conv2", cout, cout, 3, rng);
  if (cin != cout) {
    block.proj = add_conv(name + ".proj", cout, cin, 1, rng);
    block.has_proj = true;
  }
  return block;
}

CmfNet::CmfNet(const ModelConfig& config, uint64_t init_seed) : config_(config) {
  config_.validate();
  const int c = config_.base_channels;
  const int levels = config_.cascade_levels;
  Rng rng(hash_seed(init_seed, {0x9c4f}));

  ms_stem_ = add_conv("ms.stem", 4 * c, config_.bands, 3, rng);
  ms_block_[0] = add_block("ms.block1", 4 * c, 4 * c, rng);
  ms_up_[0] = add_conv("ms.up2", 2 * c, 4 * c, 1, rng);
  ms_block_[1] = add_block("ms.block2", 2 * c, 2 * c, rng);
  ms_up_[1] = add_conv("ms.up3", c, 2 * c, 1, rng);
  ms_block_[2] = add_block("ms.block3", c, c, rng);

  pan_stem_ = add_conv("pan.stem", c, 1, 3, rng);
  pan_block_[0] = add_block("pan.block1", c, c, rng);
  pan_down_[0] = add_conv("pan.down2", 2 * c, c, 1, rng);
  pan_block_[1] = add_block("pan.block2", 2 * c, 2 * c, rng);
  pan_down_[1] = add_conv("pan.down3", 4 * c, 2 * c, 1, rng);
  pan_block_[2] = add_block("pan.block3", 4 * c, 4 * c, rng);

  fuse_block_[0] = add_block("fuse.block1", c, c, rng);
  if (levels >= 2) {
    fuse_down_[0] = add_conv("fuse.down2", 2 * c, c, 1, rng);
    fuse_block_[1] = add_block("fuse.block2", 2 * c, 2 * c, rng);
  }
  if (levels >= 3) {
    fuse_down_[1] = add_conv("fuse.down3", 4 * c, 2 * c, 1, rng);
    fuse_block_[2] = add_block("fuse.block3", 4 * c, 4 * c, rng);
  }
  if (levels >= 3) {
    dec_up_[1] = add_conv("dec.up2", 2 * c, 4 * c, 1, rng);
    dec_block_[1] = add_block("dec.block2", 2 * c, 2 * c, rng);
  }
  if (levels >= 2) {
    dec_up_[0] = add_conv("dec.up1", c, 2 * c, 1, rng);
    dec_block_[0] = add_block("dec.block1", c, c, rng);
  }
  head_ = add_conv("head", config_.bands, c, 3, rng);
}

int CmfNet::run_conv(Tape& tape, const ConvRef& conv, int x) const {
  return tape.conv2d(x, tape.param(conv.w), tape.param(conv.b));
}

int CmfNet::run_block(Tape& tape, const BlockRef& block, int x) const {
  int h = run_conv(tape, block.conv1, x);
  h = tape.silu(h);
  h = run_conv(tape, block.conv2, h);
  int skip = block.has_proj ? run_conv(tape, block.proj, x) : x;
  return tape.add(skip, h);
}

int CmfNet::upsample(Tape& tape, const ConvRef& channel_conv, int x) const {
  return run_conv(tape, channel_conv, tape.upsample_bilinear2(x));
}

int CmfNet::downsample(Tape& tape, const ConvRef& channel_conv, int x) const {
  return run_conv(tape, channel_conv, tape.avgpool2(x));
}

Pyramid CmfNet::ms_encode(Tape& tape, int x_ms) const {
  Pyramid s;
  int feat = run_conv(tape, ms_stem_, x_ms);
  int s1 = run_block(tape, ms_block_[0], feat);
  int s2 = run_block(tape, ms_block_[1], upsample(tape, ms_up_[0], s1));
  int s3 = run_block(tape, ms_block_[2], upsample(tape, ms_up_[1], s2));
  s.nodes = {s1, s2, s3};
  return s;
}

Pyramid CmfNet::pan_encode(Tape& tape, int x_pan) const {
  Pyramid p;
  int feat = run_conv(tape, pan_stem_, x_pan);
  int p1 = run_block(tape, pan_block_[0], feat);
  int p2 = run_block(tape, pan_block_[1], downsample(tape, pan_down_[0], p1));
  int p3 = run_block(tape, pan_block_[2], downsample(tape, pan_down_[1], p2));
  p.nodes = {p1, p2, p3};
  return p;
}

Pyramid CmfNet::fusion_encode(Tape& tape, const Pyramid& s, const Pyramid& p) const {
  Pyramid e;
  int e1 = run_block(tape, fuse_block_[0], tape.add(s.level(3), p.level(1)));
  e.nodes.push_back(e1);
  for (int i = 2; i <= config_.cascade_levels; ++i) {
    int down = downsample(tape, fuse_down_[i - 2], e.level(i - 1));
    int sum = tape.add3(s.level(4 - i), p.level(i), down);
    e.nodes.push_back(run_block(tape, fuse_block_[i - 1], sum));
  }
  return e;
}

int CmfNet::fusion_decode(Tape& tape, const Pyramid& e, const Pyramid& s,
                          const Pyramid& p) const {
  int d = e.level(e.depth());
  for (int i = e.depth() - 1; i >= 1; --i) {
    int up = upsample(tape, dec_up_[i - 1], d);
    int sum = tape.add(up, e.level(i));
    if (config_.injection) {
      sum = tape.add3(sum, s.level(4 - i), p.level(i));
    }
    d = run_block(tape, dec_block_[i - 1], sum);
  }
  return d;
}

void CmfNet::check_input(const Tensor& ms, const Tensor& pan) const {
  if (ms.c != config_.bands || pan.c != 1) {
    fail(ErrorKind::BadShape, "expected 4-band MS and 1-band PAN input");
  }
  if (pan.h != config_.ratio * ms.h || pan.w != config_.ratio * ms.w) {
    fail(ErrorKind::BadShape,
         "PAN size " + std::to_string(pan.h) + "x" + std::to_string(pan.w) +
             " is not " + std::to_string(config_.ratio) + "x the MS size");
  }
  if (pan.h % 4 != 0 || pan.w % 4 != 0 || pan.h < 8 || pan.w < 8) {
    fail(ErrorKind::BadShape, "PAN size must be >= 8 and divisible by 4");
  }
}

CmfNet::Trace CmfNet::forward_trace(Tape& tape, const Tensor& ms,
                                    const Tensor& pan) const {
  check_input(ms, pan);
  Tensor ms_in = ms, pan_in = pan;
  if (config_.mode == TaskMode::SrNoPan) pan_in.zero();
  if (config_.mode == TaskMode::ColorizeNoMs) ms_in.zero();

  Trace trace;
  int x_ms = tape.input(std::move(ms_in));
  int x_pan = tape.input(std::move(pan_in));
  trace.s = ms_encode(tape, x_ms);
  trace.p = pan_encode(tape, x_pan);
  trace.e = fusion_encode(tape, trace.s, trace.p);
  trace.f_o = fusion_decode(tape, trace.e, trace.s, trace.p);
  trace.y = run_conv(tape, head_, trace.f_o);
  if (config_.output_residual) {
    RasterTile ms_tile = tile_from_tensor(ms, 16, default_ms_band_names(), false);
    RasterTile up = resize_bicubic(ms_tile, pan.h, pan.w, false);
    trace.y = tape.add(trace.y, tape.input(tensor_from_tile(up)));
  }
  return trace;
}

int CmfNet::forward(Tape& tape, const Tensor& ms, const Tensor& pan) const {
  return forward_trace(tape, ms, pan).y;
}

int64_t count_params(const ModelConfig& config) {
  CmfNet net(config, 0);
  return net.param_count();
}

}  // namespace pansharp
