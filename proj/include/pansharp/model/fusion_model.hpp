// Common surface of the trainable fusion networks (CMFNet and the PNN
// baseline): parameter access for the optimizer/checkpointer, a tape-building
// forward for training, and convenience inference.
#pragma once

#include <memory>
#include <nlohmann/json_fwd.hpp>
#include <string>

#include "pansharp/model/autograd.hpp"

namespace pansharp {

class FusionModel {
 public:
  virtual ~FusionModel() = default;

  // Builds the forward graph on the tape and returns the output node
  // (4 x H x W at PAN resolution).
  virtual int forward(nn::Tape& tape, const nn::Tensor& ms,
                      const nn::Tensor& pan) const = 0;

  virtual std::vector<nn::ParamTensor>& params() = 0;
  virtual const std::vector<nn::ParamTensor>& params() const = 0;

  virtual std::string kind() const = 0;
  virtual nlohmann::json config_json() const = 0;

  nn::Tensor infer(const nn::Tensor& ms, const nn::Tensor& pan) const;
  int64_t param_count() const;
};

}  // namespace pansharp
