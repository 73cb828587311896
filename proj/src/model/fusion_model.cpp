#include "pansharp/model/fusion_model.hpp"

#include <nlohmann/json.hpp>

namespace pansharp {

nn::Tensor FusionModel::infer(const nn::Tensor& ms, const nn::Tensor& pan) const {
  nn::Tape tape(&params(), nullptr);
  int y = forward(tape, ms, pan);
  return tape.value(y);
}

int64_t FusionModel::param_count() const {
  int64_t total = 0;
  for (const auto& p : params()) total += p.value.size();
  return total;
}

}  // namespace pansharp
