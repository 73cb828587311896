// Reverse-mode autodiff over a per-forward tape. Covers exactly the ops the
// fusion networks need: same-padding convolution, SiLU, sums, 2x average
// pooling, bilinear 2x upsampling, and an MSE head.
//
// Parameters live outside the tape (see ParamTensor); gradients accumulate
// into a GradStore aligned with the owning model's parameter list, so
// several tapes can run against the same parameters and be reduced in a
// caller-chosen order.
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "pansharp/model/tensor.hpp"

namespace pansharp::nn {

struct ParamTensor {
  std::string name;
  Tensor value;
};

using GradStore = std::vector<Tensor>;  // same order/shapes as the params

GradStore make_grad_store(const std::vector<ParamTensor>& params);

class Tape {
 public:
  // params/grads may be null for inference-only tapes.
  Tape(const std::vector<ParamTensor>* params, GradStore* grads)
      : params_(params), grads_(grads) {}

  bool tracking() const { return grads_ != nullptr; }

  int input(Tensor t);                 // leaf without gradient
  int param(int param_index);          // leaf bound to a model parameter

  // y = conv_k(x; W, b), stride 1, zero padding k/2 (same size).
  int conv2d(int x, int weight_param, int bias_param);
  int silu(int x);
  int add(int a, int b);
  int add3(int a, int b, int c);
  int avgpool2(int x);
  int upsample_bilinear2(int x);
  // Mean squared error against a constant target; returns a 1x1x1 node.
  int mse_against(int pred, const Tensor& target);

  const Tensor& value(int node) const { return nodes_[size_t(node)].value; }
  double scalar(int node) const { return nodes_[size_t(node)].value.v[0]; }

  // Reverse pass from a scalar node; accumulates parameter gradients into
  // the bound GradStore.
  void backward(int node);

 private:
  struct Node {
    Tensor value;
    Tensor grad;
    bool needs_grad = false;
    int param_index = -1;
    std::function<void(Tape&, Node&)> backprop;
  };

  int push(Node node);
  Tensor& grad_of(int node);
  const std::vector<ParamTensor>* params_;
  GradStore* grads_;
  std::vector<Node> nodes_;
};

// Weight layout helpers shared by forward and backward convolution.
struct ConvShape {
  int cout, cin, k;
};
ConvShape conv_shape_of(const Tensor& weight);

}  // namespace pansharp::nn
