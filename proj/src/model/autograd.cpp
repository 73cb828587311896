#include "pansharp/model/autograd.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>

#include "pansharp/core/error.hpp"

namespace pansharp::nn {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ColMat = Eigen::MatrixXd;
using RowMap = Eigen::Map<RowMat>;
using ConstRowMap = Eigen::Map<const RowMat>;

namespace {
// Pixels per im2col block; bounds the scratch matrix at K x kColBlock.
constexpr int kColBlock = 4096;
}  // namespace

Tensor tensor_from_tile(const RasterTile& tile) {
  Tensor t(tile.bands, tile.height, tile.width);
  t.v = tile.data;
  return t;
}

RasterTile tile_from_tensor(const Tensor& t, int bit_depth,
                            std::vector<std::string> band_names, bool clamp01) {
  RasterTile tile = RasterTile::zeros(t.c, t.h, t.w, bit_depth, std::move(band_names));
  tile.data = t.v;
  if (clamp01) {
    for (double& v : tile.data) v = std::clamp(v, 0.0, 1.0);
  }
  return tile;
}

GradStore make_grad_store(const std::vector<ParamTensor>& params) {
  GradStore grads;
  grads.reserve(params.size());
  for (const auto& p : params) {
    grads.emplace_back(p.value.c, p.value.h, p.value.w);
  }
  return grads;
}

ConvShape conv_shape_of(const Tensor& weight) {
  int k = int(std::lround(std::sqrt(double(weight.w))));
  if (k * k != weight.w || k % 2 == 0) {
    fail(ErrorKind::BadShape, "conv weight kernel must be odd and square");
  }
  return ConvShape{weight.c, weight.h, k};
}

int Tape::push(Node node) {
  nodes_.push_back(std::move(node));
  return int(nodes_.size()) - 1;
}

Tensor& Tape::grad_of(int node) {
  Node& n = nodes_[size_t(node)];
  if (n.grad.size() == 0) {
    n.grad = Tensor(n.value.c, n.value.h, n.value.w);
  }
  return n.grad;
}

int Tape::input(Tensor t) {
  Node n;
  n.value = std::move(t);
  return push(std::move(n));
}

int Tape::param(int param_index) {
  if (!params_) fail(ErrorKind::BadConfig, "tape has no bound parameters");
  Node n;
  n.value = (*params_)[size_t(param_index)].value;  // copy keeps tape self-contained
  n.param_index = param_index;
  if (tracking()) {
    n.needs_grad = true;
    n.backprop = [](Tape& tape, Node& self) {
      if (self.grad.size() == 0) return;
      Tensor& sink = (*tape.grads_)[size_t(self.param_index)];
      for (int64_t i = 0; i < self.grad.size(); ++i) sink.v[size_t(i)] += self.grad.v[size_t(i)];
    };
  }
  return push(std::move(n));
}

// ---------------------------------------------------------------------------
// Convolution (stride 1, zero padding k/2) via blocked im2col + GEMM.

namespace {

// Fills cols (K x count, column-major) for output pixels [first, first+count).
void im2col_block(const Tensor& x, int k, int pad, int first, int count,
                  ColMat& cols) {
  const int w = x.w, h = x.h, cin = x.c;
  for (int j = 0; j < count; ++j) {
    const int p = first + j;
    const int oy = p / w, ox = p % w;
    double* col = cols.data() + int64_t(j) * cols.rows();
    int row = 0;
    for (int ci = 0; ci < cin; ++ci) {
      const double* plane = x.data() + int64_t(ci) * h * w;
      for (int ky = 0; ky < k; ++ky) {
        const int y2 = oy + ky - pad;
        if (y2 < 0 || y2 >= h) {
          for (int kx = 0; kx < k; ++kx) col[row++] = 0.0;
          continue;
        }
        const double* src = plane + int64_t(y2) * w;
        for (int kx = 0; kx < k; ++kx) {
          const int x2 = ox + kx - pad;
          col[row++] = (x2 < 0 || x2 >= w) ? 0.0 : src[x2];
        }
      }
    }
  }
}

// Scatter-adds dcols (K x count) back into dx.
void col2im_block(const ColMat& dcols, int k, int pad, int first, int count,
                  Tensor& dx) {
  const int w = dx.w, h = dx.h, cin = dx.c;
  for (int j = 0; j < count; ++j) {
    const int p = first + j;
    const int oy = p / w, ox = p % w;
    const double* col = dcols.data() + int64_t(j) * dcols.rows();
    int row = 0;
    for (int ci = 0; ci < cin; ++ci) {
      double* plane = dx.data() + int64_t(ci) * h * w;
      for (int ky = 0; ky < k; ++ky) {
        const int y2 = oy + ky - pad;
        if (y2 < 0 || y2 >= h) {
          row += k;
          continue;
        }
        double* dst = plane + int64_t(y2) * w;
        for (int kx = 0; kx < k; ++kx, ++row) {
          const int x2 = ox + kx - pad;
          if (x2 >= 0 && x2 < w) dst[x2] += col[row];
        }
      }
    }
  }
}

}  // namespace

int Tape::conv2d(int x, int weight_param, int bias_param) {
  const Tensor& xin = nodes_[size_t(x)].value;
  const Tensor& weight = nodes_[size_t(weight_param)].value;
  const Tensor& bias = nodes_[size_t(bias_param)].value;
  const ConvShape cs = conv_shape_of(weight);
  if (xin.c != cs.cin) {
    fail(ErrorKind::BadShape,
         "conv2d input channels " + std::to_string(xin.c) + " != " +
             std::to_string(cs.cin));
  }
  if (bias.c != cs.cout || bias.h != 1 || bias.w != 1) {
    fail(ErrorKind::BadShape, "conv2d bias shape mismatch");
  }
  const int pad = cs.k / 2;
  const int64_t hw = int64_t(xin.h) * xin.w;
  const int K = cs.cin * cs.k * cs.k;

  Node out;
  out.value = Tensor(cs.cout, xin.h, xin.w);
  {
    ConstRowMap wmap(weight.data(), cs.cout, K);
    RowMap ymap(out.value.data(), cs.cout, hw);
    ColMat cols(K, std::min<int64_t>(kColBlock, hw));
    for (int64_t first = 0; first < hw; first += kColBlock) {
      const int count = int(std::min<int64_t>(kColBlock, hw - first));
      im2col_block(xin, cs.k, pad, int(first), count, cols);
      ymap.middleCols(first, count).noalias() = wmap * cols.leftCols(count);
    }
    for (int co = 0; co < cs.cout; ++co) {
      ymap.row(co).array() += bias.v[size_t(co)];
    }
  }

  if (tracking()) {
    out.needs_grad = true;
    out.backprop = [x, weight_param, bias_param, cs, pad, K, hw](Tape& tape, Node& self) {
      if (self.grad.size() == 0) return;
      const Tensor& xin = tape.nodes_[size_t(x)].value;
      const Tensor& weight = tape.nodes_[size_t(weight_param)].value;
      ConstRowMap dymap(self.grad.data(), cs.cout, hw);

      Tensor& dbias = tape.grad_of(bias_param);
      for (int co = 0; co < cs.cout; ++co) {
        dbias.v[size_t(co)] += dymap.row(co).sum();
      }

      Tensor& dweight = tape.grad_of(weight_param);
      RowMap dwmap(dweight.data(), cs.cout, K);
      const bool x_needs = tape.nodes_[size_t(x)].needs_grad;
      Tensor* dx = x_needs ? &tape.grad_of(x) : nullptr;
      ConstRowMap wmap(weight.data(), cs.cout, K);

      ColMat cols(K, std::min<int64_t>(kColBlock, hw));
      ColMat dyblk(cs.cout, std::min<int64_t>(kColBlock, hw));
      ColMat dcols;
      if (x_needs) dcols.resize(K, std::min<int64_t>(kColBlock, hw));
      for (int64_t first = 0; first < hw; first += kColBlock) {
        const int count = int(std::min<int64_t>(kColBlock, hw - first));
        im2col_block(xin, cs.k, pad, int(first), count, cols);
        dyblk.leftCols(count) = dymap.middleCols(first, count);
        dwmap.noalias() += dyblk.leftCols(count) * cols.leftCols(count).transpose();
        if (x_needs) {
          dcols.leftCols(count).noalias() = wmap.transpose() * dyblk.leftCols(count);
          col2im_block(dcols, cs.k, pad, int(first), count, *dx);
        }
      }
    };
  }
  return push(std::move(out));
}

// ---------------------------------------------------------------------------

int Tape::silu(int x) {
  const Tensor& xin = nodes_[size_t(x)].value;
  Node out;
  out.value = Tensor(xin.c, xin.h, xin.w);
  for (int64_t i = 0; i < xin.size(); ++i) {
    const double v = xin.v[size_t(i)];
    out.value.v[size_t(i)] = v / (1.0 + std::exp(-v));
  }
  if (tracking() && nodes_[size_t(x)].needs_grad) {
    out.needs_grad = true;
    out.backprop = [x](Tape& tape, Node& self) {
      if (self.grad.size() == 0) return;
      const Tensor& xin = tape.nodes_[size_t(x)].value;
      Tensor& dx = tape.grad_of(x);
      for (int64_t i = 0; i < xin.size(); ++i) {
        const double v = xin.v[size_t(i)];
        const double s = 1.0 / (1.0 + std::exp(-v));
        dx.v[size_t(i)] += self.grad.v[size_t(i)] * s * (1.0 + v * (1.0 - s));
      }
    };
  }
  return push(std::move(out));
}

static void check_same_shape(const Tensor& a, const Tensor& b, const char* op) {
  if (!a.same_shape(b)) {
    fail(ErrorKind::ShapeMismatch,
         std::string(op) + ": " + std::to_string(a.c) + "x" + std::to_string(a.h) +
             "x" + std::to_string(a.w) + " vs " + std::to_string(b.c) + "x" +
             std::to_string(b.h) + "x" + std::to_string(b.w));
  }
}

int Tape::add(int a, int b) {
  const Tensor& ta = nodes_[size_t(a)].value;
  const Tensor& tb = nodes_[size_t(b)].value;
  check_same_shape(ta, tb, "add");
  Node out;
  out.value = ta;
  for (int64_t i = 0; i < tb.size(); ++i) out.value.v[size_t(i)] += tb.v[size_t(i)];
  if (tracking() && (nodes_[size_t(a)].needs_grad || nodes_[size_t(b)].needs_grad)) {
    out.needs_grad = true;
    out.backprop = [a, b](Tape& tape, Node& self) {
      if (self.grad.size() == 0) return;
      for (int src : {a, b}) {
        if (!tape.nodes_[size_t(src)].needs_grad) continue;
        Tensor& d = tape.grad_of(src);
        for (int64_t i = 0; i < self.grad.size(); ++i) d.v[size_t(i)] += self.grad.v[size_t(i)];
      }
    };
  }
  return push(std::move(out));
}

int Tape::add3(int a, int b, int c) { return add(add(a, b), c); }

int Tape::avgpool2(int x) {
  const Tensor& xin = nodes_[size_t(x)].value;
  if (xin.h % 2 != 0 || xin.w % 2 != 0) {
    fail(ErrorKind::BadShape, "avgpool2 needs even spatial size");
  }
  Node out;
  out.value = Tensor(xin.c, xin.h / 2, xin.w / 2);
  for (int ci = 0; ci < xin.c; ++ci) {
    for (int y = 0; y < out.value.h; ++y) {
      for (int xo = 0; xo < out.value.w; ++xo) {
        out.value.at(ci, y, xo) =
            0.25 * (xin.at(ci, 2 * y, 2 * xo) + xin.at(ci, 2 * y, 2 * xo + 1) +
                    xin.at(ci, 2 * y + 1, 2 * xo) + xin.at(ci, 2 * y + 1, 2 * xo + 1));
      }
    }
  }
  if (tracking() && nodes_[size_t(x)].needs_grad) {
    out.needs_grad = true;
    out.backprop = [x](Tape& tape, Node& self) {
      if (self.grad.size() == 0) return;
      Tensor& dx = tape.grad_of(x);
      for (int ci = 0; ci < self.grad.c; ++ci) {
        for (int y = 0; y < self.grad.h; ++y) {
          for (int xo = 0; xo < self.grad.w; ++xo) {
            const double g = 0.25 * self.grad.at(ci, y, xo);
            dx.at(ci, 2 * y, 2 * xo) += g;
            dx.at(ci, 2 * y, 2 * xo + 1) += g;
            dx.at(ci, 2 * y + 1, 2 * xo) += g;
            dx.at(ci, 2 * y + 1, 2 * xo + 1) += g;
          }
        }
      }
    };
  }
  return push(std::move(out));
}

namespace {

// Two-tap tables for x2 bilinear upsampling with half-pixel centres:
// source coordinate of output o is o/2 - 0.25, clamped at the borders.
struct UpTaps {
  std::vector<int> i0, i1;
  std::vector<double> w0;
};

UpTaps up_taps(int n_in) {
  UpTaps t;
  const int n_out = 2 * n_in;
  t.i0.resize(size_t(n_out));
  t.i1.resize(size_t(n_out));
  t.w0.resize(size_t(n_out));
  for (int o = 0; o < n_out; ++o) {
    const double src = 0.5 * o - 0.25;
    const int base = int(std::floor(src));
    const double frac = src - base;
    t.i0[size_t(o)] = std::clamp(base, 0, n_in - 1);
    t.i1[size_t(o)] = std::clamp(base + 1, 0, n_in - 1);
    t.w0[size_t(o)] = 1.0 - frac;
  }
  return t;
}

}  // namespace

int Tape::upsample_bilinear2(int x) {
  const Tensor& xin = nodes_[size_t(x)].value;
  const UpTaps ty = up_taps(xin.h);
  const UpTaps tx = up_taps(xin.w);
  Node out;
  out.value = Tensor(xin.c, 2 * xin.h, 2 * xin.w);
  for (int ci = 0; ci < xin.c; ++ci) {
    const double* src = xin.data() + int64_t(ci) * xin.h * xin.w;
    double* dst = out.value.data() + int64_t(ci) * out.value.h * out.value.w;
    for (int oy = 0; oy < out.value.h; ++oy) {
      const double wy0 = ty.w0[size_t(oy)];
      const double* r0 = src + int64_t(ty.i0[size_t(oy)]) * xin.w;
      const double* r1 = src + int64_t(ty.i1[size_t(oy)]) * xin.w;
      for (int ox = 0; ox < out.value.w; ++ox) {
        const double wx0 = tx.w0[size_t(ox)];
        const int x0 = tx.i0[size_t(ox)], x1 = tx.i1[size_t(ox)];
        const double top = wx0 * r0[x0] + (1.0 - wx0) * r0[x1];
        const double bot = wx0 * r1[x0] + (1.0 - wx0) * r1[x1];
        dst[int64_t(oy) * out.value.w + ox] = wy0 * top + (1.0 - wy0) * bot;
      }
    }
  }
  if (tracking() && nodes_[size_t(x)].needs_grad) {
    out.needs_grad = true;
    out.backprop = [x, ty, tx](Tape& tape, Node& self) {
      if (self.grad.size() == 0) return;
      Tensor& dx = tape.grad_of(x);
      for (int ci = 0; ci < self.grad.c; ++ci) {
        const double* g = self.grad.data() + int64_t(ci) * self.grad.h * self.grad.w;
        double* d = dx.data() + int64_t(ci) * dx.h * dx.w;
        for (int oy = 0; oy < self.grad.h; ++oy) {
          const double wy0 = ty.w0[size_t(oy)];
          const int y0 = ty.i0[size_t(oy)], y1 = ty.i1[size_t(oy)];
          for (int ox = 0; ox < self.grad.w; ++ox) {
            const double wx0 = tx.w0[size_t(ox)];
            const int x0 = tx.i0[size_t(ox)], x1 = tx.i1[size_t(ox)];
            const double gv = g[int64_t(oy) * self.grad.w + ox];
            d[int64_t(y0) * dx.w + x0] += wy0 * wx0 * gv;
            d[int64_t(y0) * dx.w + x1] += wy0 * (1.0 - wx0) * gv;
            d[int64_t(y1) * dx.w + x0] += (1.0 - wy0) * wx0 * gv;
            d[int64_t(y1) * dx.w + x1] += (1.0 - wy0) * (1.0 - wx0) * gv;
          }
        }
      }
    };
  }
  return push(std::move(out));
}

int Tape::mse_against(int pred, const Tensor& target) {
  const Tensor& p = nodes_[size_t(pred)].value;
  check_same_shape(p, target, "mse");
  Node out;
  out.value = Tensor(1, 1, 1);
  double acc = 0.0;
  for (int64_t i = 0; i < p.size(); ++i) {
    const double d = p.v[size_t(i)] - target.v[size_t(i)];
    acc += d * d;
  }
  out.value.v[0] = acc / double(p.size());
  if (tracking() && nodes_[size_t(pred)].needs_grad) {
    out.needs_grad = true;
    Tensor target_copy = target;
    out.backprop = [pred, target_copy](Tape& tape, Node& self) {
      if (self.grad.size() == 0) return;
      const Tensor& p = tape.nodes_[size_t(pred)].value;
      Tensor& dp = tape.grad_of(pred);
      const double scale = 2.0 * self.grad.v[0] / double(p.size());
      for (int64_t i = 0; i < p.size(); ++i) {
        dp.v[size_t(i)] += scale * (p.v[size_t(i)] - target_copy.v[size_t(i)]);
      }
    };
  }
  return push(std::move(out));
}

void Tape::backward(int node) {
  if (!tracking()) fail(ErrorKind::BadConfig, "backward on an inference tape");
  grad_of(node).v[0] = 1.0;
  for (int i = node; i >= 0; --i) {
    Node& n = nodes_[size_t(i)];
    if (n.needs_grad && n.backprop && n.grad.size() != 0) {
      n.backprop(*this, n);
    }
  }
}

}  // namespace pansharp::nn
