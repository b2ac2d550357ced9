/*
 * Copyright 2026 The probex Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PROBEX_RELU_NETWORK_H_
#define PROBEX_RELU_NETWORK_H_

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <span>
#include <string>
#include <vector>

#include "probex/errors.h"

namespace probex {

// Feed-forward ReLU network over binary inputs with a step output unit.
// Layers use the row-vector convention g_j = relu(g_{j-1} W_j + b_j); the
// last layer has a single output and is thresholded at zero (step(z) = 1
// iff z >= 0).
template <typename Scalar>
class ReluNetwork {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

  struct Layer {
    Matrix weights;  // d_{j-1} x d_j
    RowVector bias;  // d_j
  };

  ReluNetwork(std::vector<Layer> layers, int num_inputs) : layers_(std::move(layers)) {
    if (layers_.empty()) throw Error(ErrorCode::kInvalidInput, "mlp needs at least one layer");
    Eigen::Index width = num_inputs;
    for (std::size_t j = 0; j < layers_.size(); ++j) {
      const Layer& layer = layers_[j];
      if (layer.weights.rows() != width || layer.bias.size() != layer.weights.cols()) {
        throw Error(ErrorCode::kInvalidInput,
                    "mlp layer " + std::to_string(j) + " has inconsistent shape");
      }
      width = layer.weights.cols();
    }
    if (width != 1) throw Error(ErrorCode::kInvalidInput, "mlp output layer must have width 1");
  }

  // Pre-threshold output of the final affine layer.
  Scalar Logit(std::span<const int> x) const {
    RowVector g(static_cast<Eigen::Index>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i) g(static_cast<Eigen::Index>(i)) = Scalar(x[i]);
    for (std::size_t j = 0; j + 1 < layers_.size(); ++j) {
      g = (g * layers_[j].weights + layers_[j].bias).unaryExpr(&Relu);
    }
    const RowVector out = g * layers_.back().weights + layers_.back().bias;
    return out(0);
  }

  int Predict(std::span<const int> x) const { return Logit(x) >= Scalar(0) ? 1 : 0; }

  const std::vector<Layer>& layers() const { return layers_; }

 private:
  static Scalar Relu(const Scalar& v) { return v < Scalar(0) ? Scalar(0) : v; }

  std::vector<Layer> layers_;
};

}  // namespace probex

#endif  // PROBEX_RELU_NETWORK_H_
