#pragma once

#include <cstdint>
#include <vector>

#include "ex2vec/model.hpp"
#include "ex2vec/train_config.hpp"

namespace ex2vec {

// First/second moment accumulators mirroring the trainable parameter shapes.
struct AdamState {
  Gradients m;
  Gradients v;
  std::int64_t step = 0;

  void init_like(const ModelParams& p) {
    m.resize_like(p);
    v.resize_like(p);
    step = 0;
  }
};

// One bias-corrected Adam update over every trainable scalar, followed by
// projecting the cutoff back to [1e-3, inf).
void adam_step(ModelParams& params, const Gradients& grads, AdamState& state,
               double lr, const TrainConfig& cfg);

constexpr double kCutoffFloor = 1e-3;

}  // namespace ex2vec
