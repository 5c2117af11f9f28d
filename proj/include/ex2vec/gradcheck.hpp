#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ex2vec/model.hpp"

namespace ex2vec {

struct GradCheckOptions {
  double step = 1e-5;        // central-difference step, must lie in [1e-7, 1e-3]
  double tolerance = 1e-4;   // max acceptable relative error
  int emb_coords_per_table = 10;
  std::uint64_t seed = 0;    // coordinate sampling
  double boundary_margin = 1e-6;  // clamp-boundary exclusion band
};

struct GradCheckFailure {
  std::string parameter;
  double analytic = 0.0;
  double numeric = 0.0;
  double rel_error = 0.0;
};

struct GradCheckReport {
  // Max relative error per parameter group (alpha, beta, gamma, lambda,
  // lambda_user_bias, cutoff, user_bias, item_bias, user_emb, item_emb).
  std::map<std::string, double> max_rel_error;
  std::vector<GradCheckFailure> failures;
  int checked = 0;
  int skipped = 0;

  bool passed() const { return failures.empty(); }
  double worst() const;
};

// Compares a supplied analytic gradient against central finite differences of
// batch_loss for every trainable scalar (embedding tables are sampled).
// Coordinates whose loss is non-smooth near the current point - a sample
// within `boundary_margin` of the distance clamp or of the lambda_u clamp -
// are skipped for the parameters that feed through that kink.
GradCheckReport finite_diff_compare(const ModelParams& params,
                                    std::span<const Sample> batch,
                                    double l2_weight, const Gradients& analytic,
                                    const GradCheckOptions& opts);

// Computes the analytic gradient internally and compares it.
GradCheckReport finite_diff_check(const ModelParams& params,
                                  std::span<const Sample> batch,
                                  double l2_weight, const GradCheckOptions& opts);

}  // namespace ex2vec
