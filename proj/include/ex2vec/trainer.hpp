#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ex2vec/adam.hpp"
#include "ex2vec/dataset.hpp"
#include "ex2vec/model.hpp"
#include "ex2vec/sample_set.hpp"
#include "ex2vec/train_config.hpp"

namespace ex2vec {

// Fresh parameters: alpha=1.0, beta=-0.0065, gamma=0.5, cutoff=3.0,
// embeddings elementwise standard normal from the seeded generator, all
// lambdas and biases zero, decay fixed at 0.5.
ModelParams init_params(const TrainConfig& cfg, int n_users, int n_items,
                        std::int64_t seed);

// Decision threshold maximizing balanced accuracy on (scores, labels) under
// the strict rule "predict 1 iff score > threshold". Candidates are the
// midpoints between consecutive distinct scores plus {0, 1}; ties resolve to
// the smallest candidate. Requires both classes present.
double calibrate_threshold(std::span<const double> scores,
                           std::span<const int> labels);

struct ThresholdResult {
  double threshold = 0.0;
  double balanced_accuracy = 0.0;
};
ThresholdResult calibrate_threshold_detail(std::span<const double> scores,
                                           std::span<const int> labels);

struct EpochLog {
  int epoch = 0;  // 1-based
  double lr = 0.0;
  double train_loss = 0.0;
  double val_balanced_accuracy = 0.0;
  double threshold = 0.0;
};

struct TrainResult {
  ModelParams best_params;
  double best_threshold = 0.0;
  double best_val_balanced_accuracy = 0.0;
  double best_lr = 0.0;
  int best_epoch = 0;
  std::vector<EpochLog> log;
  std::vector<std::string> events;  // e.g. divergence notes, one per aborted lr
  std::vector<std::pair<double, std::int64_t>> steps_per_lr;
};

// Runs the learning-rate grid; for each rate, minibatch Adam with a per-epoch
// seeded event shuffle, scoring the validation exposures after every epoch
// with a freshly calibrated threshold. Keeps the (lr, epoch) checkpoint with
// the best validation balanced accuracy. A diverging rate (non-finite loss)
// is abandoned with a logged event and the grid continues.
//
// `validation_events` holds every event of the held-out validation pairs in
// the same index space as `train_data`; validation histories are the pairs'
// own past positive consumptions.
TrainResult train(const Dataset& train_data, const Dataset& validation_events,
                  const TrainConfig& cfg);

// Training log rows as CSV "epoch,lr,train_loss,val_balanced_accuracy,threshold".
void write_training_log(const std::vector<EpochLog>& log, const std::string& path);

}  // namespace ex2vec
