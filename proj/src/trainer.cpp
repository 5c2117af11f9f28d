#include "ex2vec/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "ex2vec/csv.hpp"
#include "ex2vec/rng.hpp"

namespace ex2vec {

ModelParams init_params(const TrainConfig& cfg, int n_users, int n_items,
                        std::int64_t seed) {
  if (n_users < 1 || n_items < 1)
    throw std::runtime_error("init_params: counts must be >= 1");
  ModelParams p;
  p.n_users = n_users;
  p.n_items = n_items;
  p.dim = cfg.dim;
  p.user_emb.resize(static_cast<std::size_t>(n_users) * cfg.dim);
  p.item_emb.resize(static_cast<std::size_t>(n_items) * cfg.dim);
  p.lambda_user_bias.assign(n_users, 0.0);
  p.user_bias.assign(n_users, 0.0);
  p.item_bias.assign(n_items, 0.0);
  p.lambda_global = 0.0;
  p.cutoff = 3.0;
  p.alpha = 1.0;
  p.beta = -0.0065;
  p.gamma = 0.5;
  p.decay = 0.5;

  auto rng = make_rng(static_cast<std::uint64_t>(seed), rng_stream::kParamInit);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (auto& x : p.user_emb) x = normal(rng);
  for (auto& x : p.item_emb) x = normal(rng);
  return p;
}

namespace {

struct ClassCounts {
  std::size_t pos = 0;
  std::size_t neg = 0;
};

ClassCounts count_classes(std::span<const int> labels) {
  ClassCounts c;
  for (int l : labels) (l == 1 ? c.pos : c.neg)++;
  return c;
}

}  // namespace

ThresholdResult calibrate_threshold_detail(std::span<const double> scores,
                                           std::span<const int> labels) {
  if (scores.size() != labels.size() || scores.empty())
    throw std::runtime_error("calibrate_threshold: size mismatch or empty input");
  const ClassCounts counts = count_classes(labels);
  if (counts.pos == 0 || counts.neg == 0)
    throw std::runtime_error(
        "calibrate_threshold: both classes must be present");

  // Sort ascending by score; suffix positive counts give TP for any
  // threshold in O(log n).
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] < scores[b];
  });
  std::vector<double> sorted(scores.size());
  std::vector<std::size_t> pos_suffix(scores.size() + 1, 0);
  for (std::size_t k = 0; k < order.size(); ++k) sorted[k] = scores[order[k]];
  for (std::size_t k = order.size(); k-- > 0;) {
    pos_suffix[k] = pos_suffix[k + 1] + (labels[order[k]] == 1 ? 1u : 0u);
  }

  std::vector<double> candidates = {0.0, 1.0};
  for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
    if (sorted[k] < sorted[k + 1])
      candidates.push_back(0.5 * (sorted[k] + sorted[k + 1]));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  ThresholdResult best{0.0, -1.0};
  for (double tau : candidates) {
    // First index with score > tau.
    const std::size_t j =
        std::upper_bound(sorted.begin(), sorted.end(), tau) - sorted.begin();
    const std::size_t tp = pos_suffix[j];
    const std::size_t fp = (sorted.size() - j) - tp;
    const double tpr = static_cast<double>(tp) / static_cast<double>(counts.pos);
    const double tnr = static_cast<double>(counts.neg - fp) /
                       static_cast<double>(counts.neg);
    const double ba = 0.5 * (tpr + tnr);
    if (ba > best.balanced_accuracy) best = {tau, ba};  // ties keep smaller tau
  }
  return best;
}

double calibrate_threshold(std::span<const double> scores,
                           std::span<const int> labels) {
  return calibrate_threshold_detail(scores, labels).threshold;
}

TrainResult train(const Dataset& train_data, const Dataset& validation_events,
                  const TrainConfig& cfg) {
  cfg.validate();
  if (validation_events.events.empty())
    throw std::runtime_error("train: empty validation set");
  if (train_data.events.empty()) throw std::runtime_error("train: empty train set");

  const SampleSet train_set = SampleSet::from_dataset(train_data);
  const SampleSet val_set = SampleSet::from_dataset(validation_events);
  const auto train_samples = train_set.samples();
  const std::size_t n = train_samples.size();

  std::vector<int> val_labels;
  val_labels.reserve(val_set.samples().size());
  for (const auto& s : val_set.samples()) val_labels.push_back(s.label);

  TrainResult result;
  result.best_val_balanced_accuracy = -1.0;

  std::vector<std::size_t> perm(n);
  std::vector<Sample> batch;
  batch.reserve(cfg.batch_size);
  Gradients grads;
  std::vector<double> val_scores(val_set.samples().size());

  for (double lr : cfg.lr_grid) {
    ModelParams params =
        init_params(cfg, train_data.n_users, train_data.n_items, cfg.seed);
    AdamState state;
    state.init_like(params);
    bool diverged = false;

    for (int epoch = 1; epoch <= cfg.epochs && !diverged; ++epoch) {
      std::iota(perm.begin(), perm.end(), 0);
      auto rng = make_rng(static_cast<std::uint64_t>(cfg.seed),
                          rng_stream::kEpochShuffle,
                          static_cast<std::uint64_t>(epoch));
      std::shuffle(perm.begin(), perm.end(), rng);

      double loss_sum = 0.0;
      std::size_t n_batches = 0;
      for (std::size_t b0 = 0; b0 < n; b0 += cfg.batch_size) {
        const std::size_t b1 = std::min(n, b0 + cfg.batch_size);
        batch.clear();
        for (std::size_t k = b0; k < b1; ++k)
          batch.push_back(train_samples[perm[k]]);
        compute_gradients(params, batch, cfg.l2_weight, grads);
        const double loss = batch_loss(params, batch, cfg.l2_weight);
        if (!std::isfinite(loss)) {
          result.events.push_back("lr " + format_g17(lr) + " diverged at epoch " +
                                  std::to_string(epoch) + " (non-finite loss)");
          diverged = true;
          break;
        }
        adam_step(params, grads, state, lr, cfg);
        loss_sum += loss;
        ++n_batches;
      }
      if (diverged) break;

      for (std::size_t k = 0; k < val_set.samples().size(); ++k)
        val_scores[k] = forward(params, val_set.samples()[k]).score;
      const ThresholdResult cal = calibrate_threshold_detail(val_scores, val_labels);

      EpochLog row;
      row.epoch = epoch;
      row.lr = lr;
      row.train_loss = loss_sum / static_cast<double>(n_batches);
      row.val_balanced_accuracy = cal.balanced_accuracy;
      row.threshold = cal.threshold;
      result.log.push_back(row);

      if (cal.balanced_accuracy > result.best_val_balanced_accuracy) {
        result.best_val_balanced_accuracy = cal.balanced_accuracy;
        result.best_params = params;
        result.best_threshold = cal.threshold;
        result.best_lr = lr;
        result.best_epoch = epoch;
      }
    }
    result.steps_per_lr.push_back({lr, state.step});
  }

  if (result.best_val_balanced_accuracy < 0.0)
    throw std::runtime_error("train: every learning rate diverged");
  return result;
}

void write_training_log(const std::vector<EpochLog>& log, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "epoch,lr,train_loss,val_balanced_accuracy,threshold\n";
  for (const auto& row : log) {
    out << row.epoch << ',' << format_g17(row.lr) << ','
        << format_g17(row.train_loss) << ','
        << format_g17(row.val_balanced_accuracy) << ','
        << format_g17(row.threshold) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace ex2vec
