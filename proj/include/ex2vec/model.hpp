#pragma once

#include <span>
#include <vector>

#include "ex2vec/memory_kernel.hpp"

namespace ex2vec {

// All trainable state of the model plus the fixed decay. Embeddings are
// row-major (row = entity index, dim columns). The cutoff is kept positive by
// projection after every optimizer step; the decay never changes.
struct ModelParams {
  int n_users = 0;
  int n_items = 0;
  int dim = 0;

  std::vector<double> user_emb;          // n_users * dim
  std::vector<double> item_emb;          // n_items * dim
  std::vector<double> lambda_user_bias;  // n_users
  std::vector<double> user_bias;         // n_users
  std::vector<double> item_bias;         // n_items

  double lambda_global = 0.0;
  double cutoff = 3.0;
  double alpha = 1.0;
  double beta = -0.0065;
  double gamma = 0.5;

  double decay = 0.5;  // not trained

  std::span<const double> user_row(int u) const {
    return {user_emb.data() + static_cast<std::size_t>(u) * dim,
            static_cast<std::size_t>(dim)};
  }
  std::span<const double> item_row(int i) const {
    return {item_emb.data() + static_cast<std::size_t>(i) * dim,
            static_cast<std::size_t>(dim)};
  }
  std::span<double> user_row(int u) {
    return {user_emb.data() + static_cast<std::size_t>(u) * dim,
            static_cast<std::size_t>(dim)};
  }
  std::span<double> item_row(int i) {
    return {item_emb.data() + static_cast<std::size_t>(i) * dim,
            static_cast<std::size_t>(dim)};
  }
};

// One scored exposure: the pair, the evaluation time, the observed label and
// the pair's past positive-consumption times strictly before t.
struct Sample {
  int user_idx = 0;
  int item_idx = 0;
  double t = 0.0;
  int label = 0;
  History history;
};

// Forward intermediates, cached for the backward pass.
struct ForwardTrace {
  double base_dist = 0.0;
  double kernel_value = 0.0;
  double lambda_u = 0.0;        // max(lambda + lambda_user_bias, 0)
  double effective_dist = 0.0;  // max(base_dist - lambda_u * kernel, 0)
  bool clamped = false;         // pre-clamp value was < 0
  double interest = 0.0;
  double score = 0.0;           // sigmoid(interest)
};

// Gradients of batch_loss with respect to every trainable field.
struct Gradients {
  std::vector<double> user_emb;
  std::vector<double> item_emb;
  std::vector<double> lambda_user_bias;
  std::vector<double> user_bias;
  std::vector<double> item_bias;
  double lambda_global = 0.0;
  double cutoff = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  void resize_like(const ModelParams& p);
  void zero();
};

// Score clipping used inside the loss (never in reported predictions).
constexpr double kScoreClipEps = 1e-7;
// Below this embedding distance the Euclidean gradient is taken as zero.
constexpr double kDistGradGuard = 1e-8;

double base_distance(std::span<const double> u, std::span<const double> v);
double predict_score(double interest);  // numerically stable sigmoid

// Effective distance of Eq.-style clamped modulation and the quadratic
// interest, composed into one forward pass.
ForwardTrace forward(const ModelParams& p, const Sample& s);

// Quadratic interest at a given effective distance for a (user, item) pair.
double interest_value(const ModelParams& p, double effective_dist, int user_idx,
                      int item_idx);

// Mean binary cross-entropy over the batch (scores clipped to
// [eps, 1 - eps]) plus l2_weight times the squared norms of the distinct
// user/item embedding rows the batch touches.
double batch_loss(const ModelParams& p, std::span<const Sample> batch,
                  double l2_weight);

// Exact analytic gradient of batch_loss; returns the loss value computed
// along the way. Subgradient conventions: zero through an active distance
// clamp (pre-clamp value <= 0), zero through the lambda_u clamp when
// lambda + lambda_user_bias < 0, zero for the Euclidean direction when the
// embedding rows are closer than kDistGradGuard.
double compute_gradients(const ModelParams& p, std::span<const Sample> batch,
                         double l2_weight, Gradients& out);
Gradients gradients(const ModelParams& p, std::span<const Sample> batch,
                    double l2_weight);

}  // namespace ex2vec
