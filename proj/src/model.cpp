#include "ex2vec/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace ex2vec {

void Gradients::resize_like(const ModelParams& p) {
  user_emb.assign(p.user_emb.size(), 0.0);
  item_emb.assign(p.item_emb.size(), 0.0);
  lambda_user_bias.assign(p.lambda_user_bias.size(), 0.0);
  user_bias.assign(p.user_bias.size(), 0.0);
  item_bias.assign(p.item_bias.size(), 0.0);
  lambda_global = cutoff = alpha = beta = gamma = 0.0;
}

void Gradients::zero() {
  std::fill(user_emb.begin(), user_emb.end(), 0.0);
  std::fill(item_emb.begin(), item_emb.end(), 0.0);
  std::fill(lambda_user_bias.begin(), lambda_user_bias.end(), 0.0);
  std::fill(user_bias.begin(), user_bias.end(), 0.0);
  std::fill(item_bias.begin(), item_bias.end(), 0.0);
  lambda_global = cutoff = alpha = beta = gamma = 0.0;
}

double base_distance(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size())
    throw std::runtime_error("base_distance: dimension mismatch");
  double sq = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    const double d = u[k] - v[k];
    sq += d * d;
  }
  return std::sqrt(sq);
}

double predict_score(double interest) {
  if (interest >= 0.0) {
    return 1.0 / (1.0 + std::exp(-interest));
  }
  const double e = std::exp(interest);
  return e / (1.0 + e);
}

double interest_value(const ModelParams& p, double effective_dist, int user_idx,
                      int item_idx) {
  const double b = p.user_bias[user_idx] + p.item_bias[item_idx];
  return p.alpha * effective_dist + p.beta * effective_dist * effective_dist +
         p.gamma + b;
}

ForwardTrace forward(const ModelParams& p, const Sample& s) {
  ForwardTrace tr;
  tr.base_dist = base_distance(p.user_row(s.user_idx), p.item_row(s.item_idx));
  tr.kernel_value = exposure_kernel(s.history, s.t, p.cutoff, p.decay);
  tr.lambda_u =
      std::max(p.lambda_global + p.lambda_user_bias[s.user_idx], 0.0);
  const double pre = tr.base_dist - tr.lambda_u * tr.kernel_value;
  tr.clamped = pre < 0.0;
  tr.effective_dist = std::max(pre, 0.0);
  tr.interest = interest_value(p, tr.effective_dist, s.user_idx, s.item_idx);
  tr.score = predict_score(tr.interest);
  return tr;
}

namespace {

double clipped_bce(double score, int label) {
  const double s =
      std::clamp(score, kScoreClipEps, 1.0 - kScoreClipEps);
  return label == 1 ? -std::log(s) : -std::log(1.0 - s);
}

// L2 term over the distinct embedding rows a batch touches.
double touched_l2(const ModelParams& p, std::span<const Sample> batch,
                  double l2_weight) {
  if (l2_weight == 0.0) return 0.0;
  std::unordered_set<int> users, items;
  for (const auto& s : batch) {
    users.insert(s.user_idx);
    items.insert(s.item_idx);
  }
  double sq = 0.0;
  for (int u : users)
    for (double x : p.user_row(u)) sq += x * x;
  for (int i : items)
    for (double x : p.item_row(i)) sq += x * x;
  return l2_weight * sq;
}

}  // namespace

double batch_loss(const ModelParams& p, std::span<const Sample> batch,
                  double l2_weight) {
  if (batch.empty()) throw std::runtime_error("batch_loss: empty batch");
  double sum = 0.0;
  for (const auto& s : batch) {
    sum += clipped_bce(forward(p, s).score, s.label);
  }
  return sum / static_cast<double>(batch.size()) +
         touched_l2(p, batch, l2_weight);
}

double compute_gradients(const ModelParams& p, std::span<const Sample> batch,
                         double l2_weight, Gradients& out) {
  if (batch.empty()) throw std::runtime_error("gradients: empty batch");
  if (out.user_emb.size() != p.user_emb.size()) {
    out.resize_like(p);
  } else {
    out.zero();
  }

  const double inv_n = 1.0 / static_cast<double>(batch.size());
  std::unordered_set<int> touched_users, touched_items;
  double bce_sum = 0.0;

  for (const auto& s : batch) {
    touched_users.insert(s.user_idx);
    touched_items.insert(s.item_idx);

    const ForwardTrace tr = forward(p, s);
    bce_sum += clipped_bce(tr.score, s.label);

    // d(mean BCE)/d(interest); zero where the clip is active, matching the
    // loss actually computed.
    double g_interest = 0.0;
    if (tr.score >= kScoreClipEps && tr.score <= 1.0 - kScoreClipEps) {
      g_interest = (tr.score - static_cast<double>(s.label)) * inv_n;
    }

    out.alpha += g_interest * tr.effective_dist;
    out.beta += g_interest * tr.effective_dist * tr.effective_dist;
    out.gamma += g_interest;
    out.user_bias[s.user_idx] += g_interest;
    out.item_bias[s.item_idx] += g_interest;

    const double g_eff = g_interest * (p.alpha + 2.0 * p.beta * tr.effective_dist);
    // Active clamp (pre-clamp value <= 0) blocks everything upstream.
    const double pre = tr.base_dist - tr.lambda_u * tr.kernel_value;
    if (pre <= 0.0) continue;
    const double g_pre = g_eff;

    // Base distance -> embedding rows.
    if (tr.base_dist >= kDistGradGuard) {
      const auto u = p.user_row(s.user_idx);
      const auto v = p.item_row(s.item_idx);
      const double coef = g_pre / tr.base_dist;
      double* gu = out.user_emb.data() +
                   static_cast<std::size_t>(s.user_idx) * p.dim;
      double* gv = out.item_emb.data() +
                   static_cast<std::size_t>(s.item_idx) * p.dim;
      for (int k = 0; k < p.dim; ++k) {
        const double diff = u[k] - v[k];
        gu[k] += coef * diff;
        gv[k] -= coef * diff;
      }
    }

    // Step size lambda_u = max(lambda + lambda_user_bias, 0); gradient passes
    // only when the sum is non-negative so the data can move a zero init.
    if (p.lambda_global + p.lambda_user_bias[s.user_idx] >= 0.0) {
      const double g_lambda = g_pre * (-tr.kernel_value);
      out.lambda_global += g_lambda;
      out.lambda_user_bias[s.user_idx] += g_lambda;
    }

    // Cutoff flows through the kernel.
    out.cutoff += g_pre * (-tr.lambda_u) *
                  exposure_kernel_dcutoff(s.history, s.t, p.cutoff, p.decay);
  }

  double l2_term = 0.0;
  if (l2_weight != 0.0) {
    for (int u : touched_users) {
      const auto row = p.user_row(u);
      double* g = out.user_emb.data() + static_cast<std::size_t>(u) * p.dim;
      for (int k = 0; k < p.dim; ++k) {
        g[k] += 2.0 * l2_weight * row[k];
        l2_term += l2_weight * row[k] * row[k];
      }
    }
    for (int i : touched_items) {
      const auto row = p.item_row(i);
      double* g = out.item_emb.data() + static_cast<std::size_t>(i) * p.dim;
      for (int k = 0; k < p.dim; ++k) {
        g[k] += 2.0 * l2_weight * row[k];
        l2_term += l2_weight * row[k] * row[k];
      }
    }
  }
  return bce_sum * inv_n + l2_term;
}

Gradients gradients(const ModelParams& p, std::span<const Sample> batch,
                    double l2_weight) {
  Gradients g;
  compute_gradients(p, batch, l2_weight, g);
  return g;
}

}  // namespace ex2vec
