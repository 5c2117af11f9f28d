#include "ex2vec/gradcheck.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ex2vec/rng.hpp"

namespace ex2vec {

double GradCheckReport::worst() const {
  double w = 0.0;
  for (const auto& [name, err] : max_rel_error) w = std::max(w, err);
  return w;
}

namespace {

// Relative error with an absolute floor: tiny gradients are compared
// absolutely so finite-difference noise near zero does not flag.
double rel_error(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

struct BoundaryInfo {
  bool any_score_clip_edge = false;  // skip everything
  std::set<int> kink_users;          // users with a clamp-adjacent sample
  std::set<int> kink_items;
  bool kink_any = false;             // lambda, cutoff affected
};

BoundaryInfo find_boundaries(const ModelParams& p, std::span<const Sample> batch,
                             double margin) {
  BoundaryInfo info;
  for (const auto& s : batch) {
    const ForwardTrace tr = forward(p, s);
    const double pre = tr.base_dist - tr.lambda_u * tr.kernel_value;
    const double lam_pre = p.lambda_global + p.lambda_user_bias[s.user_idx];
    const bool near_kink = std::abs(pre) < margin || std::abs(lam_pre) < margin ||
                           tr.base_dist < margin;
    if (near_kink) {
      info.kink_users.insert(s.user_idx);
      info.kink_items.insert(s.item_idx);
      info.kink_any = true;
    }
    if (std::abs(tr.score - kScoreClipEps) < margin * kScoreClipEps ||
        std::abs(1.0 - tr.score - kScoreClipEps) < margin * kScoreClipEps) {
      info.any_score_clip_edge = true;
    }
  }
  return info;
}

}  // namespace

GradCheckReport finite_diff_compare(const ModelParams& params,
                                    std::span<const Sample> batch,
                                    double l2_weight, const Gradients& analytic,
                                    const GradCheckOptions& opts) {
  if (opts.step < 1e-7 || opts.step > 1e-3)
    throw std::runtime_error("finite_diff: step must lie in [1e-7, 1e-3]");

  ModelParams work = params;  // perturbed in place, restored after each probe
  // The band must cover the probe step itself, or a +-h perturbation could
  // walk a sample across the kink it was meant to avoid.
  const double margin = std::max(opts.boundary_margin, 4.0 * opts.step);
  const BoundaryInfo boundary = find_boundaries(params, batch, margin);

  GradCheckReport report;
  auto probe = [&](const std::string& group, const std::string& name, double* x,
                   double g_analytic, bool skip) {
    if (skip || boundary.any_score_clip_edge) {
      ++report.skipped;
      return;
    }
    const double saved = *x;
    *x = saved + opts.step;
    const double up = batch_loss(work, batch, l2_weight);
    *x = saved - opts.step;
    const double down = batch_loss(work, batch, l2_weight);
    *x = saved;
    const double g_numeric = (up - down) / (2.0 * opts.step);
    const double err = rel_error(g_analytic, g_numeric);
    auto [it, _] = report.max_rel_error.emplace(group, 0.0);
    it->second = std::max(it->second, err);
    ++report.checked;
    if (err > opts.tolerance) {
      report.failures.push_back({name, g_analytic, g_numeric, err});
    }
  };

  probe("alpha", "alpha", &work.alpha, analytic.alpha, false);
  probe("beta", "beta", &work.beta, analytic.beta, false);
  probe("gamma", "gamma", &work.gamma, analytic.gamma, false);
  probe("lambda", "lambda", &work.lambda_global, analytic.lambda_global,
        boundary.kink_any);
  probe("cutoff", "cutoff", &work.cutoff, analytic.cutoff, boundary.kink_any);
  for (int u = 0; u < params.n_users; ++u) {
    probe("lambda_user_bias", "lambda_user_bias[" + std::to_string(u) + "]",
          &work.lambda_user_bias[u], analytic.lambda_user_bias[u],
          boundary.kink_users.count(u) > 0);
    probe("user_bias", "user_bias[" + std::to_string(u) + "]",
          &work.user_bias[u], analytic.user_bias[u], false);
  }
  for (int i = 0; i < params.n_items; ++i) {
    probe("item_bias", "item_bias[" + std::to_string(i) + "]",
          &work.item_bias[i], analytic.item_bias[i], false);
  }

  auto rng = make_rng(opts.seed, rng_stream::kGradCheck);
  auto sample_table = [&](const std::string& group, std::vector<double>& table,
                          const std::vector<double>& grad_table, int n_rows,
                          const std::set<int>& kink_rows) {
    if (table.empty()) return;
    std::uniform_int_distribution<std::size_t> pick(0, table.size() - 1);
    for (int c = 0; c < opts.emb_coords_per_table; ++c) {
      const std::size_t k = pick(rng);
      const int row = static_cast<int>(k) / params.dim;
      (void)n_rows;
      probe(group, group + "[" + std::to_string(k) + "]", &table[k],
            grad_table[k], kink_rows.count(row) > 0);
    }
  };
  sample_table("user_emb", work.user_emb, analytic.user_emb, params.n_users,
               boundary.kink_users);
  sample_table("item_emb", work.item_emb, analytic.item_emb, params.n_items,
               boundary.kink_items);

  return report;
}

GradCheckReport finite_diff_check(const ModelParams& params,
                                  std::span<const Sample> batch,
                                  double l2_weight,
                                  const GradCheckOptions& opts) {
  const Gradients analytic = gradients(params, batch, l2_weight);
  return finite_diff_compare(params, batch, l2_weight, analytic, opts);
}

}  // namespace ex2vec
