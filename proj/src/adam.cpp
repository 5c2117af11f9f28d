#include "ex2vec/adam.hpp"

#include <cmath>

namespace ex2vec {

void adam_step(ModelParams& params, const Gradients& grads, AdamState& state,
               double lr, const TrainConfig& cfg) {
  ++state.step;
  const double b1 = cfg.adam_beta1, b2 = cfg.adam_beta2;
  const double bc1 = 1.0 - std::pow(b1, static_cast<double>(state.step));
  const double bc2 = 1.0 - std::pow(b2, static_cast<double>(state.step));

  auto upd = [&](double& x, double g, double& m, double& v) {
    m = b1 * m + (1.0 - b1) * g;
    v = b2 * v + (1.0 - b2) * g * g;
    const double m_hat = m / bc1;
    const double v_hat = v / bc2;
    x -= lr * m_hat / (std::sqrt(v_hat) + cfg.adam_eps);
  };
  auto upd_vec = [&](std::vector<double>& x, const std::vector<double>& g,
                     std::vector<double>& m, std::vector<double>& v) {
    for (std::size_t k = 0; k < x.size(); ++k) upd(x[k], g[k], m[k], v[k]);
  };

  upd_vec(params.user_emb, grads.user_emb, state.m.user_emb, state.v.user_emb);
  upd_vec(params.item_emb, grads.item_emb, state.m.item_emb, state.v.item_emb);
  upd_vec(params.lambda_user_bias, grads.lambda_user_bias,
          state.m.lambda_user_bias, state.v.lambda_user_bias);
  upd_vec(params.user_bias, grads.user_bias, state.m.user_bias,
          state.v.user_bias);
  upd_vec(params.item_bias, grads.item_bias, state.m.item_bias,
          state.v.item_bias);
  upd(params.lambda_global, grads.lambda_global, state.m.lambda_global,
      state.v.lambda_global);
  upd(params.cutoff, grads.cutoff, state.m.cutoff, state.v.cutoff);
  upd(params.alpha, grads.alpha, state.m.alpha, state.v.alpha);
  upd(params.beta, grads.beta, state.m.beta, state.v.beta);
  upd(params.gamma, grads.gamma, state.m.gamma, state.v.gamma);

  if (params.cutoff < kCutoffFloor) params.cutoff = kCutoffFloor;
}

}  // namespace ex2vec
