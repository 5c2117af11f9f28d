#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ex2vec {

struct TrainConfig {
  int dim = 64;
  int epochs = 100;
  std::vector<double> lr_grid = {5e-5, 2e-4, 7.5e-4, 1e-3};
  int batch_size = 512;
  double l2_weight = 1e-4;
  std::int64_t seed = 0;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;

  void validate() const;
  // Every field as "key=value" strings, e.g. for run manifests.
  std::map<std::string, std::string> to_key_values() const;
};

// Line-oriented key=value file; '#' starts a comment, blank lines are
// ignored, unknown keys are errors. lr_grid is comma-separated.
TrainConfig parse_train_config_file(const std::string& path);
TrainConfig parse_train_config_text(const std::string& text,
                                    const std::string& origin);

}  // namespace ex2vec
