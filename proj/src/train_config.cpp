#include "ex2vec/train_config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ex2vec/csv.hpp"

namespace ex2vec {

void TrainConfig::validate() const {
  if (dim < 1) throw std::runtime_error("config: dim must be >= 1");
  if (epochs < 1) throw std::runtime_error("config: epochs must be >= 1");
  if (batch_size < 1) throw std::runtime_error("config: batch_size must be >= 1");
  if (lr_grid.empty()) throw std::runtime_error("config: lr_grid must be non-empty");
  for (double lr : lr_grid)
    if (!(lr > 0.0)) throw std::runtime_error("config: learning rates must be > 0");
  if (l2_weight < 0.0) throw std::runtime_error("config: l2_weight must be >= 0");
}

std::map<std::string, std::string> TrainConfig::to_key_values() const {
  std::map<std::string, std::string> kv;
  kv["dim"] = std::to_string(dim);
  kv["epochs"] = std::to_string(epochs);
  std::string grid;
  for (double lr : lr_grid) grid += (grid.empty() ? "" : ",") + format_g17(lr);
  kv["lr_grid"] = grid;
  kv["batch_size"] = std::to_string(batch_size);
  kv["l2_weight"] = format_g17(l2_weight);
  kv["seed"] = std::to_string(seed);
  kv["adam_beta1"] = format_g17(adam_beta1);
  kv["adam_beta2"] = format_g17(adam_beta2);
  kv["adam_eps"] = format_g17(adam_eps);
  return kv;
}

TrainConfig parse_train_config_text(const std::string& text,
                                    const std::string& origin) {
  TrainConfig cfg;
  std::istringstream in(text);
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t");
    line = line.substr(first, last - first + 1);

    const std::string ctx = origin + ":" + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(ctx + ": expected key=value");
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);

    if (key == "dim") {
      cfg.dim = static_cast<int>(parse_int_field(value, ctx));
    } else if (key == "epochs") {
      cfg.epochs = static_cast<int>(parse_int_field(value, ctx));
    } else if (key == "lr_grid") {
      cfg.lr_grid.clear();
      for (const auto& tok : split_csv_line(value))
        cfg.lr_grid.push_back(parse_real_field(tok, ctx));
    } else if (key == "batch_size") {
      cfg.batch_size = static_cast<int>(parse_int_field(value, ctx));
    } else if (key == "l2_weight") {
      cfg.l2_weight = parse_real_field(value, ctx);
    } else if (key == "seed") {
      cfg.seed = parse_int_field(value, ctx);
    } else if (key == "adam_beta1") {
      cfg.adam_beta1 = parse_real_field(value, ctx);
    } else if (key == "adam_beta2") {
      cfg.adam_beta2 = parse_real_field(value, ctx);
    } else if (key == "adam_eps") {
      cfg.adam_eps = parse_real_field(value, ctx);
    } else {
      throw std::runtime_error(ctx + ": unknown key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

TrainConfig parse_train_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_train_config_text(buf.str(), path);
}

}  // namespace ex2vec
