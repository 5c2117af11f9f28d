#include "ex2vec/split.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

#include "ex2vec/csv.hpp"
#include "ex2vec/rng.hpp"

namespace ex2vec {

HoldoutSplit holdout_split(const Dataset& ds, std::int64_t seed) {
  std::vector<std::vector<int>> user_items(ds.n_users);
  for (const auto& pr : pair_ranges(ds)) {
    user_items[pr.user_idx].push_back(pr.item_idx);  // distinct: one range per pair
  }
  for (int u = 0; u < ds.n_users; ++u) {
    if (user_items[u].size() < 5) {
      throw std::runtime_error("holdout_split: user " + std::to_string(u) +
                               " has only " + std::to_string(user_items[u].size()) +
                               " distinct items (need >= 5)");
    }
  }

  HoldoutSplit out;
  out.assignment.seed = seed;
  std::set<PairKey> held;
  for (int u = 0; u < ds.n_users; ++u) {
    auto& items = user_items[u];
    std::sort(items.begin(), items.end());
    auto rng = make_rng(static_cast<std::uint64_t>(seed), rng_stream::kHoldout,
                        static_cast<std::uint64_t>(u));
    // Partial Fisher-Yates: the first four entries become the held-out items.
    for (int k = 0; k < 4; ++k) {
      std::uniform_int_distribution<std::size_t> pick(k, items.size() - 1);
      std::swap(items[k], items[pick(rng)]);
    }
    out.assignment.validation.push_back({u, items[0]});
    out.assignment.validation.push_back({u, items[1]});
    out.assignment.test.push_back({u, items[2]});
    out.assignment.test.push_back({u, items[3]});
    for (int k = 0; k < 4; ++k) held.insert({u, items[k]});
  }
  std::sort(out.assignment.validation.begin(), out.assignment.validation.end());
  std::sort(out.assignment.test.begin(), out.assignment.test.end());

  out.train.time_unit = ds.time_unit;
  out.train.n_users = ds.n_users;
  out.train.n_items = ds.n_items;
  for (const auto& e : ds.events) {
    if (!held.count({e.user_idx, e.item_idx})) out.train.events.push_back(e);
  }
  return out;
}

void write_split_manifest(const SplitAssignment& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "user_idx,item_idx,role\n";
  for (const auto& [u, i] : a.validation) out << u << ',' << i << ",val\n";
  for (const auto& [u, i] : a.test) out << u << ',' << i << ",test\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

SplitAssignment read_split_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string line;
  if (!std::getline(in, line) ||
      split_csv_line(line) != std::vector<std::string>{"user_idx", "item_idx", "role"})
    throw std::runtime_error(path + ": expected header user_idx,item_idx,role");
  SplitAssignment a;
  long long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string ctx = path + ":" + std::to_string(line_no);
    auto f = split_csv_line(line);
    if (f.size() != 3) throw std::runtime_error(ctx + ": expected 3 fields");
    PairKey key{static_cast<int>(parse_int_field(f[0], ctx)),
                static_cast<int>(parse_int_field(f[1], ctx))};
    if (f[2] == "val") {
      a.validation.push_back(key);
    } else if (f[2] == "test") {
      a.test.push_back(key);
    } else {
      throw std::runtime_error(ctx + ": role must be val or test");
    }
  }
  std::sort(a.validation.begin(), a.validation.end());
  std::sort(a.test.begin(), a.test.end());
  return a;
}

}  // namespace ex2vec
