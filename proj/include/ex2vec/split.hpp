#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ex2vec/dataset.hpp"

namespace ex2vec {

using PairKey = std::pair<int, int>;  // (user_idx, item_idx)

// Per-user holdout of four distinct items: two to validation, two to test.
struct SplitAssignment {
  std::int64_t seed = 0;
  std::vector<PairKey> validation;  // sorted by (user, item)
  std::vector<PairKey> test;
};

struct HoldoutSplit {
  Dataset train;  // same index space as the input dataset
  SplitAssignment assignment;
};

// For each user, samples four of their distinct items with a generator
// derived from (seed, user_idx), so the assignment does not depend on
// iteration schedule. Every event of a held-out (user, item) pair is removed
// from the training set; held-out items can still occur in training through
// other users. Throws if some user has fewer than five distinct items.
HoldoutSplit holdout_split(const Dataset& ds, std::int64_t seed);

// Split manifest: CSV "user_idx,item_idx,role" with role in {val, test}.
void write_split_manifest(const SplitAssignment& a, const std::string& path);
SplitAssignment read_split_manifest(const std::string& path);

}  // namespace ex2vec
