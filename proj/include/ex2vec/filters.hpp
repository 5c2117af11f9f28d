#pragma once

#include <vector>

#include "ex2vec/dataset.hpp"

namespace ex2vec {

// Pairs are bucketed by their total exposure count. Sequences shorter than 5
// or longer than 50 exposures fall outside every class.
enum class RepClass { Excluded, LowRep, ModRep, HighRep, VHRep };

RepClass assign_repetition_class(std::size_t pair_length);
const char* rep_class_name(RepClass c);

// Drops every (user, item) pair whose first event falls after
// t_min + fraction * (t_max - t_min), where t_min/t_max span the whole
// dataset. All events of a dropped pair go with it. Indices are re-densified.
Dataset window_trim(const Dataset& ds, double fraction);

// Keep decision of window_trim per pair, exposed for property testing.
std::vector<bool> window_keep_pairs(const Dataset& ds, double fraction,
                                    const std::vector<PairRange>& pairs);

// Recursive degree filtering to a fixed point: every surviving user has at
// least k_item distinct items and every surviving item at least k_user
// distinct users. Degrees count distinct counterparts, not events. The result
// may be empty; indices are re-densified.
Dataset kcore_filter(const Dataset& ds, int k_item, int k_user);

// Fixed-point keep masks of kcore_filter over original indices.
struct KcoreMasks {
  std::vector<bool> keep_user;
  std::vector<bool> keep_item;
};
KcoreMasks kcore_keep(const Dataset& ds, int k_item, int k_user);

// Keeps only pairs whose exposure count lies in [min_len, max_len].
// Indices are re-densified.
Dataset pair_length_filter(const Dataset& ds, std::size_t min_len,
                           std::size_t max_len);

}  // namespace ex2vec
