#include "ex2vec/sample_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace ex2vec {

void SampleSet::build(const Dataset& ds, const std::vector<PairRange>& pairs) {
  std::size_t total_events = 0, total_pos = 0;
  for (const auto& pr : pairs) {
    total_events += pr.length();
    for (std::size_t k = pr.begin; k < pr.end; ++k)
      if (ds.events[k].label == 1) ++total_pos;
  }
  positive_times_.reserve(total_pos);  // no reallocation after this
  samples_.reserve(total_events);
  exposure_index_.reserve(total_events);
  groups_.reserve(pairs.size());

  for (const auto& pr : pairs) {
    const std::size_t pos_begin = positive_times_.size();
    const std::size_t sample_begin = samples_.size();
    int exposure = 0;
    for (std::size_t k = pr.begin; k < pr.end; ++k) {
      const auto& e = ds.events[k];
      Sample s;
      s.user_idx = e.user_idx;
      s.item_idx = e.item_idx;
      s.t = e.t;
      s.label = e.label;
      // Past positives strictly before t: within-pair times are strictly
      // increasing, so everything appended so far qualifies.
      s.history = History(positive_times_.data() + pos_begin,
                          positive_times_.size() - pos_begin);
      samples_.push_back(s);
      exposure_index_.push_back(++exposure);
      if (e.label == 1) positive_times_.push_back(e.t);
    }
    groups_.push_back({pr.user_idx, pr.item_idx, sample_begin, samples_.size()});
  }
}

SampleSet SampleSet::from_dataset(const Dataset& ds) {
  SampleSet set;
  set.build(ds, pair_ranges(ds));
  return set;
}

SampleSet SampleSet::from_pairs(const Dataset& ds, std::span<const PairKey> keys) {
  const auto all = pair_ranges(ds);
  std::vector<PairRange> selected;
  selected.reserve(keys.size());
  for (const auto& [u, i] : keys) {
    auto it = std::lower_bound(all.begin(), all.end(), PairKey{u, i},
                               [](const PairRange& pr, const PairKey& k) {
                                 return PairKey{pr.user_idx, pr.item_idx} < k;
                               });
    if (it == all.end() || it->user_idx != u || it->item_idx != i) {
      throw std::runtime_error("pair (" + std::to_string(u) + "," +
                               std::to_string(i) + ") has no events");
    }
    selected.push_back(*it);
  }
  SampleSet set;
  set.build(ds, selected);
  return set;
}

Dataset collect_pair_events(const Dataset& ds, std::span<const PairKey> keys) {
  const auto all = pair_ranges(ds);
  Dataset out;
  out.n_users = ds.n_users;
  out.n_items = ds.n_items;
  out.time_unit = ds.time_unit;
  for (const auto& [u, i] : keys) {
    auto it = std::lower_bound(all.begin(), all.end(), PairKey{u, i},
                               [](const PairRange& pr, const PairKey& k) {
                                 return PairKey{pr.user_idx, pr.item_idx} < k;
                               });
    if (it == all.end() || it->user_idx != u || it->item_idx != i) {
      throw std::runtime_error("pair (" + std::to_string(u) + "," +
                               std::to_string(i) + ") has no events");
    }
    out.events.insert(out.events.end(), ds.events.begin() + it->begin,
                      ds.events.begin() + it->end);
  }
  sort_events(out.events);
  return out;
}

}  // namespace ex2vec
