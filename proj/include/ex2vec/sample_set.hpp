#pragma once

#include <span>
#include <vector>

#include "ex2vec/dataset.hpp"
#include "ex2vec/model.hpp"
#include "ex2vec/split.hpp"

namespace ex2vec {

// Events of selected pairs turned into model Samples: each sample carries the
// pair's own positive-consumption times strictly before the event. Histories
// point into storage owned by this object, so it is movable but not copyable.
class SampleSet {
 public:
  SampleSet() = default;
  SampleSet(const SampleSet&) = delete;
  SampleSet& operator=(const SampleSet&) = delete;
  SampleSet(SampleSet&&) = default;
  SampleSet& operator=(SampleSet&&) = default;

  // All events of the dataset.
  static SampleSet from_dataset(const Dataset& ds);
  // All events of the given pairs (e.g. a holdout's validation or test set).
  // Throws if a requested pair has no events in the dataset.
  static SampleSet from_pairs(const Dataset& ds, std::span<const PairKey> keys);

  std::span<const Sample> samples() const { return samples_; }
  // 1-based position of each sample within its pair's full exposure sequence.
  std::span<const int> exposure_index() const { return exposure_index_; }
  // Sample ranges per pair, in (user, item) order.
  std::span<const PairRange> groups() const { return groups_; }

 private:
  void build(const Dataset& ds, const std::vector<PairRange>& pairs);

  std::vector<double> positive_times_;  // flattened per-pair L=1 times
  std::vector<Sample> samples_;
  std::vector<int> exposure_index_;
  std::vector<PairRange> groups_;
};

// Extracts all events of the given pairs into a Dataset sharing the source's
// index space (counts are copied, not re-densified).
Dataset collect_pair_events(const Dataset& ds, std::span<const PairKey> keys);

}  // namespace ex2vec
