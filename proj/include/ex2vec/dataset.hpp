#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ex2vec {

enum class TimeUnit { seconds, hours };

TimeUnit parse_time_unit(const std::string& s);
std::string time_unit_name(TimeUnit u);

// One exposure of a user to an item. Indices are dense within a dataset,
// t is in the dataset's time unit, L is the binary listen outcome.
struct InteractionEvent {
  int user_idx = 0;
  int item_idx = 0;
  double t = 0.0;
  int label = 0;

  friend bool operator==(const InteractionEvent&, const InteractionEvent&) = default;
};

// Immutable after construction. Events are sorted by (user_idx, item_idx, t)
// and within a pair timestamps are strictly increasing.
struct Dataset {
  std::vector<InteractionEvent> events;
  int n_users = 0;
  int n_items = 0;
  TimeUnit time_unit = TimeUnit::hours;

  bool empty() const { return events.empty(); }
};

// Contiguous event range of one (user, item) pair inside Dataset::events.
struct PairRange {
  int user_idx = 0;
  int item_idx = 0;
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive

  std::size_t length() const { return end - begin; }
};

std::vector<PairRange> pair_ranges(const Dataset& ds);

// Sorts events and checks the per-pair strict time ordering.
void sort_events(std::vector<InteractionEvent>& events);

// Drops all entities that no longer appear and renumbers indices densely,
// preserving relative order. Used by the filtering operations.
Dataset densify(const std::vector<InteractionEvent>& kept_events, TimeUnit unit);

// Canonical processed format: CSV "user_idx,item_idx,t,L" with t printed to
// 6 decimal places. The time unit is not recorded in the file; the caller
// states it when reading.
void write_canonical_csv(const Dataset& ds, const std::string& path);
Dataset read_canonical_csv(const std::string& path, TimeUnit unit);

}  // namespace ex2vec
