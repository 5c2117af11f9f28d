#include "ex2vec/filters.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ex2vec {

RepClass assign_repetition_class(std::size_t pair_length) {
  if (pair_length < 5 || pair_length > 50) return RepClass::Excluded;
  if (pair_length <= 16) return RepClass::LowRep;
  if (pair_length <= 27) return RepClass::ModRep;
  if (pair_length <= 38) return RepClass::HighRep;
  return RepClass::VHRep;
}

const char* rep_class_name(RepClass c) {
  switch (c) {
    case RepClass::Excluded: return "Excluded";
    case RepClass::LowRep: return "LowRep";
    case RepClass::ModRep: return "ModRep";
    case RepClass::HighRep: return "HighRep";
    case RepClass::VHRep: return "VHRep";
  }
  return "?";
}

std::vector<bool> window_keep_pairs(const Dataset& ds, double fraction,
                                    const std::vector<PairRange>& pairs) {
  double t_min = ds.events.front().t, t_max = ds.events.front().t;
  for (const auto& e : ds.events) {
    t_min = std::min(t_min, e.t);
    t_max = std::max(t_max, e.t);
  }
  const double cutoff = t_min + fraction * (t_max - t_min);
  std::vector<bool> keep(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    // Events within a pair are time-sorted, so the first one is the earliest.
    keep[p] = ds.events[pairs[p].begin].t <= cutoff;
  }
  return keep;
}

Dataset window_trim(const Dataset& ds, double fraction) {
  if (ds.empty()) throw std::runtime_error("window_trim: empty dataset");
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw std::runtime_error("window_trim: fraction must be in (0, 1]");
  const auto pairs = pair_ranges(ds);
  const auto keep = window_keep_pairs(ds, fraction, pairs);
  std::vector<InteractionEvent> kept;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (!keep[p]) continue;
    kept.insert(kept.end(), ds.events.begin() + pairs[p].begin,
                ds.events.begin() + pairs[p].end);
  }
  return densify(kept, ds.time_unit);
}

KcoreMasks kcore_keep(const Dataset& ds, int k_item, int k_user) {
  if (k_item < 1 || k_user < 1)
    throw std::runtime_error("kcore_filter: k values must be >= 1");
  // Distinct counterpart sets per entity; peel until stable.
  std::vector<std::set<int>> user_items(ds.n_users), item_users(ds.n_items);
  for (const auto& e : ds.events) {
    user_items[e.user_idx].insert(e.item_idx);
    item_users[e.item_idx].insert(e.user_idx);
  }
  KcoreMasks m;
  m.keep_user.assign(ds.n_users, true);
  m.keep_item.assign(ds.n_items, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < ds.n_users; ++u) {
      if (m.keep_user[u] &&
          user_items[u].size() < static_cast<std::size_t>(k_item)) {
        m.keep_user[u] = false;
        changed = true;
        for (int i : user_items[u]) item_users[i].erase(u);
        user_items[u].clear();
      }
    }
    for (int i = 0; i < ds.n_items; ++i) {
      if (m.keep_item[i] &&
          item_users[i].size() < static_cast<std::size_t>(k_user)) {
        m.keep_item[i] = false;
        changed = true;
        for (int u : item_users[i]) user_items[u].erase(i);
        item_users[i].clear();
      }
    }
  }
  return m;
}

Dataset kcore_filter(const Dataset& ds, int k_item, int k_user) {
  const auto m = kcore_keep(ds, k_item, k_user);
  std::vector<InteractionEvent> kept;
  for (const auto& e : ds.events) {
    if (m.keep_user[e.user_idx] && m.keep_item[e.item_idx]) kept.push_back(e);
  }
  return densify(kept, ds.time_unit);
}

Dataset pair_length_filter(const Dataset& ds, std::size_t min_len,
                           std::size_t max_len) {
  std::vector<InteractionEvent> kept;
  for (const auto& pr : pair_ranges(ds)) {
    if (pr.length() >= min_len && pr.length() <= max_len) {
      kept.insert(kept.end(), ds.events.begin() + pr.begin,
                  ds.events.begin() + pr.end);
    }
  }
  return densify(kept, ds.time_unit);
}

}  // namespace ex2vec
