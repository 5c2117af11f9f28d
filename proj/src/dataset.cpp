#include "ex2vec/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "ex2vec/csv.hpp"

namespace ex2vec {

TimeUnit parse_time_unit(const std::string& s) {
  if (s == "seconds") return TimeUnit::seconds;
  if (s == "hours") return TimeUnit::hours;
  throw std::runtime_error("unknown time unit '" + s + "' (expected seconds|hours)");
}

std::string time_unit_name(TimeUnit u) {
  return u == TimeUnit::seconds ? "seconds" : "hours";
}

std::vector<PairRange> pair_ranges(const Dataset& ds) {
  std::vector<PairRange> ranges;
  std::size_t i = 0;
  const std::size_t n = ds.events.size();
  while (i < n) {
    std::size_t j = i;
    while (j < n && ds.events[j].user_idx == ds.events[i].user_idx &&
           ds.events[j].item_idx == ds.events[i].item_idx) {
      ++j;
    }
    ranges.push_back({ds.events[i].user_idx, ds.events[i].item_idx, i, j});
    i = j;
  }
  return ranges;
}

void sort_events(std::vector<InteractionEvent>& events) {
  std::sort(events.begin(), events.end(),
            [](const InteractionEvent& a, const InteractionEvent& b) {
              if (a.user_idx != b.user_idx) return a.user_idx < b.user_idx;
              if (a.item_idx != b.item_idx) return a.item_idx < b.item_idx;
              return a.t < b.t;
            });
  for (std::size_t i = 1; i < events.size(); ++i) {
    const auto& p = events[i - 1];
    const auto& e = events[i];
    if (p.user_idx == e.user_idx && p.item_idx == e.item_idx && !(p.t < e.t)) {
      throw std::runtime_error(
          "duplicate timestamp within a user-item pair after deduplication");
    }
  }
}

Dataset densify(const std::vector<InteractionEvent>& kept_events, TimeUnit unit) {
  int max_user = -1, max_item = -1;
  for (const auto& e : kept_events) {
    max_user = std::max(max_user, e.user_idx);
    max_item = std::max(max_item, e.item_idx);
  }
  std::vector<int> user_map(max_user + 1, -1), item_map(max_item + 1, -1);
  for (const auto& e : kept_events) {
    user_map[e.user_idx] = 0;
    item_map[e.item_idx] = 0;
  }
  int nu = 0, ni = 0;
  for (auto& m : user_map)
    if (m == 0) m = nu++;
  for (auto& m : item_map)
    if (m == 0) m = ni++;

  Dataset out;
  out.time_unit = unit;
  out.n_users = nu;
  out.n_items = ni;
  out.events.reserve(kept_events.size());
  for (const auto& e : kept_events) {
    out.events.push_back({user_map[e.user_idx], item_map[e.item_idx], e.t, e.label});
  }
  sort_events(out.events);
  return out;
}

void write_canonical_csv(const Dataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "user_idx,item_idx,t,L\n";
  for (const auto& e : ds.events) {
    out << e.user_idx << ',' << e.item_idx << ',' << format_fixed(e.t, 6) << ','
        << e.label << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

Dataset read_canonical_csv(const std::string& path, TimeUnit unit) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty dataset file: " + path);
  auto header = split_csv_line(line);
  if (header != std::vector<std::string>{"user_idx", "item_idx", "t", "L"})
    throw std::runtime_error(path + ": expected header user_idx,item_idx,t,L");

  Dataset ds;
  ds.time_unit = unit;
  long long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string ctx = path + ":" + std::to_string(line_no);
    auto f = split_csv_line(line);
    if (f.size() != 4) throw std::runtime_error(ctx + ": expected 4 fields");
    InteractionEvent e;
    e.user_idx = static_cast<int>(parse_int_field(f[0], ctx));
    e.item_idx = static_cast<int>(parse_int_field(f[1], ctx));
    e.t = parse_real_field(f[2], ctx);
    long long lab = parse_int_field(f[3], ctx);
    if (e.user_idx < 0 || e.item_idx < 0)
      throw std::runtime_error(ctx + ": negative index");
    if (lab != 0 && lab != 1) throw std::runtime_error(ctx + ": label must be 0 or 1");
    e.label = static_cast<int>(lab);
    ds.n_users = std::max(ds.n_users, e.user_idx + 1);
    ds.n_items = std::max(ds.n_items, e.item_idx + 1);
    ds.events.push_back(e);
  }
  if (ds.events.empty()) throw std::runtime_error("empty dataset file: " + path);
  sort_events(ds.events);
  return ds;
}

}  // namespace ex2vec
