#include "ex2vec/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>
#include <tuple>

#include "ex2vec/csv.hpp"

namespace ex2vec {

RawSchema parse_raw_schema(const std::string& s) {
  if (s == "labeled") return RawSchema::labeled;
  if (s == "timed") return RawSchema::timed;
  throw std::runtime_error("unknown schema '" + s + "' (expected labeled|timed)");
}

int label_listens(double listen_time, double duration) {
  if (duration <= 0.0) throw std::runtime_error("duration must be positive");
  if (listen_time < 0.0) throw std::runtime_error("listen_time must be non-negative");
  return listen_time / duration > 0.8 ? 1 : 0;
}

namespace {

struct RawRow {
  std::string user_id;
  std::string item_id;
  long long timestamp = 0;  // integer seconds since epoch
  int label = 0;
};

const std::vector<std::string> kLabeledHeader = {"user_id", "item_id", "timestamp",
                                                 "label"};
const std::vector<std::string> kTimedHeader = {"user_id", "item_id", "timestamp",
                                               "listen_time", "duration"};

}  // namespace

Dataset parse_events(const std::string& path, RawSchema schema, TimeUnit unit) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);

  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty dataset file: " + path);
  const auto& expected =
      schema == RawSchema::labeled ? kLabeledHeader : kTimedHeader;
  if (split_csv_line(line) != expected) {
    std::string want;
    for (const auto& h : expected) want += (want.empty() ? "" : ",") + h;
    throw std::runtime_error(path + ": expected header " + want);
  }

  std::vector<RawRow> rows;
  long long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string ctx = path + ":" + std::to_string(line_no);
    auto f = split_csv_line(line);
    if (f.size() != expected.size())
      throw std::runtime_error(ctx + ": expected " + std::to_string(expected.size()) +
                               " fields, got " + std::to_string(f.size()));
    RawRow row;
    row.user_id = f[0];
    row.item_id = f[1];
    if (row.user_id.empty() || row.item_id.empty())
      throw std::runtime_error(ctx + ": empty id field");
    row.timestamp = parse_int_field(f[2], ctx);
    if (row.timestamp < 0) throw std::runtime_error(ctx + ": negative timestamp");
    if (schema == RawSchema::labeled) {
      long long lab = parse_int_field(f[3], ctx);
      if (lab != 0 && lab != 1)
        throw std::runtime_error(ctx + ": label must be 0 or 1");
      row.label = static_cast<int>(lab);
    } else {
      double listen_time = parse_real_field(f[3], ctx);
      double duration = parse_real_field(f[4], ctx);
      if (duration <= 0.0) throw std::runtime_error(ctx + ": duration must be > 0");
      if (listen_time < 0.0)
        throw std::runtime_error(ctx + ": listen_time must be >= 0");
      row.label = label_listens(listen_time, duration);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("empty dataset file: " + path);

  // Dense indices by lexicographic id order, independent of row order.
  std::map<std::string, int> user_ids, item_ids;
  for (const auto& r : rows) {
    user_ids.emplace(r.user_id, 0);
    item_ids.emplace(r.item_id, 0);
  }
  int next = 0;
  for (auto& [id, idx] : user_ids) idx = next++;
  next = 0;
  for (auto& [id, idx] : item_ids) idx = next++;

  // Deduplicate on (user, item, timestamp); a positive label wins a conflict.
  struct Keyed {
    int user, item;
    long long ts;
    int label;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(rows.size());
  for (const auto& r : rows) {
    keyed.push_back({user_ids[r.user_id], item_ids[r.item_id], r.timestamp, r.label});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.user, a.item, a.ts, b.label) <
           std::tie(b.user, b.item, b.ts, a.label);  // label 1 first within a key
  });

  Dataset ds;
  ds.time_unit = unit;
  ds.n_users = static_cast<int>(user_ids.size());
  ds.n_items = static_cast<int>(item_ids.size());
  const double scale = unit == TimeUnit::hours ? 1.0 / 3600.0 : 1.0;
  ds.events.reserve(keyed.size());
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && keyed[i].user == keyed[i - 1].user &&
        keyed[i].item == keyed[i - 1].item && keyed[i].ts == keyed[i - 1].ts) {
      continue;  // duplicate key; the first (label-1-first) copy was kept
    }
    ds.events.push_back({keyed[i].user, keyed[i].item,
                         static_cast<double>(keyed[i].ts) * scale, keyed[i].label});
  }
  sort_events(ds.events);
  return ds;
}

}  // namespace ex2vec
