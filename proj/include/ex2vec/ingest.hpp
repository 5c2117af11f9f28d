#pragma once

#include <string>

#include "ex2vec/dataset.hpp"

namespace ex2vec {

// Raw input comes in two CSV schemas, both with a required header row and
// integer epoch-second timestamps:
//   labeled: user_id,item_id,timestamp,label
//   timed:   user_id,item_id,timestamp,listen_time,duration
enum class RawSchema { labeled, timed };

RawSchema parse_raw_schema(const std::string& s);

// Binary listen label: 1 iff listen_time exceeds 80% of the track duration
// (strict inequality, so exactly 80% maps to 0).
int label_listens(double listen_time, double duration);

// Parses a raw event file into a Dataset. String ids are mapped to dense
// indices by lexicographic id order, so the result is independent of input
// row order. Duplicate (user, item, timestamp) rows are merged, keeping
// label 1 on conflict. Timestamps are converted to `unit` at parse time.
Dataset parse_events(const std::string& path, RawSchema schema, TimeUnit unit);

}  // namespace ex2vec
