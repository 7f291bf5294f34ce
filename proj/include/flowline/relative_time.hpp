#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "flowline/event_log.hpp"

namespace flowline {

// An event log whose timestamps are offsets from the case start; the minimum
// offset in every case is exactly 0.
struct RelativeLog {
  std::vector<Case> cases;
};

enum class AggregationMode {
  // Mean over every occurrence of the activity in the whole log.
  GlobalMean,
  // Mean per case of the activity's occurrences first (one sub-table per
  // activity per case, which tames loops), then mean of those case means.
  PerCaseMeanFirst,
};

enum class CentralTendency { Median, Mode };

struct ActivityStat {
  double mean_relative_ms = 0.0;
  std::uint64_t occurrence_count = 0;
  std::uint64_t case_count = 0;

  friend bool operator==(const ActivityStat&, const ActivityStat&) = default;
};

struct ActivityTimeStats {
  std::map<std::string, ActivityStat> by_activity;

  bool empty() const { return by_activity.empty(); }
};

// Replaces every timestamp by its offset from the case minimum. The input is
// untouched; the result is a fixpoint of the transformation.
RelativeLog transform_relative(const EventLog& log);

ActivityTimeStats activity_stats(const RelativeLog& rel,
                                 AggregationMode mode = AggregationMode::GlobalMean);

// Same shape as activity_stats but mean_relative_ms carries the median or
// the statistical mode of the relative times. Median of an even count is the
// midpoint of the two middle values; mode ties resolve to the smallest value.
ActivityTimeStats aggregate_alternative(const RelativeLog& rel, CentralTendency which);

// activity,mean_relative_ms,occurrence_count,case_count rows, sorted by name.
std::string stats_to_csv(const ActivityTimeStats& stats);
// JSON object keyed by activity.
std::string stats_to_json(const ActivityTimeStats& stats);

}  // namespace flowline
