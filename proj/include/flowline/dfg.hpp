#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flowline/event_log.hpp"

namespace flowline {

// Frequency-annotated directly-follows graph. Activities are kept in first-
// appearance order; no artificial start/end nodes live here, they exist only
// at emission time.
struct Dfg {
  std::vector<std::string> activities;
  std::map<std::pair<std::string, std::string>, std::uint64_t> edges;
  std::map<std::string, std::uint64_t> start_activities;
  std::map<std::string, std::uint64_t> end_activities;

  bool has_activity(const std::string& a) const;
  std::uint64_t edge_frequency_sum() const;

  friend bool operator==(const Dfg&, const Dfg&) = default;
};

// Counts every adjacent (activity, next activity) pair per case; first/last
// events feed the start/end maps. Built from the original, non-transformed log.
Dfg discover_dfg(const EventLog& log);

// Drops edges below min_edge_freq, then activities left with no incident edge
// and no start/end role. Idempotent at a fixed threshold.
Dfg filter_dfg(const Dfg& dfg, std::uint64_t min_edge_freq);

// {"activities": [...], "edges": [{"source","target","frequency"}...],
//  "start_activities": {...}, "end_activities": {...}}
std::string dfg_to_json(const Dfg& dfg);

}  // namespace flowline
