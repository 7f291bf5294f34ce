#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flowline/relative_time.hpp"

namespace flowline {

// How badly a layout's vertical order contradicts the mean relative
// occurrence times. A pair {x, y} with g(x) < g(y) strictly contradicts iff
// rank(x) > rank(y); ties in g or in rank never count (preorder semantics).
struct ContradictionReport {
  std::size_t total_pairs = 0;          // all unordered activity pairs
  std::size_t contradicting_pairs = 0;
  std::size_t consistent_activities = 0;  // activities in zero contradicting pairs
  std::map<std::string, bool> activity_consistent;
  // (temporally earlier, temporally later) activities drawn in reverse order.
  std::vector<std::pair<std::string, std::string>> details;
};

ContradictionReport contradictions(const std::map<std::string, int>& ranks,
                                   const ActivityTimeStats& stats);

struct ComparisonSummary {
  ContradictionReport standard_layout;
  ContradictionReport timeline_layout;
};

// Both rank maps must cover the same activity set.
ComparisonSummary compare_layouts(const std::map<std::string, int>& standard_ranks,
                                  const std::map<std::string, int>& timeline_ranks,
                                  const ActivityTimeStats& stats);

std::string report_to_json(const ContradictionReport& report);
std::string summary_to_json(const ComparisonSummary& summary);
std::string summary_table(const ComparisonSummary& summary);

}  // namespace flowline
