#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flowline/relative_time.hpp"

namespace flowline {

enum class TimeUnit { Seconds, Minutes, Hours, Days, Months, Years };

// Fixed unit ladder: s, m, h, D, MO = 30 D, Y = 365 D.
std::int64_t unit_length_ms(TimeUnit unit);
std::string_view unit_suffix(TimeUnit unit);

// A rounded human-readable time value such as "12m" or "4MO".
struct TimeLabel {
  TimeUnit unit = TimeUnit::Seconds;
  std::int64_t value = 0;

  std::string text() const;
  std::int64_t canonical_ms() const { return value * unit_length_ms(unit); }

  friend bool operator==(const TimeLabel&, const TimeLabel&) = default;
  std::strong_ordering operator<=>(const TimeLabel& other) const {
    return canonical_ms() <=> other.canonical_ms();
  }
};

// Inverse of TimeLabel::text; nullopt when the text is not <integer><unit>.
std::optional<TimeLabel> parse_label(std::string_view text);

// Picks the coarsest unit whose nearest-integer rounding is non-zero and
// keeps the rounding error within 50% of the input value; seconds are the
// terminal fallback, so anything below 500 ms renders "0s". Halfway values
// round away from zero. Monotone: x <= y implies canonical(x) <= canonical(y).
TimeLabel make_label(double mean_relative_ms);

// Both labels expressed in the later label's unit, subtracted, rounded to the
// nearest integer and clamped to >= 1; used as the axis edge minlen.
int edge_length(const TimeLabel& from, const TimeLabel& to);

struct AxisNode {
  std::string id;
  TimeLabel label;

  friend bool operator==(const AxisNode&, const AxisNode&) = default;
};

struct AxisEdge {
  std::string from_id;
  std::string to_id;
  int minlen = 1;

  friend bool operator==(const AxisEdge&, const AxisEdge&) = default;
};

// Strictly increasing chain of labeled time nodes; edges connect consecutive
// nodes only.
struct TimelineAxis {
  std::vector<AxisNode> nodes;
  std::vector<AxisEdge> edges;

  friend bool operator==(const TimelineAxis&, const TimelineAxis&) = default;
};

// activity -> axis node id (many activities may share one node).
using ActivityNodeMap = std::map<std::string, std::string>;

// One node per unique label of the activities' mean times, ascending, with
// ids t0, t1, ...; every activity maps to exactly one node.
std::pair<TimelineAxis, ActivityNodeMap> build_axis(const ActivityTimeStats& stats);

}  // namespace flowline
