#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace flowline {

// One executed activity. Timestamps are integer milliseconds since the Unix
// epoch; real logs carry sub-second precision and millisecond resolution
// preserves it without floating point.
struct Event {
  std::string activity;
  std::int64_t timestamp_ms = 0;

  friend bool operator==(const Event&, const Event&) = default;
};

// One process instance. Events are kept sorted ascending by timestamp; equal
// timestamps keep their input order.
struct Case {
  std::string id;
  std::vector<Event> events;

  friend bool operator==(const Case&, const Case&) = default;
};

// Names of the three required columns plus the timestamp format. An empty
// format string means ISO-8601 auto-detection.
struct ColumnMapping {
  std::string case_col = "case_id";
  std::string activity_col = "activity";
  std::string time_col = "timestamp";
  std::string time_format;

  friend bool operator==(const ColumnMapping&, const ColumnMapping&) = default;
};

struct SourceMeta {
  std::string path;
  std::string format;  // "csv", "xes", "synth", ...
  ColumnMapping mapping;
  std::size_t accepted_rows = 0;
  std::size_t skipped_rows = 0;
  std::size_t warning_count = 0;
};

struct EventLog {
  std::vector<Case> cases;
  SourceMeta meta;

  std::size_t event_count() const {
    std::size_t n = 0;
    for (const auto& c : cases) n += c.events.size();
    return n;
  }
};

struct Finding {
  enum class Kind {
    EmptyLog,
    DuplicateCaseId,
    EmptyCase,
    EmptyActivity,
    NegativeTimestamp,
    UnsortedTimestamps,
  };
  Kind kind;
  std::string detail;
};

const char* finding_kind_name(Finding::Kind kind);

struct ValidationReport {
  std::vector<Finding> findings;
  bool ok() const { return findings.empty(); }
};

// Checks the EventLog invariants without modifying the log. Each defect
// yields exactly one finding: one per duplicate case beyond the first, one
// per empty case, one per empty activity, one per negative timestamp, one
// per case whose events are out of order.
ValidationReport validate(const EventLog& log);

}  // namespace flowline
