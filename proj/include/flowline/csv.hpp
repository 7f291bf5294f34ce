#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "flowline/event_log.hpp"

namespace flowline {

struct CsvOptions {
  char delimiter = ',';
  ColumnMapping mapping;
  // Minutes east of UTC applied to timestamps without an explicit offset.
  int naive_offset_min = 0;
  // When true, rows with unparseable fields are skipped and recorded in
  // SourceMeta instead of aborting the parse.
  bool skip_bad_rows = false;
};

// Reads a UTF-8 CSV with a header row, groups rows by case id and sorts each
// case by timestamp (stable, so equal timestamps keep input order). Cases
// appear in order of first appearance.
EventLog parse_csv(const std::string& path, const CsvOptions& opts = {});

// Same contract over an in-memory buffer; source_name only feeds SourceMeta.
EventLog parse_csv_text(std::string_view text, const CsvOptions& opts = {},
                        const std::string& source_name = "<memory>");

// Canonical CSV: header "case_id,activity,timestamp", comma delimiter,
// RFC-4180 quoting, ISO-8601 UTC millisecond timestamps. parse_csv_text of
// the output reproduces the log exactly.
void write_csv(const EventLog& log, std::ostream& out);
std::string to_canonical_csv(const EventLog& log);

}  // namespace flowline
