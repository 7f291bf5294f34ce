#pragma once

#include <string>
#include <string_view>

#include "flowline/event_log.hpp"

namespace flowline {

// Minimal XES reader: <trace> elements carrying a concept:name string and
// <event> elements carrying concept:name plus time:timestamp. Every other
// attribute or extension element is skipped and counted in
// SourceMeta::warning_count. Events are sorted ascending per trace.
EventLog parse_xes(const std::string& path);
EventLog parse_xes_text(std::string_view text, const std::string& source_name = "<memory>");

}  // namespace flowline
