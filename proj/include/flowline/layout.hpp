#pragma once

#include <map>
#include <string>
#include <vector>

#include "flowline/dfg.hpp"
#include "flowline/timeline.hpp"

namespace flowline {

struct RankGroup {
  std::string axis_node_id;
  std::vector<std::string> activities;  // lexicographic

  friend bool operator==(const RankGroup&, const RankGroup&) = default;
};

// The timeline-aligned layout: one rank group per axis node holding the
// activities that share its time label. Activity membership partitions the
// DFG's activity set.
struct LayoutPlan {
  TimelineAxis axis;
  Dfg dfg;
  ActivityNodeMap activity_nodes;
  std::vector<RankGroup> subgraphs;
};

struct RenderOptions {
  bool edge_frequency_labels = true;
};

struct DotDocument {
  std::string text;
  // Logical entity ("act:<name>", "axis:<id>", "marker:start"/"marker:end")
  // to the identifier emitted in the DOT text.
  std::map<std::string, std::string> node_ids;
};

LayoutPlan plan_layout(const Dfg& dfg, const TimelineAxis& axis,
                       const ActivityNodeMap& map);

// Hierarchical DOT with the axis chain (rect nodes, bold minlen edges), DFG
// activity nodes/edges, and one rank=same subgraph per axis node. Output is
// deterministic: identical plans yield byte-identical text.
DotDocument emit_timeline_dot(const LayoutPlan& plan, const RenderOptions& opts = {});

// Conventional frequency-annotated DFG with artificial start/end markers and
// no rank constraints; the comparison baseline.
DotDocument emit_standard_dot(const Dfg& dfg, const RenderOptions& opts = {});

struct RankAssignment {
  std::map<std::string, int> ranks;
  // True when no start activity and no source node existed, in which case
  // ranks are first-appearance indices.
  bool used_first_appearance_fallback = false;
};

// Rank of an activity = index of its axis node; exact by construction.
RankAssignment timeline_ranks(const LayoutPlan& plan);

// Longest-path layering from the start markers, the reproducible proxy for a
// hierarchical renderer's vertical placement. Cycles are broken by a DFS from
// lexicographically ordered roots before layering.
RankAssignment standard_ranks(const Dfg& dfg);

}  // namespace flowline
