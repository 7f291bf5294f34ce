#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "flowline/event_log.hpp"

namespace flowline {

// Delay from the previous step in milliseconds; either fixed or uniform on
// [lo_ms, hi_ms].
struct DelaySpec {
  bool uniform = false;
  std::int64_t fixed_ms = 0;
  std::int64_t lo_ms = 0;
  std::int64_t hi_ms = 0;

  double expected_ms() const {
    return uniform ? (static_cast<double>(lo_ms) + static_cast<double>(hi_ms)) / 2.0
                   : static_cast<double>(fixed_ms);
  }
};

struct RecipeStep {
  std::string activity;
  DelaySpec delay;
  int repeat = 1;  // the step is emitted this many times, fresh delay each
};

struct TraceTemplate {
  double weight = 1.0;
  std::vector<RecipeStep> steps;
};

// Ground-truth log generator input. Seeded generation is fully reproducible;
// per-activity expected mean relative times follow in closed form.
struct LogRecipe {
  std::vector<TraceTemplate> templates;
  std::uint64_t case_count = 0;
  std::uint64_t seed = 0;
  std::int64_t case_start_ms = 1'600'000'000'000;  // case i starts at start + i*spacing
  std::int64_t case_spacing_ms = 3'600'000;
  std::string case_id_prefix = "c";
};

struct GeneratedLog {
  EventLog log;
  // Closed-form expectation of the global mean relative time per activity.
  std::map<std::string, double> expected_mean_relative_ms;
};

// Throws InvalidRecipeError on structural defects (no templates, empty steps,
// negative delays, inverted ranges, non-positive weights, zero cases...).
void check_recipe(const LogRecipe& recipe);

GeneratedLog generate(const LogRecipe& recipe);

// Recipe as a small JSON document; see README for the schema.
LogRecipe recipe_from_json_text(const std::string& text);
LogRecipe recipe_from_json_file(const std::string& path);

std::string expected_stats_json(const GeneratedLog& generated);

}  // namespace flowline
