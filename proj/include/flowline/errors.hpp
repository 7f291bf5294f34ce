#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace flowline {

// Error categories map 1:1 onto CLI exit codes (see README).
enum class ErrorCode : int {
  Internal = 1,
  Usage = 2,
  Io = 3,
  Parse = 4,
  EmptyInput = 5,
  Consistency = 6,
  Recipe = 7,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  const char* category() const noexcept {
    switch (code_) {
      case ErrorCode::Usage: return "usage";
      case ErrorCode::Io: return "io";
      case ErrorCode::Parse: return "parse";
      case ErrorCode::EmptyInput: return "empty-input";
      case ErrorCode::Consistency: return "consistency";
      case ErrorCode::Recipe: return "recipe";
      case ErrorCode::Internal: break;
    }
    return "internal";
  }

private:
  ErrorCode code_;
};

struct IoError : Error {
  explicit IoError(const std::string& m) : Error(ErrorCode::Io, m) {}
};

struct MissingColumnError : Error {
  explicit MissingColumnError(const std::string& column)
      : Error(ErrorCode::Parse, "missing column: " + column), column(column) {}
  std::string column;
};

struct TimestampParseError : Error {
  TimestampParseError(std::size_t row, const std::string& value)
      : Error(ErrorCode::Parse,
              "row " + std::to_string(row) + ": unparseable timestamp \"" + value + "\""),
        row(row) {}
  std::size_t row;
};

struct RowError : Error {
  RowError(std::size_t row, const std::string& what)
      : Error(ErrorCode::Parse, "row " + std::to_string(row) + ": " + what), row(row) {}
  std::size_t row;
};

struct EmptyLogError : Error {
  explicit EmptyLogError(const std::string& m = "event log contains no cases")
      : Error(ErrorCode::EmptyInput, m) {}
};

struct MalformedXmlError : Error {
  explicit MalformedXmlError(const std::string& m) : Error(ErrorCode::Parse, m) {}
};

struct MissingRequiredAttributeError : Error {
  MissingRequiredAttributeError(const std::string& scope, std::size_t index,
                                const std::string& key)
      : Error(ErrorCode::Parse,
              scope + " " + std::to_string(index) + ": missing required attribute " + key) {}
};

struct EmptyStatsError : Error {
  EmptyStatsError() : Error(ErrorCode::EmptyInput, "no activity statistics") {}
};

struct NegativeInputError : Error {
  explicit NegativeInputError(double value)
      : Error(ErrorCode::Consistency,
              "negative time value: " + std::to_string(value)) {}
};

struct NonIncreasingPairError : Error {
  NonIncreasingPairError(const std::string& from, const std::string& to)
      : Error(ErrorCode::Consistency,
              "time labels not increasing: " + from + " -> " + to) {}
};

struct UnmappedActivityError : Error {
  explicit UnmappedActivityError(const std::string& activity)
      : Error(ErrorCode::Consistency, "activity has no axis node: " + activity),
        activity(activity) {}
  std::string activity;
};

struct EmptyDfgError : Error {
  EmptyDfgError() : Error(ErrorCode::EmptyInput, "directly-follows graph is empty") {}
};

struct MissingStatsError : Error {
  explicit MissingStatsError(const std::string& activity)
      : Error(ErrorCode::Consistency, "no statistics for activity: " + activity),
        activity(activity) {}
  std::string activity;
};

struct ActivitySetMismatchError : Error {
  explicit ActivitySetMismatchError(const std::string& detail)
      : Error(ErrorCode::Consistency, "rank maps cover different activities: " + detail) {}
};

struct InvalidRecipeError : Error {
  explicit InvalidRecipeError(const std::string& m)
      : Error(ErrorCode::Recipe, "invalid recipe: " + m) {}
};

}  // namespace flowline
