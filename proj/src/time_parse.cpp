#include "flowline/time_parse.hpp"

#include <chrono>
#include <cstdio>

namespace flowline {
namespace {

bool take_digits(std::string_view& s, int count, int& out) {
  if (s.size() < static_cast<std::size_t>(count)) return false;
  int v = 0;
  for (int i = 0; i < count; ++i) {
    char c = s[static_cast<std::size_t>(i)];
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  s.remove_prefix(static_cast<std::size_t>(count));
  out = v;
  return true;
}

bool take_char(std::string_view& s, char c) {
  if (s.empty() || s.front() != c) return false;
  s.remove_prefix(1);
  return true;
}

// Fractional seconds -> milliseconds, truncating anything finer.
int take_fraction_ms(std::string_view& s) {
  int ms = 0;
  int seen = 0;
  while (!s.empty() && s.front() >= '0' && s.front() <= '9') {
    if (seen < 3) ms = ms * 10 + (s.front() - '0');
    ++seen;
    s.remove_prefix(1);
  }
  while (seen > 0 && seen < 3) {
    ms *= 10;
    ++seen;
  }
  return ms;
}

// Z, +HH, +HH:MM, +HHMM. Returns minutes east of UTC.
bool take_offset(std::string_view& s, bool& has_offset, int& offset_min) {
  has_offset = false;
  offset_min = 0;
  if (s.empty()) return true;
  if (s.front() == 'Z' || s.front() == 'z') {
    s.remove_prefix(1);
    has_offset = true;
    return true;
  }
  if (s.front() != '+' && s.front() != '-') return true;
  int sign = s.front() == '-' ? -1 : 1;
  s.remove_prefix(1);
  int hh = 0;
  if (!take_digits(s, 2, hh)) return false;
  int mm = 0;
  if (!s.empty()) {
    std::string_view at = s;
    if (take_char(at, ':')) {
      if (!take_digits(at, 2, mm)) return false;
      s = at;
    } else if (at.size() >= 2 && at[0] >= '0' && at[0] <= '9' && at[1] >= '0' && at[1] <= '9') {
      take_digits(s, 2, mm);
    }
  }
  if (hh > 23 || mm > 59) return false;
  has_offset = true;
  offset_min = sign * (hh * 60 + mm);
  return true;
}

struct CivilTime {
  int year = 1970, month = 1, day = 1;
  int hour = 0, minute = 0, second = 0, millis = 0;
  bool has_offset = false;
  int offset_min = 0;
};

std::optional<std::int64_t> to_epoch_ms(const CivilTime& t, int naive_offset_min) {
  using namespace std::chrono;
  year_month_day ymd{year{t.year}, month{static_cast<unsigned>(t.month)},
                     day{static_cast<unsigned>(t.day)}};
  if (!ymd.ok()) return std::nullopt;
  if (t.hour > 23 || t.minute > 59 || t.second > 60) return std::nullopt;
  std::int64_t days = sys_days(ymd).time_since_epoch().count();
  // Leap-second 60 folds into the next minute like most log tooling does.
  std::int64_t ms = days * 86'400'000LL +
                    t.hour * 3'600'000LL + t.minute * 60'000LL +
                    t.second * 1'000LL + t.millis;
  int off = t.has_offset ? t.offset_min : naive_offset_min;
  return ms - static_cast<std::int64_t>(off) * 60'000LL;
}

std::optional<CivilTime> parse_iso8601(std::string_view s) {
  CivilTime t;
  if (!take_digits(s, 4, t.year)) return std::nullopt;
  if (!take_char(s, '-')) return std::nullopt;
  if (!take_digits(s, 2, t.month)) return std::nullopt;
  if (!take_char(s, '-')) return std::nullopt;
  if (!take_digits(s, 2, t.day)) return std::nullopt;
  if (!s.empty()) {
    if (s.front() == 'T' || s.front() == ' ') {
      s.remove_prefix(1);
      if (!take_digits(s, 2, t.hour)) return std::nullopt;
      if (!take_char(s, ':')) return std::nullopt;
      if (!take_digits(s, 2, t.minute)) return std::nullopt;
      if (take_char(s, ':')) {
        if (!take_digits(s, 2, t.second)) return std::nullopt;
        if (take_char(s, '.')) t.millis = take_fraction_ms(s);
      }
    }
    if (!take_offset(s, t.has_offset, t.offset_min)) return std::nullopt;
  }
  if (!s.empty()) return std::nullopt;
  return t;
}

std::optional<CivilTime> parse_with_format(std::string_view s, std::string_view fmt) {
  CivilTime t;
  std::size_t i = 0;
  while (i < fmt.size()) {
    char c = fmt[i];
    if (c != '%') {
      if (!take_char(s, c)) return std::nullopt;
      ++i;
      continue;
    }
    if (i + 1 >= fmt.size()) return std::nullopt;
    char tok = fmt[i + 1];
    i += 2;
    switch (tok) {
      case 'Y':
        if (!take_digits(s, 4, t.year)) return std::nullopt;
        break;
      case 'm':
        if (!take_digits(s, 2, t.month)) return std::nullopt;
        break;
      case 'd':
        if (!take_digits(s, 2, t.day)) return std::nullopt;
        break;
      case 'H':
        if (!take_digits(s, 2, t.hour)) return std::nullopt;
        break;
      case 'M':
        if (!take_digits(s, 2, t.minute)) return std::nullopt;
        break;
      case 'S':
        if (!take_digits(s, 2, t.second)) return std::nullopt;
        break;
      case 'f':
        t.millis = take_fraction_ms(s);
        break;
      case 'z':
        if (!take_offset(s, t.has_offset, t.offset_min) || !t.has_offset)
          return std::nullopt;
        break;
      case '%':
        if (!take_char(s, '%')) return std::nullopt;
        break;
      default:
        return std::nullopt;  // unknown token: treat the format as invalid
    }
  }
  if (!s.empty()) return std::nullopt;
  return t;
}

}  // namespace

std::optional<std::int64_t> parse_timestamp_ms(std::string_view text,
                                               const std::string& format,
                                               int naive_offset_min) {
  // Trim surrounding whitespace; logs exported from spreadsheets carry it.
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  std::optional<CivilTime> civil = format.empty() ? parse_iso8601(text)
                                                  : parse_with_format(text, format);
  if (!civil) return std::nullopt;
  return to_epoch_ms(*civil, naive_offset_min);
}

std::string format_timestamp_ms(std::int64_t ms) {
  using namespace std::chrono;
  std::int64_t days = ms / 86'400'000LL;
  std::int64_t rem = ms % 86'400'000LL;
  if (rem < 0) {
    rem += 86'400'000LL;
    --days;
  }
  year_month_day ymd{sys_days{std::chrono::days{days}}};
  int h = static_cast<int>(rem / 3'600'000LL);
  int m = static_cast<int>(rem / 60'000LL % 60);
  int s = static_cast<int>(rem / 1'000LL % 60);
  int milli = static_cast<int>(rem % 1'000LL);
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02d.%03dZ",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()), h, m, s, milli);
  return buf;
}

}  // namespace flowline
