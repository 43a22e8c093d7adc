#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sc/rdf/term.hpp"

namespace sc::rdf {

class LexicalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Signed day-time span at millisecond resolution.
class Duration {
 public:
  constexpr Duration() = default;
  static constexpr Duration from_millis(std::int64_t ms) { return Duration(ms); }
  static constexpr Duration from_seconds(std::int64_t s) { return Duration(s * 1000); }

  constexpr std::int64_t millis() const { return ms_; }

  constexpr auto operator<=>(const Duration&) const = default;
  constexpr Duration operator-() const { return Duration(-ms_); }
  Duration operator+(Duration other) const;
  Duration operator-(Duration other) const;
  Duration operator*(std::int64_t factor) const;

 private:
  constexpr explicit Duration(std::int64_t ms) : ms_(ms) {}
  std::int64_t ms_ = 0;
};

// An instant on the UTC timeline at millisecond resolution. The representable
// range is years 0001 through 9999.
class Timestamp {
 public:
  constexpr Timestamp() = default;
  static Timestamp from_unix_millis(std::int64_t ms);

  constexpr std::int64_t unix_millis() const { return ms_; }

  constexpr auto operator<=>(const Timestamp&) const = default;

  static const Timestamp min;
  static const Timestamp max;

 private:
  constexpr explicit Timestamp(std::int64_t ms) : ms_(ms) {}
  std::int64_t ms_ = 0;
};

enum class Sign { plus, minus };

// Timestamp arithmetic. Throws std::overflow_error when the result leaves the
// representable range.
Timestamp shift(Timestamp t, Duration d, Sign sign);
inline Timestamp operator+(Timestamp t, Duration d) { return shift(t, d, Sign::plus); }
inline Timestamp operator-(Timestamp t, Duration d) { return shift(t, d, Sign::minus); }
Duration operator-(Timestamp a, Timestamp b);

// xsd:dateTimeStamp lexical form. A timezone is mandatory and digits below the
// millisecond are truncated.
Timestamp parse_timestamp(std::string_view lexical);
// Canonical UTC form, e.g. 2021-07-20T10:51:08.657Z.
std::string format_timestamp(Timestamp t);

// xsd:duration restricted to day and time components (D, H, M, S).
Duration parse_duration(std::string_view lexical);
// Canonical form, e.g. PT2M or P1DT2H.
std::string format_duration(Duration d);

Term timestamp_literal(Timestamp t);
Term duration_literal(Duration d);

}  // namespace sc::rdf
