#include "sc/rdf/xsd.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "sc/rdf/vocab.hpp"

namespace sc::rdf {

namespace {

constexpr std::int64_t kMillisPerSecond = 1000;
constexpr std::int64_t kMillisPerMinute = 60 * kMillisPerSecond;
constexpr std::int64_t kMillisPerHour = 60 * kMillisPerMinute;
constexpr std::int64_t kMillisPerDay = 24 * kMillisPerHour;

std::int64_t days_from_civil(int year, unsigned month, unsigned day) {
  using namespace std::chrono;
  sys_days d = std::chrono::year{year} / std::chrono::month{month} / std::chrono::day{day};
  return d.time_since_epoch().count();
}

const std::int64_t kMinMillis = days_from_civil(1, 1, 1) * kMillisPerDay;
const std::int64_t kMaxMillis = (days_from_civil(9999, 12, 31) + 1) * kMillisPerDay - 1;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("duration arithmetic overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("duration arithmetic overflow");
  return out;
}

class Cursor {
 public:
  Cursor(std::string_view text, const char* what) : text_(text), what_(what) {}

  [[noreturn]] void fail(const std::string& why) const {
    throw LexicalError("invalid " + std::string(what_) + " '" + std::string(text_) + "': " + why);
  }

  bool done() const { return pos_ == text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string_view digits() {
    auto start = pos_;
    while (!done() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    return text_.substr(start, pos_ - start);
  }

  int fixed(std::size_t width) {
    auto d = digits();
    if (d.size() != width) fail("expected " + std::to_string(width) + " digits");
    return to_int(d);
  }

  std::int64_t to_int(std::string_view d) const {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
    if (ec != std::errc() || ptr != d.data() + d.size()) fail("number out of range");
    return v;
  }

  // Fraction digits as milliseconds; finer digits are truncated.
  std::int64_t fraction_millis(std::string_view d) const {
    std::int64_t ms = 0;
    for (std::size_t i = 0; i < 3; ++i) ms = ms * 10 + (i < d.size() ? d[i] - '0' : 0);
    return ms;
  }

 private:
  std::string_view text_;
  const char* what_;
  std::size_t pos_ = 0;
};

}  // namespace

Duration Duration::operator+(Duration other) const {
  return Duration(checked_add(ms_, other.ms_));
}

Duration Duration::operator-(Duration other) const {
  return Duration(checked_add(ms_, checked_mul(other.ms_, -1)));
}

Duration Duration::operator*(std::int64_t factor) const { return Duration(checked_mul(ms_, factor)); }

const Timestamp Timestamp::min = Timestamp::from_unix_millis(kMinMillis);
const Timestamp Timestamp::max = Timestamp::from_unix_millis(kMaxMillis);

Timestamp Timestamp::from_unix_millis(std::int64_t ms) {
  if (ms < kMinMillis || ms > kMaxMillis) throw std::overflow_error("timestamp out of range");
  return Timestamp(ms);
}

Timestamp shift(Timestamp t, Duration d, Sign sign) {
  std::int64_t delta = sign == Sign::plus ? d.millis() : checked_mul(d.millis(), -1);
  std::int64_t out;
  if (__builtin_add_overflow(t.unix_millis(), delta, &out) || out < kMinMillis || out > kMaxMillis) {
    throw std::overflow_error("timestamp shift leaves the representable range");
  }
  return Timestamp::from_unix_millis(out);
}

Duration operator-(Timestamp a, Timestamp b) {
  return Duration::from_millis(a.unix_millis() - b.unix_millis());
}

Timestamp parse_timestamp(std::string_view lexical) {
  Cursor in(lexical, "xsd:dateTimeStamp");
  if (in.peek() == '-') in.fail("years before 0001 are not supported");
  auto year_digits = in.digits();
  if (year_digits.size() < 4) in.fail("year needs at least four digits");
  if (year_digits.size() > 4 && year_digits.front() == '0') in.fail("year has leading zeros");
  auto year = in.to_int(year_digits);
  if (year < 1 || year > 9999) in.fail("year outside 0001..9999");
  in.expect('-');
  int month = in.fixed(2);
  in.expect('-');
  int day = in.fixed(2);
  in.expect('T');
  int hour = in.fixed(2);
  in.expect(':');
  int minute = in.fixed(2);
  in.expect(':');
  int second = in.fixed(2);
  std::int64_t millis = 0;
  bool nonzero_fraction = false;
  if (in.accept('.')) {
    auto frac = in.digits();
    if (frac.empty()) in.fail("empty fractional seconds");
    millis = in.fraction_millis(frac);
    nonzero_fraction = frac.find_first_not_of('0') != std::string_view::npos;
  }
  if (in.done()) in.fail("timezone is required");

  std::int64_t offset_minutes = 0;
  if (!in.accept('Z')) {
    int sign = 1;
    if (in.accept('-')) {
      sign = -1;
    } else {
      in.expect('+');
    }
    int tz_hour = in.fixed(2);
    in.expect(':');
    int tz_minute = in.fixed(2);
    if (tz_minute > 59 || tz_hour > 14 || (tz_hour == 14 && tz_minute != 0)) {
      in.fail("timezone offset out of range");
    }
    offset_minutes = sign * (tz_hour * 60 + tz_minute);
  }
  if (!in.done()) in.fail("trailing characters");

  using namespace std::chrono;
  year_month_day ymd{std::chrono::year{static_cast<int>(year)}, std::chrono::month{static_cast<unsigned>(month)},
                     std::chrono::day{static_cast<unsigned>(day)}};
  if (!ymd.ok()) in.fail("no such calendar date");
  if (minute > 59 || second > 59) in.fail("time of day out of range");
  if (hour > 24 || (hour == 24 && (minute != 0 || second != 0 || nonzero_fraction))) {
    in.fail("time of day out of range");
  }

  std::int64_t ms = days_from_civil(static_cast<int>(year), month, day) * kMillisPerDay +
                    hour * kMillisPerHour + minute * kMillisPerMinute + second * kMillisPerSecond + millis -
                    offset_minutes * kMillisPerMinute;
  if (ms < kMinMillis || ms > kMaxMillis) in.fail("instant outside the representable range");
  return Timestamp::from_unix_millis(ms);
}

std::string format_timestamp(Timestamp t) {
  using namespace std::chrono;
  auto ms = t.unix_millis();
  auto days = ms / kMillisPerDay;
  auto rem = ms % kMillisPerDay;
  if (rem < 0) {
    rem += kMillisPerDay;
    --days;
  }
  year_month_day ymd{sys_days{std::chrono::days{days}}};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02lld:%02lld:%02lld.%03lldZ", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<long long>(rem / kMillisPerHour), static_cast<long long>(rem / kMillisPerMinute % 60),
                static_cast<long long>(rem / kMillisPerSecond % 60), static_cast<long long>(rem % 1000));
  return buf;
}

Duration parse_duration(std::string_view lexical) {
  Cursor in(lexical, "xsd:duration");
  bool negative = in.accept('-');
  in.expect('P');
  std::int64_t total = 0;
  bool any = false;
  bool time_part = false;
  // Designators must appear in this order: D, then T, H, M, S.
  int last_rank = 0;
  auto rank_of = [&](char designator) {
    if (!time_part) return designator == 'D' ? 1 : -1;
    switch (designator) {
      case 'H': return 2;
      case 'M': return 3;
      case 'S': return 4;
      default: return -1;
    }
  };
  while (!in.done()) {
    if (in.accept('T')) {
      if (time_part) in.fail("duplicate 'T'");
      time_part = true;
      if (in.done()) in.fail("'T' must be followed by a time component");
      continue;
    }
    auto whole = in.digits();
    if (whole.empty()) in.fail("expected a number");
    std::int64_t frac_ms = 0;
    bool has_fraction = false;
    if (in.accept('.')) {
      auto frac = in.digits();
      if (frac.empty()) in.fail("empty fraction");
      frac_ms = in.fraction_millis(frac);
      has_fraction = true;
    }
    char designator = in.peek();
    if (designator == '\0') in.fail("missing designator");
    in.accept(designator);
    if (!time_part && (designator == 'Y' || designator == 'M')) {
      in.fail("year and month components are not supported");
    }
    int rank = rank_of(designator);
    if (rank < 0) in.fail(std::string("unexpected designator '") + designator + "'");
    if (rank <= last_rank) in.fail("components out of order");
    if (has_fraction && designator != 'S') in.fail("only seconds may have a fraction");
    last_rank = rank;
    auto value = in.to_int(whole);
    std::int64_t unit = designator == 'D'   ? kMillisPerDay
                        : designator == 'H' ? kMillisPerHour
                        : designator == 'M' ? kMillisPerMinute
                                            : kMillisPerSecond;
    try {
      total = checked_add(total, checked_add(checked_mul(value, unit), frac_ms));
    } catch (const std::overflow_error&) {
      in.fail("value too large");
    }
    any = true;
  }
  if (!any) in.fail("at least one component is required");
  if (time_part && last_rank < 2) in.fail("'T' must be followed by a time component");
  return Duration::from_millis(negative ? -total : total);
}

std::string format_duration(Duration d) {
  auto ms = d.millis();
  if (ms == 0) return "PT0S";
  std::string out = ms < 0 ? "-P" : "P";
  // Magnitude in unsigned space so INT64_MIN does not overflow.
  auto mag = ms < 0 ? static_cast<std::uint64_t>(-(ms + 1)) + 1 : static_cast<std::uint64_t>(ms);
  auto days = mag / kMillisPerDay;
  mag %= kMillisPerDay;
  if (days) out += std::to_string(days) + "D";
  if (mag == 0) return out;
  out += "T";
  auto hours = mag / kMillisPerHour;
  auto minutes = mag / kMillisPerMinute % 60;
  auto seconds = mag / kMillisPerSecond % 60;
  auto millis = mag % 1000;
  if (hours) out += std::to_string(hours) + "H";
  if (minutes) out += std::to_string(minutes) + "M";
  if (seconds || millis) {
    out += std::to_string(seconds);
    if (millis) {
      char frac[8];
      std::snprintf(frac, sizeof frac, ".%03u", static_cast<unsigned>(millis));
      std::string f = frac;
      while (f.back() == '0') f.pop_back();
      out += f;
    }
    out += "S";
  }
  return out;
}

Term timestamp_literal(Timestamp t) {
  return typed_literal(format_timestamp(t), std::string(vocab::xsd::date_time_stamp));
}

Term duration_literal(Duration d) {
  return typed_literal(format_duration(d), std::string(vocab::xsd::duration));
}

}  // namespace sc::rdf
