#pragma once

#include <atomic>
#include <chrono>

#include "sc/rdf/xsd.hpp"

namespace sc::core {

// Source of NOW() for window evaluation and scheduling.
class Clock {
 public:
  virtual ~Clock() = default;

  virtual rdf::Timestamp now() const = 0;

  // Waits until `t`. Returns false without waiting if `t` has already passed.
  virtual bool sleep_until(rdf::Timestamp t) = 0;
};

class SystemClock final : public Clock {
 public:
  rdf::Timestamp now() const override;
  bool sleep_until(rdf::Timestamp t) override;
};

// Starts at a fixed instant and then advances with real elapsed time.
class OffsetClock final : public Clock {
 public:
  explicit OffsetClock(rdf::Timestamp start);

  rdf::Timestamp now() const override;
  bool sleep_until(rdf::Timestamp t) override;

 private:
  rdf::Timestamp start_;
  std::chrono::steady_clock::time_point origin_;
};

// Moves only when told to. sleep_until jumps forward instead of blocking.
class ManualClock final : public Clock {
 public:
  explicit ManualClock(rdf::Timestamp start) : ms_(start.unix_millis()) {}

  rdf::Timestamp now() const override { return rdf::Timestamp::from_unix_millis(ms_.load()); }
  bool sleep_until(rdf::Timestamp t) override;

  void set(rdf::Timestamp t) { ms_.store(t.unix_millis()); }
  void advance(rdf::Duration d) { set(now() + d); }

 private:
  std::atomic<std::int64_t> ms_;
};

}  // namespace sc::core
