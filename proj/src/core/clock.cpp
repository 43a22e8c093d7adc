#include "sc/core/clock.hpp"

#include <thread>

namespace sc::core {

rdf::Timestamp SystemClock::now() const {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::system_clock::now().time_since_epoch())
                .count();
  return rdf::Timestamp::from_unix_millis(ms);
}

bool SystemClock::sleep_until(rdf::Timestamp t) {
  auto delta = t - now();
  if (delta.millis() < 0) return false;
  std::this_thread::sleep_for(std::chrono::milliseconds(delta.millis()));
  return true;
}

OffsetClock::OffsetClock(rdf::Timestamp start) : start_(start), origin_(std::chrono::steady_clock::now()) {}

rdf::Timestamp OffsetClock::now() const {
  auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - origin_).count();
  return start_ + rdf::Duration::from_millis(elapsed);
}

bool OffsetClock::sleep_until(rdf::Timestamp t) {
  auto delta = t - now();
  if (delta.millis() < 0) return false;
  std::this_thread::sleep_for(std::chrono::milliseconds(delta.millis()));
  return true;
}

bool ManualClock::sleep_until(rdf::Timestamp t) {
  auto target = t.unix_millis();
  auto current = ms_.load();
  while (current <= target) {
    if (ms_.compare_exchange_weak(current, target)) return true;
  }
  return false;
}

}  // namespace sc::core
