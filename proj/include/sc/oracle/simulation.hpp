#pragma once

#include <functional>
#include <map>
#include <memory>
#include <queue>
#include <string>
#include <vector>

#include "sc/client/transport.hpp"
#include "sc/core/clock.hpp"
#include "sc/server/container_service.hpp"

namespace sc::oracle {

// Clock driven by a single controller. Advancing it runs the events
// scheduled up to the new instant, in time order (ties in scheduling order).
class VirtualClock final : public core::Clock {
 public:
  explicit VirtualClock(rdf::Timestamp start) : now_(start) {}

  rdf::Timestamp now() const override { return now_; }
  bool sleep_until(rdf::Timestamp t) override;

  void schedule(rdf::Timestamp at, std::function<void()> action);
  std::size_t pending() const { return events_.size(); }

 private:
  struct Event {
    rdf::Timestamp at;
    std::uint64_t order;
    std::function<void()> action;
    bool operator>(const Event& other) const {
      return at != other.at ? at > other.at : order > other.order;
    }
  };

  rdf::Timestamp now_;
  std::uint64_t next_order_ = 0;
  std::priority_queue<Event, std::vector<Event>, std::greater<>> events_;
};

struct Exchange {
  std::string method;
  std::string target;
  rdf::Timestamp sent;
  rdf::Timestamp arrived;
  int status = 0;
  std::size_t batch = 0;  // requests sharing a batch were issued together
};

// In-process transport: every request reaches its service exactly `latency`
// after it is sent, and the response is back at that same instant. Requests
// issued through send_all travel concurrently.
class SimulatedTransport final : public client::Transport {
 public:
  SimulatedTransport(VirtualClock& clock, rdf::Duration latency);

  void route(const std::string& origin, std::shared_ptr<server::ContainerService> service);

  http::Response send(const http::Request& request) override;
  std::vector<http::Response> send_all(const std::vector<http::Request>& requests) override;

  const std::vector<Exchange>& log() const { return log_; }
  rdf::Duration latency() const { return latency_; }

 private:
  http::Response deliver(const http::Request& request, rdf::Timestamp sent, std::size_t batch);

  VirtualClock& clock_;
  rdf::Duration latency_;
  std::map<std::string, std::shared_ptr<server::ContainerService>> services_;
  std::vector<Exchange> log_;
  std::size_t batches_ = 0;
};

// Deterministic NOW() and request delay for end-to-end scenarios.
class SimulatedEnvironment {
 public:
  SimulatedEnvironment(rdf::Duration latency, rdf::Timestamp clock_start);

  VirtualClock& clock() { return *clock_; }
  SimulatedTransport& transport() { return transport_; }

  // A Stream Container service reachable at `origin`, sharing the virtual clock.
  std::shared_ptr<server::ContainerService> add_service(const std::string& origin);

  // POSTs `graph` to `container` when the clock reaches `at`, bypassing the
  // transport delay so the element arrives exactly at `at`. The resulting
  // Location (or empty on failure) is appended to locations().
  void post_at(rdf::Timestamp at, const std::string& container, rdf::Graph graph);
  const std::vector<std::string>& locations() const { return locations_; }

 private:
  std::shared_ptr<VirtualClock> clock_;
  SimulatedTransport transport_;
  std::map<std::string, std::shared_ptr<server::ContainerService>> services_;
  std::vector<std::string> locations_;
};

std::unique_ptr<SimulatedEnvironment> simulated_environment(rdf::Duration latency, rdf::Timestamp clock_start);

}  // namespace sc::oracle
