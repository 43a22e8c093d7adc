#include "sc/oracle/simulation.hpp"

#include <algorithm>

#include "sc/http/message.hpp"
#include "sc/rdf/turtle.hpp"

namespace sc::oracle {

bool VirtualClock::sleep_until(rdf::Timestamp t) {
  if (t < now_) return false;
  while (!events_.empty() && events_.top().at <= t) {
    // priority_queue::top is const; the action is copied out before popping.
    auto event = events_.top();
    events_.pop();
    now_ = std::max(now_, event.at);
    event.action();
  }
  now_ = t;
  return true;
}

void VirtualClock::schedule(rdf::Timestamp at, std::function<void()> action) {
  events_.push(Event{at, next_order_++, std::move(action)});
}

SimulatedTransport::SimulatedTransport(VirtualClock& clock, rdf::Duration latency)
    : clock_(clock), latency_(latency) {
  if (latency.millis() < 0) throw std::invalid_argument("latency must not be negative");
}

void SimulatedTransport::route(const std::string& origin, std::shared_ptr<server::ContainerService> service) {
  services_[origin] = std::move(service);
}

http::Response SimulatedTransport::deliver(const http::Request& request, rdf::Timestamp sent, std::size_t batch) {
  auto [origin, path] = http::split_origin(request.target);
  auto it = services_.find(origin);
  if (it == services_.end()) throw client::TransportError("no route to " + request.target);
  http::Request local = request;
  local.target = path;
  auto response = it->second->handle(local);
  log_.push_back(Exchange{request.method, request.target, sent, clock_.now(), response.status, batch});
  return response;
}

http::Response SimulatedTransport::send(const http::Request& request) {
  auto sent = clock_.now();
  clock_.sleep_until(sent + latency_);
  return deliver(request, sent, batches_++);
}

std::vector<http::Response> SimulatedTransport::send_all(const std::vector<http::Request>& requests) {
  std::vector<http::Response> out;
  if (requests.empty()) return out;
  auto sent = clock_.now();
  auto batch = batches_++;
  clock_.sleep_until(sent + latency_);
  out.reserve(requests.size());
  for (const auto& request : requests) {
    try {
      out.push_back(deliver(request, sent, batch));
    } catch (const client::TransportError& e) {
      http::Response failed;
      failed.status = 0;
      failed.body = e.what();
      out.push_back(std::move(failed));
    }
  }
  return out;
}

SimulatedEnvironment::SimulatedEnvironment(rdf::Duration latency, rdf::Timestamp clock_start)
    : clock_(std::make_shared<VirtualClock>(clock_start)), transport_(*clock_, latency) {}

std::shared_ptr<server::ContainerService> SimulatedEnvironment::add_service(const std::string& origin) {
  auto service = std::make_shared<server::ContainerService>(origin, clock_);
  services_[origin] = service;
  transport_.route(origin, service);
  return service;
}

void SimulatedEnvironment::post_at(rdf::Timestamp at, const std::string& container, rdf::Graph graph) {
  auto slot = locations_.size();
  locations_.emplace_back();
  clock_->schedule(at, [this, slot, container, graph = std::move(graph)] {
    auto [origin, path] = http::split_origin(container);
    auto it = services_.find(origin);
    if (it == services_.end()) return;
    // Serialize against the container IRI; the service re-parses with the
    // new element as base, and absolute IRIs survive either way.
    http::Request request;
    request.method = "POST";
    request.target = path;
    request.headers.emplace("Content-Type", std::string(http::kTurtle));
    request.body = rdf::serialize_turtle(graph, "", rdf::default_prefixes());
    auto response = it->second->handle(request);
    if (response.status == 201) locations_[slot] = response.header("Location").value_or("");
  });
}

std::unique_ptr<SimulatedEnvironment> simulated_environment(rdf::Duration latency, rdf::Timestamp clock_start) {
  return std::make_unique<SimulatedEnvironment>(latency, clock_start);
}

}  // namespace sc::oracle
