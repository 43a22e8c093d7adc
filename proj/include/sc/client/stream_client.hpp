#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sc/client/transport.hpp"
#include "sc/core/clock.hpp"
#include "sc/rdf/graph.hpp"
#include "sc/rdf/xsd.hpp"

namespace sc::client {

class FetchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Contents of one window as seen by the client at one evaluation.
struct WindowSnapshot {
  rdf::Timestamp t_eval;  // server evaluation instant when reported, else the scheduled instant
  std::string window;
  std::map<std::string, rdf::Graph> members;
  std::map<std::string, std::string> failures;  // member IRI -> reason
  std::size_t requests = 0;
  std::size_t phases = 0;

  bool complete() const { return failures.empty(); }
};

// One GET on the container, then every member GET concurrently: two
// round-trip phases regardless of the member count (one if the window is
// empty). Membership is read from the container response, never computed.
// Throws FetchError when the container request fails.
WindowSnapshot fetch_window(Transport& transport, const std::string& container, const std::string& window);

struct PollSchedule {
  rdf::Timestamp t0;
  rdf::Duration beta;
  std::optional<std::size_t> count;  // unbounded when empty
  rdf::Duration delta_allowance;     // initial estimate of request delay

  rdf::Timestamp at(std::size_t i) const;
};

struct PollCycle {
  std::size_t index = 0;
  rdf::Timestamp scheduled;  // t_i = t0 + i * beta
  rdf::Timestamp sent;
  rdf::Duration delta_estimate;
  bool overrun = false;  // the request could not be sent at t_i - delta
  std::optional<WindowSnapshot> snapshot;
  std::string error;
};

struct PollTrace {
  std::vector<PollCycle> cycles;
};

using CycleHandler = std::function<void(const PollCycle&)>;

// Fixed-rate polling: cycle i is sent at t_i - delta so that it arrives at
// t_i. delta starts at the schedule's allowance and then follows the mean of
// the last observed request delays. Late cycles still fire and are flagged.
PollTrace run_polling(core::Clock& clock, Transport& transport, const PollSchedule& schedule,
                      const std::string& container, const std::string& window, const CycleHandler& handler = {});

enum class StreamOperator { rstream, istream, dstream };

StreamOperator parse_stream_operator(std::string_view name);
std::string_view to_string(StreamOperator op);

using ElementGraphs = std::map<std::string, rdf::Graph>;

// RSTREAM: all of cur. ISTREAM: cur minus prev. DSTREAM: prev minus cur.
// Elements are compared by IRI.
ElementGraphs derive(StreamOperator op, const WindowSnapshot* prev, const WindowSnapshot& cur);

enum class MergePolicy { union_merge };

using GraphTransform = std::function<rdf::Graph(const rdf::Graph&)>;

// RDF merge of the member graphs with blank nodes standardized apart.
rdf::Graph merge(const ElementGraphs& members, MergePolicy policy = MergePolicy::union_merge);

// Merge, then apply the caller's R2R step.
rdf::Graph transform(const WindowSnapshot& snapshot, MergePolicy policy, const GraphTransform& fn);

rdf::Graph identity_transform(const rdf::Graph& g);

// One triple ([] result_predicate mean) with the mean of all numeric objects
// of `value_property`; empty when there are none.
GraphTransform average_transform(std::string value_property, std::string result_predicate);

// Adds (fresh blank node, timestamp_relation, t) unless the graph already has
// a timestamp under that relation, POSTs it to `sink` and returns the new
// element IRI. Throws FetchError on non-201 responses.
std::string emit(Transport& transport, const rdf::Graph& result, const std::string& timestamp_relation,
                 rdf::Timestamp t, const std::string& sink);

}  // namespace sc::client
