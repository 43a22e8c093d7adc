#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sc/client/stream_client.hpp"
#include "sc/rdf/graph.hpp"
#include "sc/rdf/xsd.hpp"

// Reference semantics of logical windows over an RDF stream, independent of
// the server and client code paths.
namespace sc::oracle {

// (graph, timestamp) pairs; `graph` indexes into `graphs`.
struct TimedGraph {
  std::size_t graph = 0;
  rdf::Timestamp t;

  auto operator<=>(const TimedGraph&) const = default;
};

struct TupleStream {
  std::vector<rdf::Graph> graphs;
  std::vector<TimedGraph> pairs;
};

// One pair per extracted timestamp: untimestamped graphs contribute nothing,
// graphs with k timestamps contribute k pairs.
TupleStream to_tuple_stream(std::span<const rdf::Graph> elements, const std::string& pred);

// W_{o,c}: graphs with a timestamp in (open, close].
struct InstantWindow {
  rdf::Timestamp open;
  rdf::Timestamp close;
  std::set<std::size_t> members;
};

// Throws std::invalid_argument when open > close.
InstantWindow instant_window(const TupleStream& stream, rdf::Timestamp open, rdf::Timestamp close);

struct SlidingWindowSpec {
  rdf::Duration alpha;
  rdf::Duration beta;
  rdf::Timestamp t0;
};

// Windows i = 0..count-1 with close_i = t0 + i*beta and open_i = close_i - alpha.
std::vector<InstantWindow> sliding_window_sequence(const TupleStream& stream, const SlidingWindowSpec& spec,
                                                   std::size_t count);

struct CycleComparison {
  std::size_t index = 0;
  rdf::Timestamp expected_eval;
  rdf::Timestamp observed_eval;
  std::set<std::size_t> expected;
  std::set<std::size_t> observed;
  std::vector<std::string> unknown;  // member IRIs that map to no stream graph
  bool content_mismatch = false;
  bool ok = false;
};

struct EquivalenceReport {
  bool pass = false;
  std::size_t expected_cycles = 0;
  std::vector<CycleComparison> cycles;
  std::optional<std::size_t> first_divergence;
  std::string detail;
  std::map<std::size_t, std::string> labels;  // stream index -> element IRI

  // Human-readable, deterministic rendering.
  std::string to_text() const;
};

// Compares a polling trace with the first `cycles` windows of the oracle's
// sliding-window sequence. Member IRIs are mapped to stream graphs through
// `element_index`; fetched graphs must also be isomorphic to the graph they
// map to, and each cycle must have been evaluated exactly at its close instant.
EquivalenceReport check_equivalence(const client::PollTrace& trace, const SlidingWindowSpec& spec,
                                    const TupleStream& stream,
                                    const std::map<std::string, std::size_t>& element_index, std::size_t cycles);

}  // namespace sc::oracle
