#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sc/client/stream_client.hpp"
#include "sc/oracle/semantics.hpp"
#include "sc/rdf/graph.hpp"
#include "sc/rdf/xsd.hpp"

namespace sc::oracle {

struct ScenarioElement {
  rdf::Duration offset;  // POST time relative to t0
  rdf::Graph graph;
  std::string source;
};

// A stream plus the parameters of one verification run. Unset parameters
// fall back to command-line values or defaults.
struct Scenario {
  std::optional<rdf::Duration> alpha;
  std::optional<rdf::Duration> beta;
  std::optional<rdf::Timestamp> t0;
  std::optional<std::size_t> cycles;
  std::optional<rdf::Duration> latency;
  std::string predicate;
  std::vector<ScenarioElement> elements;
};

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Plain text, one entry per line; '#' starts a comment.
//   key = value        alpha, beta, t0, cycles, latency, predicate
//   <offset> <file>    xsd:duration relative to t0, Turtle file relative to
//                      the scenario file
Scenario load_scenario(const std::filesystem::path& path);
Scenario parse_scenario(std::string_view text, const std::filesystem::path& directory);

// Seeded generator: up to 100 elements, alpha and beta in [PT1S, PT10M], up
// to 20 cycles, latency below beta/2. Elements land on window boundaries,
// carry several or no timestamps, and arrive between polls.
Scenario random_scenario(std::uint64_t seed);

struct VerifyParameters {
  rdf::Duration alpha;
  rdf::Duration beta;
  rdf::Timestamp t0;
  std::size_t cycles = 0;
  rdf::Duration latency;
  std::string predicate;
};

struct VerifyOverrides {
  std::optional<rdf::Duration> alpha;
  std::optional<rdf::Duration> beta;
  std::optional<rdf::Timestamp> t0;
  std::optional<std::size_t> cycles;
  std::optional<rdf::Duration> latency;
  std::optional<std::string> predicate;
};

// Overrides win over scenario values, which win over the defaults
// (alpha PT1M, beta PT10S, t0 2021-07-20T10:00:00Z, 10 cycles, latency
// PT0.05S, sosa:resultTime).
VerifyParameters resolve_parameters(const Scenario& scenario, const VerifyOverrides& overrides = {});

struct VerifyResult {
  VerifyParameters parameters;
  client::PollTrace trace;
  std::vector<std::string> locations;
  EquivalenceReport report;
};

// Stands up an in-process Stream Container on a simulated clock and
// transport, replays the scenario's POSTs, polls with a client scheduled at
// t0 + i*beta and checks the trace against the oracle.
VerifyResult run_verification(const Scenario& scenario, const VerifyParameters& parameters);

}  // namespace sc::oracle
