#include "sc/oracle/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include "sc/core/window_spec.hpp"
#include "sc/oracle/simulation.hpp"
#include "sc/rdf/turtle.hpp"
#include "sc/rdf/vocab.hpp"

namespace sc::oracle {

namespace v = rdf::vocab;

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string file_base(const std::filesystem::path& path) {
  return "file://" + std::filesystem::absolute(path).lexically_normal().generic_string();
}

constexpr std::string_view kOrigin = "http://sim.example";
constexpr std::string_view kContainerPath = "/stream";

}  // namespace

Scenario load_scenario(const std::filesystem::path& path) {
  return parse_scenario(read_file(path), path.parent_path());
}

Scenario parse_scenario(std::string_view text, const std::filesystem::path& directory) {
  Scenario scenario;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto where = "line " + std::to_string(line_no) + ": ";
    auto line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    try {
      if (auto eq = line.find('='); eq != std::string::npos) {
        auto key = trim(std::string_view(line).substr(0, eq));
        auto value = trim(std::string_view(line).substr(eq + 1));
        if (key == "alpha") {
          scenario.alpha = rdf::parse_duration(value);
        } else if (key == "beta") {
          scenario.beta = rdf::parse_duration(value);
        } else if (key == "t0") {
          scenario.t0 = rdf::parse_timestamp(value);
        } else if (key == "latency") {
          scenario.latency = rdf::parse_duration(value);
        } else if (key == "predicate") {
          scenario.predicate = value;
        } else if (key == "cycles") {
          std::size_t n = 0;
          auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
          if (ec != std::errc() || ptr != value.data() + value.size()) throw ScenarioError("bad cycle count");
          scenario.cycles = n;
        } else {
          throw ScenarioError("unknown key '" + key + "'");
        }
        continue;
      }
      auto space = line.find_first_of(" \t");
      if (space == std::string::npos) throw ScenarioError("expected '<offset> <file>'");
      auto offset = rdf::parse_duration(line.substr(0, space));
      auto file = directory / trim(std::string_view(line).substr(space));
      auto graph = rdf::parse_turtle(read_file(file), file_base(file));
      scenario.elements.push_back({offset, std::move(graph), file.string()});
    } catch (const ScenarioError& e) {
      throw ScenarioError(where + e.what());
    } catch (const std::exception& e) {
      throw ScenarioError(where + e.what());
    }
  }
  return scenario;
}

Scenario random_scenario(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };

  Scenario s;
  s.predicate = std::string(v::sosa::result_time);
  auto alpha = rdf::Duration::from_seconds(uniform(1, 600));
  auto beta = rdf::Duration::from_seconds(uniform(1, 600));
  auto cycles = static_cast<std::size_t>(uniform(1, 20));
  auto t0 = rdf::parse_timestamp("2021-07-20T10:00:00Z") + rdf::Duration::from_seconds(uniform(0, 86400));
  auto latency = rdf::Duration::from_millis(uniform(0, std::min<std::int64_t>(beta.millis() / 2 - 1, 500)));
  s.alpha = alpha;
  s.beta = beta;
  s.cycles = cycles;
  s.t0 = t0;
  s.latency = latency;

  auto first = t0 - alpha - beta;
  auto last = t0 + beta * static_cast<std::int64_t>(cycles);
  auto span = (last - first).millis();
  auto random_instant = [&] {
    if (uniform(0, 9) < 3) {
      // On a window boundary, or one millisecond either side of it.
      auto close = t0 + beta * uniform(0, static_cast<std::int64_t>(cycles) - 1);
      auto edge = uniform(0, 1) ? close : close - alpha;
      return edge + rdf::Duration::from_millis(uniform(-1, 1));
    }
    return first + rdf::Duration::from_millis(uniform(0, span));
  };

  auto count = uniform(0, 100);
  for (std::int64_t i = 0; i < count; ++i) {
    auto roll = uniform(0, 9);
    std::size_t stamps = roll == 0 ? 0 : roll < 8 ? 1 : static_cast<std::size_t>(uniform(2, 3));
    std::vector<rdf::Timestamp> times;
    for (std::size_t k = 0; k < stamps; ++k) times.push_back(random_instant());

    rdf::Graph g;
    auto subject = uniform(0, 1) ? rdf::blank("obs") : rdf::iri(std::string(v::ex::ns) + "obs" + std::to_string(i));
    g.insert(subject, rdf::iri(std::string(v::rdf::type)), rdf::iri(std::string(v::sosa::observation)));
    g.insert(subject, rdf::iri(std::string(v::sosa::has_simple_result)),
             rdf::typed_literal(std::to_string(uniform(-50, 150)), std::string(v::xsd::integer)));
    for (auto t : times) g.insert(subject, rdf::iri(s.predicate), rdf::timestamp_literal(t));

    // Posted when its earliest timestamp is reached, so it is present at
    // every evaluation whose window could contain it.
    auto post = times.empty() ? random_instant() : *std::min_element(times.begin(), times.end());
    s.elements.push_back({post - t0, std::move(g), "random#" + std::to_string(i)});
  }
  return s;
}

VerifyParameters resolve_parameters(const Scenario& scenario, const VerifyOverrides& overrides) {
  VerifyParameters p;
  p.alpha = overrides.alpha.value_or(scenario.alpha.value_or(rdf::Duration::from_seconds(60)));
  p.beta = overrides.beta.value_or(scenario.beta.value_or(rdf::Duration::from_seconds(10)));
  p.t0 = overrides.t0.value_or(scenario.t0.value_or(rdf::parse_timestamp("2021-07-20T10:00:00Z")));
  p.cycles = overrides.cycles.value_or(scenario.cycles.value_or(10));
  p.latency = overrides.latency.value_or(scenario.latency.value_or(rdf::Duration::from_millis(50)));
  p.predicate = overrides.predicate.value_or(
      scenario.predicate.empty() ? std::string(v::sosa::result_time) : scenario.predicate);
  return p;
}

VerifyResult run_verification(const Scenario& scenario, const VerifyParameters& parameters) {
  if (parameters.alpha.millis() <= 0 || parameters.beta.millis() <= 0) {
    throw ScenarioError("alpha and beta must be positive");
  }
  if (parameters.latency.millis() < 0) throw ScenarioError("latency must not be negative");

  auto start = parameters.t0 - parameters.latency;
  for (const auto& e : scenario.elements) start = std::min(start, parameters.t0 + e.offset);
  start = start - rdf::Duration::from_millis(1);

  SimulatedEnvironment env(parameters.latency, start);
  auto service = env.add_service(std::string(kOrigin));
  service->add_container(std::string(kContainerPath));
  auto container = service->container_iri(kContainerPath);
  auto window = container + "#w";

  rdf::Graph body;
  core::describe_window(body, rdf::iri(container), rdf::blank("w"),
                        core::WindowSpec::logical(std::string(v::ex::ns) + "inWindow", window, parameters.predicate,
                                                  parameters.alpha));
  http::Request put;
  put.method = "PUT";
  put.target = std::string(kContainerPath);
  put.headers.emplace("Content-Type", std::string(http::kTurtle));
  put.body = rdf::serialize_turtle(body, container, rdf::default_prefixes());
  auto put_response = service->handle(put);
  if (put_response.status != 204) throw ScenarioError("window setup failed: " + put_response.body);

  for (const auto& e : scenario.elements) env.post_at(parameters.t0 + e.offset, container, e.graph);

  client::PollSchedule schedule{parameters.t0, parameters.beta, parameters.cycles, parameters.latency};
  VerifyResult result;
  result.parameters = parameters;
  result.trace = client::run_polling(env.clock(), env.transport(), schedule, container, window);
  result.locations = env.locations();

  std::vector<rdf::Graph> graphs;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < scenario.elements.size(); ++i) {
    graphs.push_back(scenario.elements[i].graph);
    // Elements still queued after the last poll never got a location.
    if (!result.locations[i].empty()) index[result.locations[i]] = i;
  }
  auto stream = to_tuple_stream(graphs, parameters.predicate);
  result.report = check_equivalence(result.trace, {parameters.alpha, parameters.beta, parameters.t0}, stream, index,
                                    parameters.cycles);
  return result;
}

}  // namespace sc::oracle
