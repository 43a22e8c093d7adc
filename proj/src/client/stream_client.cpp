#include "sc/client/stream_client.hpp"

#include <charconv>
#include <deque>
#include <numeric>
#include <set>

#include "sc/core/stream_container.hpp"
#include "sc/rdf/turtle.hpp"
#include "sc/rdf/vocab.hpp"

namespace sc::client {

namespace v = rdf::vocab;

namespace {

constexpr std::size_t kDelaySamples = 8;

std::string member_relation_of(const rdf::Graph& container_graph, const std::string& container,
                               const std::string& window) {
  auto window_term = rdf::iri(window);
  for (const auto& node : container_graph.objects(rdf::iri(container), rdf::iri(std::string(v::ldpsc::window)))) {
    auto resources = container_graph.objects(node, rdf::iri(std::string(v::ldp::membership_resource)));
    if (std::find(resources.begin(), resources.end(), window_term) == resources.end()) continue;
    for (const auto& relation : container_graph.objects(node, rdf::iri(std::string(v::ldp::has_member_relation)))) {
      if (relation.is_iri()) return relation.as_iri().value;
    }
  }
  throw FetchError("container <" + container + "> describes no window <" + window + ">");
}

}  // namespace

WindowSnapshot fetch_window(Transport& transport, const std::string& container, const std::string& window) {
  WindowSnapshot snapshot;
  snapshot.window = window;

  auto response = transport.send(get_turtle(container));
  snapshot.requests = 1;
  snapshot.phases = 1;
  if (response.status != 200) {
    throw FetchError("GET <" + container + "> returned " + std::to_string(response.status));
  }
  if (auto evaluated = response.header(std::string(http::kEvaluationTimeHeader))) {
    try {
      snapshot.t_eval = rdf::parse_timestamp(*evaluated);
    } catch (const rdf::LexicalError&) {
      // Left unset; the scheduler fills in the scheduled instant.
    }
  }

  rdf::Graph graph;
  try {
    graph = rdf::parse_turtle(response.body, container);
  } catch (const rdf::TurtleError& e) {
    throw FetchError("container <" + container + "> returned invalid Turtle: " + e.what());
  }
  auto relation = member_relation_of(graph, container, window);

  std::vector<http::Request> requests;
  std::vector<std::string> iris;
  for (const auto& member : graph.objects(rdf::iri(window), rdf::iri(relation))) {
    if (!member.is_iri()) continue;
    iris.push_back(member.as_iri().value);
    requests.push_back(get_turtle(member.as_iri().value));
  }
  if (requests.empty()) return snapshot;

  auto responses = transport.send_all(requests);
  snapshot.requests += requests.size();
  snapshot.phases = 2;
  for (std::size_t i = 0; i < iris.size(); ++i) {
    const auto& r = responses[i];
    if (r.status != 200) {
      snapshot.failures[iris[i]] = r.status == 0 ? r.body : "status " + std::to_string(r.status);
      continue;
    }
    try {
      snapshot.members[iris[i]] = rdf::parse_turtle(r.body, iris[i]);
    } catch (const rdf::TurtleError& e) {
      snapshot.failures[iris[i]] = std::string("invalid Turtle: ") + e.what();
    }
  }
  return snapshot;
}

rdf::Timestamp PollSchedule::at(std::size_t i) const { return t0 + beta * static_cast<std::int64_t>(i); }

PollTrace run_polling(core::Clock& clock, Transport& transport, const PollSchedule& schedule,
                      const std::string& container, const std::string& window, const CycleHandler& handler) {
  if (schedule.beta.millis() <= 0) throw std::invalid_argument("poll period must be positive");
  PollTrace trace;
  std::deque<std::int64_t> samples;
  auto estimate = schedule.delta_allowance;
  for (std::size_t i = 0; !schedule.count || i < *schedule.count; ++i) {
    PollCycle cycle;
    cycle.index = i;
    cycle.scheduled = schedule.at(i);
    cycle.delta_estimate = estimate;
    cycle.overrun = !clock.sleep_until(cycle.scheduled - estimate);
    cycle.sent = clock.now();
    try {
      auto snapshot = fetch_window(transport, container, window);
      if (snapshot.t_eval == rdf::Timestamp{}) {
        snapshot.t_eval = cycle.scheduled;
      } else {
        samples.push_back(std::max<std::int64_t>(0, (snapshot.t_eval - cycle.sent).millis()));
        if (samples.size() > kDelaySamples) samples.pop_front();
        auto total = std::accumulate(samples.begin(), samples.end(), std::int64_t{0});
        estimate = rdf::Duration::from_millis(total / static_cast<std::int64_t>(samples.size()));
      }
      cycle.snapshot = std::move(snapshot);
    } catch (const std::exception& e) {
      cycle.error = e.what();
    }
    if (handler) handler(cycle);
    trace.cycles.push_back(std::move(cycle));
  }
  return trace;
}

StreamOperator parse_stream_operator(std::string_view name) {
  if (name == "rstream") return StreamOperator::rstream;
  if (name == "istream") return StreamOperator::istream;
  if (name == "dstream") return StreamOperator::dstream;
  throw std::invalid_argument("unknown stream operator '" + std::string(name) + "'");
}

std::string_view to_string(StreamOperator op) {
  switch (op) {
    case StreamOperator::rstream: return "rstream";
    case StreamOperator::istream: return "istream";
    case StreamOperator::dstream: return "dstream";
  }
  return "?";
}

ElementGraphs derive(StreamOperator op, const WindowSnapshot* prev, const WindowSnapshot& cur) {
  ElementGraphs out;
  switch (op) {
    case StreamOperator::rstream:
      out = cur.members;
      break;
    case StreamOperator::istream:
      for (const auto& [iri, g] : cur.members) {
        if (!prev || !prev->members.contains(iri)) out.emplace(iri, g);
      }
      break;
    case StreamOperator::dstream:
      if (!prev) break;
      for (const auto& [iri, g] : prev->members) {
        if (!cur.members.contains(iri)) out.emplace(iri, g);
      }
      break;
  }
  return out;
}

rdf::Graph merge(const ElementGraphs& members, MergePolicy) {
  rdf::Graph out;
  std::size_t index = 0;
  for (const auto& [iri, graph] : members) {
    auto prefix = "m" + std::to_string(index++) + "_";
    auto rename = [&](const rdf::Term& t) { return t.is_blank() ? rdf::blank(prefix + t.as_blank().label) : t; };
    for (const auto& t : graph) out.insert(rename(t.subject), t.predicate, rename(t.object));
  }
  return out;
}

rdf::Graph transform(const WindowSnapshot& snapshot, MergePolicy policy, const GraphTransform& fn) {
  auto merged = merge(snapshot.members, policy);
  return fn ? fn(merged) : merged;
}

rdf::Graph identity_transform(const rdf::Graph& g) { return g; }

GraphTransform average_transform(std::string value_property, std::string result_predicate) {
  return [value_property = std::move(value_property),
          result_predicate = std::move(result_predicate)](const rdf::Graph& g) {
    static const std::set<std::string_view> numeric = {v::xsd::integer, v::xsd::decimal, v::xsd::double_,
                                                       "http://www.w3.org/2001/XMLSchema#float"};
    double sum = 0;
    std::size_t count = 0;
    auto property = rdf::iri(value_property);
    for (const auto& t : g) {
      if (t.predicate != property || !t.object.is_literal()) continue;
      const auto& lit = t.object.as_literal();
      if (!numeric.contains(lit.datatype)) continue;
      const char* begin = lit.lexical.data() + (lit.lexical.starts_with('+') ? 1 : 0);
      double value = 0;
      auto [ptr, ec] = std::from_chars(begin, lit.lexical.data() + lit.lexical.size(), value);
      if (ec != std::errc() || ptr != lit.lexical.data() + lit.lexical.size()) continue;
      sum += value;
      ++count;
    }
    rdf::Graph out;
    if (count == 0) return out;
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, sum / static_cast<double>(count));
    out.insert(rdf::blank("average"), rdf::iri(result_predicate),
               rdf::typed_literal(std::string(buf, end), std::string(v::xsd::double_)));
    return out;
  };
}

std::string emit(Transport& transport, const rdf::Graph& result, const std::string& timestamp_relation,
                 rdf::Timestamp t, const std::string& sink) {
  rdf::Graph body = result;
  if (core::timestamp_extract(body, timestamp_relation).empty()) {
    std::set<std::string> labels;
    for (const auto& tr : body) {
      if (tr.subject.is_blank()) labels.insert(tr.subject.as_blank().label);
      if (tr.object.is_blank()) labels.insert(tr.object.as_blank().label);
    }
    std::string label = "emitted";
    for (int i = 0; labels.contains(label); ++i) label = "emitted" + std::to_string(i);
    body.insert(rdf::blank(label), rdf::iri(timestamp_relation), rdf::timestamp_literal(t));
  }
  auto response = transport.send(post_turtle(sink, rdf::serialize_turtle(body, sink)));
  if (response.status != 201) {
    throw FetchError("POST <" + sink + "> returned " + std::to_string(response.status) +
                     (response.body.empty() ? "" : ": " + response.body));
  }
  auto location = response.header("Location");
  if (!location) throw FetchError("POST <" + sink + "> returned no Location");
  return *location;
}

}  // namespace sc::client
