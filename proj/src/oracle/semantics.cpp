#include "sc/oracle/semantics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sc/rdf/isomorphism.hpp"

namespace sc::oracle {

namespace {

// Deliberately a separate scan from the server's timestamp extraction.
std::vector<rdf::Timestamp> stamps_of(const rdf::Graph& g, const std::string& pred) {
  std::vector<rdf::Timestamp> out;
  for (const auto& t : g) {
    if (!t.predicate.is_iri() || t.predicate.as_iri().value != pred || !t.object.is_literal()) continue;
    try {
      auto ts = rdf::parse_timestamp(t.object.as_literal().lexical);
      if (std::find(out.begin(), out.end(), ts) == out.end()) out.push_back(ts);
    } catch (const rdf::LexicalError&) {
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string render_set(const std::set<std::size_t>& members, const std::map<std::size_t, std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for (auto m : members) {
    if (!first) out += ", ";
    first = false;
    auto it = labels.find(m);
    out += it == labels.end() ? "#" + std::to_string(m) : it->second;
  }
  return out + "}";
}

}  // namespace

TupleStream to_tuple_stream(std::span<const rdf::Graph> elements, const std::string& pred) {
  TupleStream out;
  out.graphs.assign(elements.begin(), elements.end());
  for (std::size_t i = 0; i < out.graphs.size(); ++i) {
    for (auto t : stamps_of(out.graphs[i], pred)) out.pairs.push_back({i, t});
  }
  return out;
}

InstantWindow instant_window(const TupleStream& stream, rdf::Timestamp open, rdf::Timestamp close) {
  if (open > close) throw std::invalid_argument("instant window opens after it closes");
  InstantWindow w{open, close, {}};
  for (const auto& pair : stream.pairs) {
    if (open < pair.t && pair.t <= close) w.members.insert(pair.graph);
  }
  return w;
}

std::vector<InstantWindow> sliding_window_sequence(const TupleStream& stream, const SlidingWindowSpec& spec,
                                                   std::size_t count) {
  if (spec.alpha.millis() <= 0 || spec.beta.millis() <= 0) {
    throw std::invalid_argument("window size and step must be positive");
  }
  std::vector<InstantWindow> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto close = spec.t0 + spec.beta * static_cast<std::int64_t>(i);
    out.push_back(instant_window(stream, close - spec.alpha, close));
  }
  return out;
}

EquivalenceReport check_equivalence(const client::PollTrace& trace, const SlidingWindowSpec& spec,
                                    const TupleStream& stream,
                                    const std::map<std::string, std::size_t>& element_index, std::size_t cycles) {
  EquivalenceReport report;
  report.expected_cycles = cycles;
  for (const auto& [iri, index] : element_index) report.labels[index] = iri;
  auto expected = sliding_window_sequence(stream, spec, cycles);

  auto diverge = [&](std::size_t i, std::string why) {
    if (!report.first_divergence) {
      report.first_divergence = i;
      report.detail = std::move(why);
    }
  };

  auto n = std::min(cycles, trace.cycles.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& cycle = trace.cycles[i];
    CycleComparison cmp;
    cmp.index = i;
    cmp.expected_eval = expected[i].close;
    cmp.expected = expected[i].members;
    if (!cycle.snapshot) {
      report.cycles.push_back(cmp);
      diverge(i, "cycle " + std::to_string(i) + " failed: " + cycle.error);
      continue;
    }
    const auto& snapshot = *cycle.snapshot;
    cmp.observed_eval = snapshot.t_eval;
    for (const auto& [iri, graph] : snapshot.members) {
      auto it = element_index.find(iri);
      if (it == element_index.end()) {
        cmp.unknown.push_back(iri);
        continue;
      }
      cmp.observed.insert(it->second);
      if (it->second >= stream.graphs.size() || !rdf::isomorphic(graph, stream.graphs[it->second])) {
        cmp.content_mismatch = true;
      }
    }
    cmp.ok = cmp.expected_eval == cmp.observed_eval && cmp.expected == cmp.observed && cmp.unknown.empty() &&
             !cmp.content_mismatch && snapshot.complete();
    if (!cmp.ok) {
      std::string why = "cycle " + std::to_string(i) + ": ";
      if (cmp.expected_eval != cmp.observed_eval) {
        why += "evaluated at " + rdf::format_timestamp(cmp.observed_eval) + " instead of " +
               rdf::format_timestamp(cmp.expected_eval) + "; ";
      }
      if (cmp.expected != cmp.observed) {
        why += "members " + render_set(cmp.observed, report.labels) + " but oracle window " +
               render_set(cmp.expected, report.labels) + "; ";
      }
      if (!cmp.unknown.empty()) why += std::to_string(cmp.unknown.size()) + " member(s) not in the stream; ";
      if (cmp.content_mismatch) why += "fetched content differs from the stream graph; ";
      if (!snapshot.complete()) why += std::to_string(snapshot.failures.size()) + " member fetch(es) failed; ";
      why.resize(why.size() - 2);
      diverge(i, why);
    }
    report.cycles.push_back(std::move(cmp));
  }
  if (trace.cycles.size() != cycles) {
    diverge(n, "trace has " + std::to_string(trace.cycles.size()) + " cycles, oracle expects " +
                   std::to_string(cycles));
  }
  report.pass = !report.first_divergence;
  return report;
}

std::string EquivalenceReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : cycles) {
    out << "cycle " << c.index << " t_eval=" << rdf::format_timestamp(c.expected_eval) << " oracle "
        << render_set(c.expected, labels) << " client " << render_set(c.observed, labels)
        << (c.ok ? " ok" : " MISMATCH") << "\n";
  }
  if (pass) {
    out << "PASS: " << expected_cycles << " cycle(s) match the sliding-window sequence\n";
  } else {
    out << "FAIL: " << detail << "\n";
  }
  return out.str();
}

}  // namespace sc::oracle
