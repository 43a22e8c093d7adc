#include "sc/core/stream_container.hpp"

#include <algorithm>
#include <set>

#include "sc/rdf/vocab.hpp"

namespace sc::core {

namespace v = rdf::vocab;

std::vector<std::string> MemberSet::paths() const {
  std::vector<std::string> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m->path);
  return out;
}

std::string element_iri(std::string_view container_iri, std::string_view path) {
  std::string out(container_iri);
  while (!out.empty() && out.back() == '/') out.pop_back();
  return out + std::string(path);
}

StreamContainerState::StreamContainerState(std::string base, std::optional<rdf::Duration> retention)
    : base_(std::move(base)), retention_(retention) {}

std::string StreamContainerState::next_path() const { return "/" + std::to_string(next_seq_); }

ElementPtr StreamContainerState::find(std::string_view path) const {
  auto it = std::find_if(elements_.begin(), elements_.end(), [&](const ElementPtr& e) { return e->path == path; });
  return it == elements_.end() ? nullptr : *it;
}

ElementPtr StreamContainerState::append(rdf::Graph graph, rdf::Timestamp arrival) {
  auto element = std::make_shared<const StreamElement>(StreamElement{next_path(), std::move(graph), next_seq_, arrival});
  ++next_seq_;
  elements_.push_back(element);
  return element;
}

bool StreamContainerState::remove(std::string_view path) {
  auto it = std::find_if(elements_.begin(), elements_.end(), [&](const ElementPtr& e) { return e->path == path; });
  if (it == elements_.end()) return false;
  elements_.erase(it);
  return true;
}

void StreamContainerState::set_windows(std::vector<WindowSpec> windows) {
  std::set<std::string> resources;
  for (const auto& w : windows) {
    if (!resources.insert(w.membership_resource()).second) {
      throw WindowSpecError("duplicate ldp:membershipResource " + w.membership_resource());
    }
  }
  windows_ = std::move(windows);
}

void StreamContainerState::restore(ElementPtr element) {
  auto pos = std::upper_bound(elements_.begin(), elements_.end(), element->seq,
                              [](std::uint64_t seq, const ElementPtr& e) { return seq < e->seq; });
  next_seq_ = std::max(next_seq_, element->seq + 1);
  elements_.insert(pos, std::move(element));
}

std::set<rdf::Timestamp> timestamp_extract(const rdf::Graph& g, const std::string& pred) {
  std::set<rdf::Timestamp> out;
  auto predicate = rdf::iri(pred);
  for (const auto& t : g) {
    if (t.predicate != predicate || !t.object.is_literal()) continue;
    try {
      out.insert(rdf::parse_timestamp(t.object.as_literal().lexical));
    } catch (const rdf::LexicalError&) {
      // Not a dateTimeStamp; ignored.
    }
  }
  return out;
}

MemberSet eval_logical_window(const StreamContainerState& state, const WindowSpec& window, rdf::Timestamp t_eval) {
  MemberSet out{{}, t_eval, window.membership_resource()};
  // Compare via differences so windows reaching before year 0001 stay valid.
  for (const auto& element : state.elements()) {
    for (auto t : timestamp_extract(element->graph, window.content_timestamp_relation())) {
      if (t <= t_eval && (t_eval - t) < window.alpha()) {
        out.members.push_back(element);
        break;
      }
    }
  }
  return out;
}

MemberSet eval_physical_window(const StreamContainerState& state, const WindowSpec& window, rdf::Timestamp t_eval) {
  struct Candidate {
    rdf::Timestamp newest;
    ElementPtr element;
  };
  std::vector<Candidate> candidates;
  for (const auto& element : state.elements()) {
    auto stamps = timestamp_extract(element->graph, window.content_timestamp_relation());
    if (!stamps.empty()) candidates.push_back({*stamps.rbegin(), element});
  }
  auto take = std::min<std::uint64_t>(window.n(), candidates.size());
  std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(take), candidates.end(),
                    [](const Candidate& a, const Candidate& b) {
                      if (a.newest != b.newest) return a.newest > b.newest;
                      return a.element->seq > b.element->seq;
                    });
  MemberSet out{{}, t_eval, window.membership_resource()};
  for (std::uint64_t i = 0; i < take; ++i) out.members.push_back(candidates[i].element);
  std::sort(out.members.begin(), out.members.end(),
            [](const ElementPtr& a, const ElementPtr& b) { return a->seq < b->seq; });
  return out;
}

MemberSet eval_window(const StreamContainerState& state, const WindowSpec& window, rdf::Timestamp t_eval) {
  return window.is_logical() ? eval_logical_window(state, window, t_eval)
                             : eval_physical_window(state, window, t_eval);
}

rdf::Graph materialize_membership(const StreamContainerState& state, rdf::Timestamp t_eval) {
  rdf::Graph out;
  for (const auto& window : state.windows()) {
    auto subject = rdf::iri(window.membership_resource());
    auto predicate = rdf::iri(window.member_relation());
    for (const auto& member : eval_window(state, window, t_eval).members) {
      out.insert(subject, predicate, rdf::iri(state.iri_of(*member)));
    }
  }
  return out;
}

rdf::Graph container_representation(const StreamContainerState& state, rdf::Timestamp t_eval) {
  rdf::Graph out;
  auto container = rdf::iri(state.base());
  out.insert(container, rdf::iri(std::string(v::rdf::type)), rdf::iri(std::string(v::ldpsc::stream_container)));
  auto contains = rdf::iri(std::string(v::ldp::contains));
  for (const auto& element : state.elements()) out.insert(container, contains, rdf::iri(state.iri_of(*element)));
  std::size_t index = 0;
  for (const auto& window : state.windows()) {
    describe_window(out, container, rdf::blank("w" + std::to_string(index++)), window);
  }
  return rdf::graph_union(out, materialize_membership(state, t_eval));
}

std::vector<WindowSpec> update_windows(StreamContainerState& state, const rdf::Graph& put_body) {
  auto specs = parse_window_specs(put_body, state.base());
  state.set_windows(specs);
  return specs;
}

rdf::Timestamp retention_key(const StreamContainerState& state, const StreamElement& element) {
  std::optional<rdf::Timestamp> newest;
  for (const auto& window : state.windows()) {
    auto stamps = timestamp_extract(element.graph, window.content_timestamp_relation());
    if (!stamps.empty() && (!newest || *stamps.rbegin() > *newest)) newest = *stamps.rbegin();
  }
  return newest.value_or(element.arrival);
}

std::vector<std::string> apply_retention(StreamContainerState& state, rdf::Timestamp now) {
  std::vector<std::string> removed;
  if (!state.retention()) return removed;
  auto retention = *state.retention();
  for (const auto& element : state.elements()) {
    auto key = retention_key(state, *element);
    if (key <= now && (now - key) >= retention) removed.push_back(element->path);
  }
  for (const auto& path : removed) state.remove(path);
  return removed;
}

}  // namespace sc::core
