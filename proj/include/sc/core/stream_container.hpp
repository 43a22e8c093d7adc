#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sc/core/window_spec.hpp"
#include "sc/rdf/graph.hpp"
#include "sc/rdf/xsd.hpp"

namespace sc::core {

// One graph of the stream. Immutable once appended.
struct StreamElement {
  std::string path;  // "/<seq>", relative to the container IRI
  rdf::Graph graph;
  std::uint64_t seq = 0;
  rdf::Timestamp arrival;
};

using ElementPtr = std::shared_ptr<const StreamElement>;

struct MemberSet {
  std::vector<ElementPtr> members;  // ordered by seq
  rdf::Timestamp t_eval;
  std::string window;  // membership resource IRI

  std::vector<std::string> paths() const;
};

// Element IRIs live under the container: <container>/<seq>.
std::string element_iri(std::string_view container_iri, std::string_view path);

// Server-side state of one Stream Container. Not synchronized; callers
// serialize writers.
class StreamContainerState {
 public:
  explicit StreamContainerState(std::string base, std::optional<rdf::Duration> retention = std::nullopt);

  const std::string& base() const { return base_; }
  const std::vector<ElementPtr>& elements() const { return elements_; }
  const std::vector<WindowSpec>& windows() const { return windows_; }
  const std::optional<rdf::Duration>& retention() const { return retention_; }
  std::uint64_t next_seq() const { return next_seq_; }

  // Path and IRI the next append will receive.
  std::string next_path() const;
  std::string iri_of(const StreamElement& element) const { return element_iri(base_, element.path); }

  ElementPtr find(std::string_view path) const;

  // The only operation that grows the stream. Paths are never reused.
  ElementPtr append(rdf::Graph graph, rdf::Timestamp arrival);
  bool remove(std::string_view path);

  // Throws WindowSpecError on duplicate membership resources.
  void set_windows(std::vector<WindowSpec> windows);
  void set_retention(std::optional<rdf::Duration> retention) { retention_ = retention; }

  // Restores an element with a given seq, used when loading dumps.
  void restore(ElementPtr element);

 private:
  std::string base_;
  std::vector<ElementPtr> elements_;
  std::vector<WindowSpec> windows_;
  std::optional<rdf::Duration> retention_;
  std::uint64_t next_seq_ = 0;
};

// All objects of (s, pred, o) in `g` that parse as xsd:dateTimeStamp. Objects
// that do not parse are skipped. The empty set is the "undefined" case.
std::set<rdf::Timestamp> timestamp_extract(const rdf::Graph& g, const std::string& pred);

// Elements with some extracted timestamp in (t_eval - alpha, t_eval].
MemberSet eval_logical_window(const StreamContainerState& state, const WindowSpec& window, rdf::Timestamp t_eval);

// The n timestamped elements with the greatest maximum timestamp; ties go to
// the higher seq.
MemberSet eval_physical_window(const StreamContainerState& state, const WindowSpec& window, rdf::Timestamp t_eval);

MemberSet eval_window(const StreamContainerState& state, const WindowSpec& window, rdf::Timestamp t_eval);

// (membership_resource, member_relation, element IRI) for every member of
// every window; nothing else.
rdf::Graph materialize_membership(const StreamContainerState& state, rdf::Timestamp t_eval);

// Type triple, containment triples, window descriptions and membership.
rdf::Graph container_representation(const StreamContainerState& state, rdf::Timestamp t_eval);

// Replaces the window set with the descriptions found in `put_body`.
// Containment and membership triples in the body are ignored.
std::vector<WindowSpec> update_windows(StreamContainerState& state, const rdf::Graph& put_body);

// Drops elements whose newest timestamp (over all windows' timestamp
// relations, else arrival time) is at or before now - retention. Returns the
// removed paths; no-op without a retention policy.
std::vector<std::string> apply_retention(StreamContainerState& state, rdf::Timestamp now);

// Newest timestamp used by retention.
rdf::Timestamp retention_key(const StreamContainerState& state, const StreamElement& element);

}  // namespace sc::core
