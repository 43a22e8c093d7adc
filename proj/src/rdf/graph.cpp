#include "sc/rdf/graph.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace sc::rdf {

Graph::Graph(std::initializer_list<Triple> triples) {
  for (const auto& t : triples) insert(t);
}

bool Graph::insert(Triple triple) {
  if (triple.subject.is_literal()) {
    throw std::invalid_argument("triple subject must be an IRI or blank node: " +
                                to_string(triple.subject));
  }
  if (!triple.predicate.is_iri()) {
    throw std::invalid_argument("triple predicate must be an IRI: " + to_string(triple.predicate));
  }
  return triples_.insert(std::move(triple)).second;
}

std::vector<Triple> Graph::match(const std::optional<Term>& subject,
                                 const std::optional<Term>& predicate,
                                 const std::optional<Term>& object) const {
  std::vector<Triple> out;
  auto first = triples_.begin();
  auto last = triples_.end();
  // Triples are ordered by subject first, so a bound subject narrows the scan.
  // Iri{""} is the smallest term.
  if (subject) {
    first = triples_.lower_bound(Triple{*subject, Term(), Term()});
    last = std::find_if(first, last, [&](const Triple& t) { return t.subject != *subject; });
  }
  for (auto it = first; it != last; ++it) {
    if (predicate && it->predicate != *predicate) continue;
    if (object && it->object != *object) continue;
    out.push_back(*it);
  }
  return out;
}

std::vector<Term> Graph::objects(const Term& subject, const Term& predicate) const {
  std::vector<Term> out;
  for (auto& t : match(subject, predicate, std::nullopt)) out.push_back(std::move(t.object));
  return out;
}

Graph graph_union(const Graph& a, const Graph& b) {
  Graph out = a;
  for (const auto& t : b) out.insert(t);
  return out;
}

Graph graph_difference(const Graph& a, const Graph& b) {
  Graph out;
  for (const auto& t : a) {
    if (!b.contains(t)) out.insert(t);
  }
  return out;
}

Graph graph_intersection(const Graph& a, const Graph& b) {
  Graph out;
  for (const auto& t : a) {
    if (b.contains(t)) out.insert(t);
  }
  return out;
}

}  // namespace sc::rdf
