#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "sc/rdf/term.hpp"

namespace sc::rdf {

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
  bool operator==(const Triple&) const = default;
};

// A finite set of triples. Inserting a triple that is already present is a
// no-op. Subjects must be IRIs or blank nodes and predicates IRIs; violating
// that throws std::invalid_argument.
class Graph {
 public:
  using const_iterator = std::set<Triple>::const_iterator;

  Graph() = default;
  Graph(std::initializer_list<Triple> triples);

  bool insert(Triple triple);
  bool insert(Term subject, Term predicate, Term object) {
    return insert(Triple{std::move(subject), std::move(predicate), std::move(object)});
  }
  bool erase(const Triple& triple) { return triples_.erase(triple) > 0; }
  bool contains(const Triple& triple) const { return triples_.contains(triple); }

  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  const_iterator begin() const { return triples_.begin(); }
  const_iterator end() const { return triples_.end(); }

  // Triples matching the pattern; an unset position matches anything.
  std::vector<Triple> match(const std::optional<Term>& subject,
                            const std::optional<Term>& predicate,
                            const std::optional<Term>& object) const;
  std::vector<Term> objects(const Term& subject, const Term& predicate) const;

  bool operator==(const Graph&) const = default;

 private:
  std::set<Triple> triples_;
};

Graph graph_union(const Graph& a, const Graph& b);
Graph graph_difference(const Graph& a, const Graph& b);
Graph graph_intersection(const Graph& a, const Graph& b);

}  // namespace sc::rdf
