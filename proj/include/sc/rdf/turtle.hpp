#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sc/rdf/graph.hpp"

namespace sc::rdf {

// Raised for malformed Turtle input. Line and column are 1-based.
class TurtleError : public std::runtime_error {
 public:
  TurtleError(std::string message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// Parses the Turtle subset used by Stream Containers: @prefix/@base (and the
// SPARQL-style PREFIX/BASE), relative IRIs, `a`, predicate and object lists,
// blank node labels and property lists, string/numeric/boolean literals with
// datatypes or language tags. Collections are rejected.
//
// Blank node labels are scoped to one call; the returned graph uses labels
// b0, b1, ... in order of first appearance.
Graph parse_turtle(std::string_view text, std::string_view base);

using PrefixMap = std::map<std::string, std::string>;

// rdf, xsd, ldp, ldpsc, sosa and ex.
const PrefixMap& default_prefixes();

// Deterministic Turtle rendering. Only prefixes that are used get declared.
// IRIs sharing the base's origin are written relative to `base`; blank nodes
// referenced exactly once are written inline as [ ... ].
std::string serialize_turtle(const Graph& graph, std::string_view base,
                             const PrefixMap& prefixes = default_prefixes());

}  // namespace sc::rdf
