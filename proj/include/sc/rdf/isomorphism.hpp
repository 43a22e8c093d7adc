#pragma once

#include "sc/rdf/graph.hpp"

namespace sc::rdf {

// True when a bijection between the blank nodes of `a` and `b` maps `a` onto
// `b`. Exhaustive backtracking pruned by per-node signatures; intended for
// graphs with a handful of blank nodes.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace sc::rdf
