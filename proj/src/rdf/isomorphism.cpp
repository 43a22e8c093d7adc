#include "sc/rdf/isomorphism.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace sc::rdf {

namespace {

// Blank-node-free description of how a node participates in the graph. Two
// nodes can only correspond if their signatures match.
using Signature = std::multiset<std::string>;

std::string shape(const Term& t, const Term& self) {
  if (t == self) return "SELF";
  if (t.is_blank()) return "_";
  return to_string(t);
}

std::map<Term, Signature> signatures(const Graph& g) {
  std::map<Term, Signature> out;
  for (const auto& t : g) {
    if (t.subject.is_blank()) {
      out[t.subject].insert("s " + shape(t.predicate, t.subject) + " " + shape(t.object, t.subject));
    }
    if (t.object.is_blank() && t.object != t.subject) {
      out[t.object].insert("o " + shape(t.subject, t.object) + " " + shape(t.predicate, t.object));
    }
  }
  return out;
}

Term map_term(const Term& t, const std::map<Term, Term>& mapping) {
  if (!t.is_blank()) return t;
  auto it = mapping.find(t);
  return it == mapping.end() ? t : it->second;
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b) : a_(a), b_(b), sig_a_(signatures(a)), sig_b_(signatures(b)) {
    for (const auto& [node, sig] : sig_a_) order_.push_back(node);
    for (const auto& t : a_) {
      if (t.subject.is_blank() || t.object.is_blank()) blank_triples_.push_back(t);
    }
  }

  bool run() {
    if (a_.size() != b_.size() || sig_a_.size() != sig_b_.size()) return false;
    // Ground triples must match directly.
    for (const auto& t : a_) {
      if (!t.subject.is_blank() && !t.object.is_blank() && !b_.contains(t)) return false;
    }
    return extend(0);
  }

 private:
  bool extend(std::size_t index) {
    if (index == order_.size()) return consistent(true);
    const Term& node = order_[index];
    for (const auto& [candidate, sig] : sig_b_) {
      if (used_.contains(candidate) || sig != sig_a_.at(node)) continue;
      mapping_[node] = candidate;
      used_.insert(candidate);
      if (consistent(false) && extend(index + 1)) return true;
      used_.erase(candidate);
      mapping_.erase(node);
    }
    return false;
  }

  // Every triple whose blank nodes are all mapped must exist in b.
  bool consistent(bool complete) const {
    for (const auto& t : blank_triples_) {
      if (!complete && ((t.subject.is_blank() && !mapping_.contains(t.subject)) ||
                        (t.object.is_blank() && !mapping_.contains(t.object)))) {
        continue;
      }
      if (!b_.contains(Triple{map_term(t.subject, mapping_), t.predicate, map_term(t.object, mapping_)})) {
        return false;
      }
    }
    return true;
  }

  const Graph& a_;
  const Graph& b_;
  std::map<Term, Signature> sig_a_;
  std::map<Term, Signature> sig_b_;
  std::vector<Term> order_;
  std::vector<Triple> blank_triples_;
  std::map<Term, Term> mapping_;
  std::set<Term> used_;
};

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) { return Matcher(a, b).run(); }

}  // namespace sc::rdf
