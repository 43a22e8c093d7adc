#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "sc/rdf/iri.hpp"
#include "sc/rdf/turtle.hpp"
#include "sc/rdf/vocab.hpp"

namespace sc::rdf {

const PrefixMap& default_prefixes() {
  static const PrefixMap prefixes = {
      {"ex", std::string(vocab::ex::ns)},       {"ldp", std::string(vocab::ldp::ns)},
      {"ldpsc", std::string(vocab::ldpsc::ns)}, {"rdf", std::string(vocab::rdf::ns)},
      {"sosa", std::string(vocab::sosa::ns)},   {"xsd", std::string(vocab::xsd::ns)},
  };
  return prefixes;
}

namespace {

const std::regex kSafeLocal("[A-Za-z_][A-Za-z0-9_\\-]*");
const std::regex kIntegerLex("[+-]?[0-9]+");
const std::regex kDecimalLex("[+-]?[0-9]*\\.[0-9]+");
const std::regex kDoubleLex("[+-]?([0-9]+\\.[0-9]*|\\.?[0-9]+)[eE][+-]?[0-9]+");

class Writer {
 public:
  Writer(const Graph& graph, std::string_view base, const PrefixMap& prefixes)
      : graph_(graph), base_(base), prefixes_(prefixes) {
    for (const auto& t : graph_) {
      subjects_[t.subject].push_back(&t);
      if (t.object.is_blank()) ++object_refs_[t.object];
    }
    for (const auto& [node, refs] : object_refs_) {
      if (refs == 1) inline_candidates_.insert(node);
    }
  }

  std::string run() {
    std::string body;
    // A cycle of singly-referenced blank nodes has no top-level entry point;
    // demote one of them to a labelled subject and retry.
    for (;;) {
      body = render_body();
      std::optional<Term> orphan;
      for (const auto& node : inline_candidates_) {
        if (subjects_.contains(node) && !emitted_.contains(node)) {
          orphan = node;
          break;
        }
      }
      if (!orphan) break;
      inline_candidates_.erase(*orphan);
    }
    std::string out;
    for (const auto& prefix : used_prefixes_) {
      out += "@prefix " + prefix + ": <" + prefixes_.at(prefix) + "> .\n";
    }
    if (!out.empty() && !body.empty()) out += "\n";
    return out + body;
  }

 private:
  std::string render_body() {
    emitted_.clear();
    used_prefixes_.clear();
    blank_labels_.clear();
    std::ostringstream out;
    bool first = true;
    for (const auto& [subject, triples] : subjects_) {
      if (inline_candidates_.contains(subject)) continue;
      if (!first) out << "\n";
      first = false;
      emitted_.insert(subject);
      out << render_subject(subject);
      write_predicates(out, triples, 1);
      out << " .\n";
    }
    return out.str();
  }

  void write_predicates(std::ostringstream& out, const std::vector<const Triple*>& triples, int depth) {
    // rdf:type first, then the graph's own predicate order.
    std::vector<const Triple*> ordered;
    for (auto* t : triples) {
      if (t->predicate.as_iri().value == vocab::rdf::type) ordered.push_back(t);
    }
    for (auto* t : triples) {
      if (t->predicate.as_iri().value != vocab::rdf::type) ordered.push_back(t);
    }
    std::string indent(static_cast<std::size_t>(depth) * 4, ' ');
    const Term* current = nullptr;
    for (auto* t : ordered) {
      if (current && *current == t->predicate) {
        out << ", " << render_object(t->object, depth);
        continue;
      }
      out << (current ? " ;\n" + indent : std::string(" ")) << render_predicate(t->predicate) << " "
          << render_object(t->object, depth);
      current = &t->predicate;
    }
  }

  std::string render_subject(const Term& term) {
    return term.is_blank() ? blank_label(term) : render_iri(term.as_iri().value);
  }

  std::string render_predicate(const Term& term) {
    if (term.as_iri().value == vocab::rdf::type) return "a";
    return render_iri(term.as_iri().value);
  }

  std::string render_object(const Term& term, int depth) {
    if (term.is_iri()) return render_iri(term.as_iri().value);
    if (term.is_literal()) return render_literal(term.as_literal());
    if (!inline_candidates_.contains(term)) return blank_label(term);
    auto it = subjects_.find(term);
    if (it == subjects_.end()) return "[]";
    emitted_.insert(term);
    std::ostringstream out;
    std::string indent(static_cast<std::size_t>(depth + 1) * 4, ' ');
    out << "[\n" << indent;
    std::ostringstream inner;
    write_predicates(inner, it->second, depth + 1);
    // write_predicates leads with a separator space.
    out << inner.str().substr(1) << "\n" << std::string(static_cast<std::size_t>(depth) * 4, ' ') << "]";
    return out.str();
  }

  std::string blank_label(const Term& term) {
    auto [it, inserted] = blank_labels_.try_emplace(term.as_blank().label);
    if (inserted) it->second = "_:b" + std::to_string(blank_labels_.size() - 1);
    return it->second;
  }

  std::string render_iri(const std::string& value) {
    if (strip_fragment(value) == strip_fragment(base_)) {
      auto rel = relativize_iri(base_, value);
      if (rel != value) return "<" + rel + ">";
    }
    const std::string* best_prefix = nullptr;
    for (const auto& [prefix, ns] : prefixes_) {
      if (value.size() > ns.size() && value.starts_with(ns) &&
          std::regex_match(value.substr(ns.size()), kSafeLocal) &&
          (!best_prefix || ns.size() > prefixes_.at(*best_prefix).size())) {
        best_prefix = &prefix;
      }
    }
    if (best_prefix) {
      used_prefixes_.insert(*best_prefix);
      return *best_prefix + ":" + value.substr(prefixes_.at(*best_prefix).size());
    }
    return "<" + relativize_iri(base_, value) + ">";
  }

  std::string render_literal(const Literal& lit) {
    const auto& dt = lit.datatype;
    if (lit.language.empty()) {
      if ((dt == vocab::xsd::integer && std::regex_match(lit.lexical, kIntegerLex)) ||
          (dt == vocab::xsd::decimal && std::regex_match(lit.lexical, kDecimalLex)) ||
          (dt == vocab::xsd::double_ && std::regex_match(lit.lexical, kDoubleLex)) ||
          (dt == vocab::xsd::boolean && (lit.lexical == "true" || lit.lexical == "false"))) {
        return lit.lexical;
      }
    }
    std::string out = "\"" + escape(lit.lexical) + "\"";
    if (!lit.language.empty()) return out + "@" + lit.language;
    if (dt != vocab::xsd::string) out += "^^" + render_iri(dt);
    return out;
  }

  static std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(c));
            out += buf;
          } else {
            out += c;
          }
      }
    }
    return out;
  }

  const Graph& graph_;
  std::string base_;
  const PrefixMap& prefixes_;
  std::map<Term, std::vector<const Triple*>> subjects_;
  std::map<Term, int> object_refs_;
  std::set<Term> inline_candidates_;
  std::set<Term> emitted_;
  std::set<std::string> used_prefixes_;
  std::map<std::string, std::string> blank_labels_;
};

}  // namespace

std::string serialize_turtle(const Graph& graph, std::string_view base, const PrefixMap& prefixes) {
  return Writer(graph, base, prefixes).run();
}

}  // namespace sc::rdf
