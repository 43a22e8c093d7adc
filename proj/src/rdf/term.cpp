#include "sc/rdf/term.hpp"

#include <cstdio>

#include "sc/rdf/vocab.hpp"

namespace sc::rdf {

const std::string& Term::text() const {
  return std::visit(
      [](const auto& v) -> const std::string& {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Iri>) {
          return v.value;
        } else if constexpr (std::is_same_v<T, BlankNode>) {
          return v.label;
        } else {
          return v.lexical;
        }
      },
      value_);
}

Term iri(std::string value) { return Term(Iri{std::move(value)}); }

Term blank(std::string label) { return Term(BlankNode{std::move(label)}); }

Term literal(std::string lexical) {
  return Term(Literal{std::move(lexical), std::string(vocab::xsd::string), {}});
}

Term typed_literal(std::string lexical, std::string datatype) {
  return Term(Literal{std::move(lexical), std::move(datatype), {}});
}

Term lang_literal(std::string lexical, std::string language) {
  return Term(Literal{std::move(lexical), std::string(vocab::rdf::lang_string), std::move(language)});
}

namespace {

std::string escape_string(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string to_string(const Term& term) {
  if (term.is_iri()) return "<" + term.as_iri().value + ">";
  if (term.is_blank()) return "_:" + term.as_blank().label;
  const auto& lit = term.as_literal();
  std::string out = "\"" + escape_string(lit.lexical) + "\"";
  if (!lit.language.empty()) return out + "@" + lit.language;
  if (lit.datatype != vocab::xsd::string) out += "^^<" + lit.datatype + ">";
  return out;
}

}  // namespace sc::rdf
