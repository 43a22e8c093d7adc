#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>

namespace sc::rdf {

struct Iri {
  std::string value;

  auto operator<=>(const Iri&) const = default;
};

struct BlankNode {
  std::string label;

  auto operator<=>(const BlankNode&) const = default;
};

// A language-tagged literal always carries rdf:langString as its datatype.
struct Literal {
  std::string lexical;
  std::string datatype;
  std::string language;

  auto operator<=>(const Literal&) const = default;
};

class Term {
 public:
  Term() : value_(Iri{}) {}
  Term(Iri iri) : value_(std::move(iri)) {}
  Term(BlankNode node) : value_(std::move(node)) {}
  Term(Literal literal) : value_(std::move(literal)) {}

  bool is_iri() const { return std::holds_alternative<Iri>(value_); }
  bool is_blank() const { return std::holds_alternative<BlankNode>(value_); }
  bool is_literal() const { return std::holds_alternative<Literal>(value_); }

  const Iri& as_iri() const { return std::get<Iri>(value_); }
  const BlankNode& as_blank() const { return std::get<BlankNode>(value_); }
  const Literal& as_literal() const { return std::get<Literal>(value_); }

  // IRI string, blank node label or literal lexical form.
  const std::string& text() const;

  const std::variant<Iri, BlankNode, Literal>& variant() const { return value_; }

  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;

 private:
  std::variant<Iri, BlankNode, Literal> value_;
};

Term iri(std::string value);
Term blank(std::string label);
// Plain literal, typed xsd:string.
Term literal(std::string lexical);
Term typed_literal(std::string lexical, std::string datatype);
Term lang_literal(std::string lexical, std::string language);

// N-Triples style rendering, used for diagnostics and test output.
std::string to_string(const Term& term);

}  // namespace sc::rdf
