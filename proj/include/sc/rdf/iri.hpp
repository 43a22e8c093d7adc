#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sc::rdf {

class IriError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Components of an IRI reference split per RFC 3986 appendix B.
struct IriParts {
  std::optional<std::string> scheme;
  std::optional<std::string> authority;
  std::string path;
  std::optional<std::string> query;
  std::optional<std::string> fragment;
};

IriParts split_iri(std::string_view reference);
std::string join_iri(const IriParts& parts);

bool is_absolute_iri(std::string_view iri);

// Characters that may never appear inside an IRI reference.
bool has_forbidden_iri_chars(std::string_view reference);

// RFC 3986 section 5.2 reference resolution. Throws IriError when `base` is
// not absolute or `reference` contains forbidden characters.
std::string resolve_iri(std::string_view base, std::string_view reference);

// Shortest relative reference that resolves back to `iri` against `base`
// (same document, fragment, or absolute path), or `iri` unchanged.
std::string relativize_iri(std::string_view base, std::string_view iri);

// The IRI without its fragment.
std::string strip_fragment(std::string_view iri);

}  // namespace sc::rdf
