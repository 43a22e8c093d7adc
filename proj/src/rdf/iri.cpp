#include "sc/rdf/iri.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace sc::rdf {

namespace {

bool valid_scheme(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
  });
}

std::string remove_dot_segments(std::string_view path) {
  std::string input(path);
  std::string output;
  while (!input.empty()) {
    if (input.starts_with("../")) {
      input.erase(0, 3);
    } else if (input.starts_with("./")) {
      input.erase(0, 2);
    } else if (input.starts_with("/./")) {
      input.replace(0, 3, "/");
    } else if (input == "/.") {
      input = "/";
    } else if (input.starts_with("/../") || input == "/..") {
      input = input.size() == 3 ? std::string("/") : input.substr(3);
      auto pos = output.rfind('/');
      output.erase(pos == std::string::npos ? 0 : pos);
    } else if (input == "." || input == "..") {
      input.clear();
    } else {
      auto start = input.front() == '/' ? 1 : 0;
      auto next = input.find('/', start);
      if (next == std::string::npos) next = input.size();
      output.append(input, 0, next);
      input.erase(0, next);
    }
  }
  return output;
}

std::string merge_paths(const IriParts& base, std::string_view reference_path) {
  if (base.authority && base.path.empty()) return "/" + std::string(reference_path);
  auto slash = base.path.rfind('/');
  if (slash == std::string::npos) return std::string(reference_path);
  return base.path.substr(0, slash + 1) + std::string(reference_path);
}

}  // namespace

IriParts split_iri(std::string_view ref) {
  IriParts parts;
  auto colon = ref.find(':');
  auto delim = ref.find_first_of("/?#");
  if (colon != std::string_view::npos && (delim == std::string_view::npos || colon < delim) &&
      valid_scheme(ref.substr(0, colon))) {
    parts.scheme = std::string(ref.substr(0, colon));
    ref.remove_prefix(colon + 1);
  }
  if (ref.starts_with("//")) {
    ref.remove_prefix(2);
    auto end = ref.find_first_of("/?#");
    if (end == std::string_view::npos) end = ref.size();
    parts.authority = std::string(ref.substr(0, end));
    ref.remove_prefix(end);
  }
  auto hash = ref.find('#');
  if (hash != std::string_view::npos) {
    parts.fragment = std::string(ref.substr(hash + 1));
    ref = ref.substr(0, hash);
  }
  auto question = ref.find('?');
  if (question != std::string_view::npos) {
    parts.query = std::string(ref.substr(question + 1));
    ref = ref.substr(0, question);
  }
  parts.path = std::string(ref);
  return parts;
}

std::string join_iri(const IriParts& parts) {
  std::string out;
  if (parts.scheme) out += *parts.scheme + ":";
  if (parts.authority) out += "//" + *parts.authority;
  out += parts.path;
  if (parts.query) out += "?" + *parts.query;
  if (parts.fragment) out += "#" + *parts.fragment;
  return out;
}

bool is_absolute_iri(std::string_view iri) {
  return !has_forbidden_iri_chars(iri) && split_iri(iri).scheme.has_value();
}

bool has_forbidden_iri_chars(std::string_view reference) {
  return std::any_of(reference.begin(), reference.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return u <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' ||
           c == '^' || c == '`' || c == '\\';
  });
}

std::string resolve_iri(std::string_view base, std::string_view reference) {
  if (has_forbidden_iri_chars(reference)) {
    throw IriError("malformed IRI reference: " + std::string(reference));
  }
  auto r = split_iri(reference);
  if (r.scheme) {
    r.path = remove_dot_segments(r.path);
    return join_iri(r);
  }
  if (!is_absolute_iri(base)) throw IriError("base IRI is not absolute: " + std::string(base));
  auto b = split_iri(base);
  IriParts t;
  t.scheme = b.scheme;
  if (r.authority) {
    t.authority = r.authority;
    t.path = remove_dot_segments(r.path);
    t.query = r.query;
  } else {
    t.authority = b.authority;
    if (r.path.empty()) {
      t.path = b.path;
      t.query = r.query ? r.query : b.query;
    } else {
      t.path = remove_dot_segments(r.path.front() == '/' ? r.path : merge_paths(b, r.path));
      t.query = r.query;
    }
  }
  t.fragment = r.fragment;
  return join_iri(t);
}

std::string strip_fragment(std::string_view iri) {
  auto hash = iri.find('#');
  return std::string(hash == std::string_view::npos ? iri : iri.substr(0, hash));
}

std::string relativize_iri(std::string_view base, std::string_view iri) {
  if (!is_absolute_iri(base) || !is_absolute_iri(iri)) return std::string(iri);
  auto b = split_iri(base);
  auto t = split_iri(iri);
  std::vector<std::string> candidates;
  if (strip_fragment(iri) == strip_fragment(base)) {
    candidates.push_back(t.fragment ? "#" + *t.fragment : "");
  }
  if (t.scheme == b.scheme && t.authority == b.authority && t.authority && t.path.starts_with('/') &&
      !t.path.starts_with("//")) {
    IriParts rel = t;
    rel.scheme.reset();
    rel.authority.reset();
    candidates.push_back(join_iri(rel));
  }
  for (const auto& c : candidates) {
    if (resolve_iri(base, c) == iri) return c;
  }
  return std::string(iri);
}

}  // namespace sc::rdf
