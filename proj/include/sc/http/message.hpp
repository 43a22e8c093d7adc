#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace sc::http {

struct CaseInsensitiveLess {
  bool operator()(const std::string& a, const std::string& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
      return std::tolower(static_cast<unsigned char>(x)) < std::tolower(static_cast<unsigned char>(y));
    });
  }
};

using Headers = std::multimap<std::string, std::string, CaseInsensitiveLess>;

inline std::optional<std::string> header(const Headers& headers, const std::string& name) {
  auto it = headers.find(name);
  if (it == headers.end()) return std::nullopt;
  return it->second;
}

// `target` is an absolute IRI on the client side and an origin-relative path
// (plus optional query) on the server side.
struct Request {
  std::string method;
  std::string target;
  Headers headers;
  std::string body;

  std::optional<std::string> header(const std::string& name) const { return http::header(headers, name); }
};

struct Response {
  int status = 200;
  Headers headers;
  std::string body;

  std::optional<std::string> header(const std::string& name) const { return http::header(headers, name); }
};

inline constexpr std::string_view kTurtle = "text/turtle";

// Instant at which a Stream Container evaluated its windows for a response.
inline constexpr std::string_view kEvaluationTimeHeader = "Evaluation-Time";

// "http://host:8080/a/b?q" -> {"http://host:8080", "/a/b?q"}. The path part
// is "/" when the IRI has none.
inline std::pair<std::string, std::string> split_origin(std::string_view iri) {
  auto scheme_end = iri.find("://");
  if (scheme_end == std::string_view::npos) return {std::string(), std::string(iri)};
  auto path_start = iri.find_first_of("/?#", scheme_end + 3);
  if (path_start == std::string_view::npos) return {std::string(iri), "/"};
  std::string path(iri.substr(path_start));
  if (path.front() != '/') path.insert(0, "/");
  return {std::string(iri.substr(0, path_start)), path};
}

// Media type without parameters, lower-cased.
inline std::string media_type(std::string_view content_type) {
  auto semi = content_type.find(';');
  auto type = content_type.substr(0, semi);
  while (!type.empty() && std::isspace(static_cast<unsigned char>(type.back()))) type.remove_suffix(1);
  while (!type.empty() && std::isspace(static_cast<unsigned char>(type.front()))) type.remove_prefix(1);
  std::string out(type);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace sc::http
