#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "sc/core/clock.hpp"
#include "sc/core/stream_container.hpp"
#include "sc/http/message.hpp"

namespace sc::server {

inline constexpr std::string_view kContainerCacheControl = "no-cache";
inline constexpr std::string_view kElementCacheControl = "public, max-age=31536000, immutable";

// Static set of Stream Containers keyed by origin-relative path. Containers
// are registered before serving starts; each carries its own lock so requests
// on different containers never contend.
class ContainerRegistry {
 public:
  struct Entry {
    std::string path;
    mutable std::shared_mutex mutex;
    core::StreamContainerState state;

    Entry(std::string p, std::string iri, std::optional<rdf::Duration> retention)
        : path(std::move(p)), state(std::move(iri), retention) {}
  };

  // What a request target refers to.
  struct Route {
    Entry* container = nullptr;
    std::optional<std::string> element_path;  // "/<seq>" when addressing an element
  };

  // Throws std::invalid_argument for malformed or overlapping paths.
  Entry& add(const std::string& path, const std::string& container_iri, std::optional<rdf::Duration> retention);

  Route route(std::string_view target) const;
  Entry* find(std::string_view path) const;
  std::vector<Entry*> entries() const;

  // "/a/b/" -> "/a/b"; the root stays "/".
  static std::string normalize(std::string_view path);

 private:
  std::map<std::string, std::unique_ptr<Entry>, std::less<>> entries_;
};

// Transport-independent Stream Container protocol: GET evaluates windows at
// request arrival, POST appends, PUT replaces window specs, DELETE removes
// elements.
class ContainerService {
 public:
  // `origin` like "http://localhost:8080"; container IRIs are origin + path.
  ContainerService(std::string origin, std::shared_ptr<core::Clock> clock);

  const std::string& origin() const { return origin_; }
  core::Clock& clock() const { return *clock_; }

  void add_container(const std::string& path, std::optional<rdf::Duration> retention = std::nullopt);
  std::string container_iri(std::string_view path) const;

  http::Response handle(const http::Request& request);

  // Applies every container's retention policy at the current clock reading.
  // Returns the IRIs of removed elements.
  std::vector<std::string> sweep();

  // Runs `fn` with exclusive access to a container's state (fixtures, tests).
  void with_container(const std::string& path, const std::function<void(core::StreamContainerState&)>& fn);

  // Fixture dump/load as a directory of Turtle files.
  void dump(const std::string& path, const std::filesystem::path& dir) const;
  void load(const std::string& path, const std::filesystem::path& dir);

  // Optional diagnostics sink for warnings (e.g. untimestamped POST bodies).
  void set_logger(std::function<void(const std::string&)> logger) { logger_ = std::move(logger); }

 private:
  http::Response get_container(const ContainerRegistry::Entry& entry, rdf::Timestamp t_eval) const;
  http::Response get_element(const ContainerRegistry::Entry& entry, const std::string& element_path) const;
  http::Response post(ContainerRegistry::Entry& entry, const http::Request& request, rdf::Timestamp arrival);
  http::Response put(ContainerRegistry::Entry& entry, const http::Request& request);
  http::Response remove(ContainerRegistry::Entry& entry, const std::string& element_path);

  void log(const std::string& message) const;

  std::string origin_;
  std::shared_ptr<core::Clock> clock_;
  ContainerRegistry registry_;
  std::function<void(const std::string&)> logger_;
};

// Whether an Accept header value admits text/turtle.
bool accepts_turtle(std::string_view accept);

}  // namespace sc::server
