#include "sc/server/container_service.hpp"

#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "sc/rdf/iri.hpp"
#include "sc/rdf/turtle.hpp"
#include "sc/rdf/vocab.hpp"

namespace sc::server {

namespace v = rdf::vocab;

namespace {

bool all_digits(std::string_view s) {
  if (s.empty() || (s.size() > 1 && s.front() == '0')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

http::Response status_only(int status, std::string body = {}) {
  http::Response r;
  r.status = status;
  if (!body.empty()) {
    r.headers.emplace("Content-Type", "text/plain; charset=utf-8");
    r.body = std::move(body) + "\n";
  }
  return r;
}

http::Response turtle_response(int status, std::string body) {
  http::Response r;
  r.status = status;
  r.headers.emplace("Content-Type", "text/turtle; charset=utf-8");
  r.body = std::move(body);
  return r;
}

bool is_turtle_body(const http::Request& request) {
  auto type = request.header("Content-Type");
  return type && http::media_type(*type) == http::kTurtle;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

}  // namespace

bool accepts_turtle(std::string_view accept) {
  std::size_t start = 0;
  while (start <= accept.size()) {
    auto end = accept.find(',', start);
    if (end == std::string_view::npos) end = accept.size();
    auto item = accept.substr(start, end - start);
    auto type = http::media_type(item);
    // q=0 explicitly refuses the type.
    bool refused = item.find("q=0") != std::string_view::npos && item.find("q=0.") == std::string_view::npos;
    if (!refused && (type == http::kTurtle || type == "text/*" || type == "*/*")) return true;
    start = end + 1;
  }
  return false;
}

std::string ContainerRegistry::normalize(std::string_view path) {
  std::string out(path);
  if (out.empty() || out.front() != '/') out.insert(0, "/");
  while (out.size() > 1 && out.back() == '/') out.pop_back();
  return out;
}

ContainerRegistry::Entry& ContainerRegistry::add(const std::string& raw_path, const std::string& container_iri,
                                                 std::optional<rdf::Duration> retention) {
  auto path = normalize(raw_path);
  if (path.find_first_of("?#") != std::string::npos || rdf::has_forbidden_iri_chars(path)) {
    throw std::invalid_argument("invalid container path '" + raw_path + "'");
  }
  for (const auto& [existing, entry] : entries_) {
    auto nested = [](const std::string& outer, const std::string& inner) {
      return outer == "/" || inner.starts_with(outer + "/");
    };
    if (existing == path || nested(existing, path) || nested(path, existing)) {
      throw std::invalid_argument("container path '" + path + "' overlaps '" + existing + "'");
    }
  }
  auto entry = std::make_unique<Entry>(path, container_iri, retention);
  auto& ref = *entry;
  entries_.emplace(path, std::move(entry));
  return ref;
}

ContainerRegistry::Entry* ContainerRegistry::find(std::string_view path) const {
  auto it = entries_.find(path);
  return it == entries_.end() ? nullptr : it->second.get();
}

ContainerRegistry::Route ContainerRegistry::route(std::string_view target) const {
  auto cut = target.find_first_of("?#");
  auto path = normalize(target.substr(0, cut));
  if (auto* entry = find(path)) return {entry, std::nullopt};
  auto slash = path.rfind('/');
  auto parent = slash == 0 ? std::string("/") : path.substr(0, slash);
  auto leaf = path.substr(slash + 1);
  if (auto* entry = find(parent); entry && all_digits(leaf)) return {entry, "/" + leaf};
  return {};
}

std::vector<ContainerRegistry::Entry*> ContainerRegistry::entries() const {
  std::vector<Entry*> out;
  for (const auto& [path, entry] : entries_) out.push_back(entry.get());
  return out;
}

ContainerService::ContainerService(std::string origin, std::shared_ptr<core::Clock> clock)
    : origin_(std::move(origin)), clock_(std::move(clock)) {
  while (!origin_.empty() && origin_.back() == '/') origin_.pop_back();
  if (!rdf::is_absolute_iri(origin_) || origin_.find('#') != std::string::npos) {
    throw std::invalid_argument("base IRI must be absolute and without fragment: " + origin_);
  }
}

std::string ContainerService::container_iri(std::string_view path) const {
  return origin_ + ContainerRegistry::normalize(path);
}

void ContainerService::add_container(const std::string& path, std::optional<rdf::Duration> retention) {
  if (retention && retention->millis() <= 0) throw std::invalid_argument("retention must be positive");
  registry_.add(path, container_iri(path), retention);
}

http::Response ContainerService::handle(const http::Request& request) {
  // NOW() for every window in this response.
  const auto arrival = clock_->now();
  auto route = registry_.route(request.target);
  if (!route.container) return status_only(404, "no such resource");
  auto& entry = *route.container;
  const bool is_element = route.element_path.has_value();

  if (request.method == "OPTIONS") {
    if (is_element) {
      std::shared_lock lock(entry.mutex);
      if (!entry.state.find(*route.element_path)) return status_only(404, "no such resource");
    }
    auto r = status_only(204);
    r.headers.emplace("Allow", is_element ? "GET, DELETE, OPTIONS" : "GET, POST, PUT, OPTIONS");
    return r;
  }

  if (request.method == "GET" || request.method == "HEAD") {
    if (auto accept = request.header("Accept"); accept && !accepts_turtle(*accept)) {
      return status_only(406, "only text/turtle is available");
    }
    auto r = is_element ? get_element(entry, *route.element_path) : get_container(entry, arrival);
    if (request.method == "HEAD") r.body.clear();
    return r;
  }

  if (request.method == "POST") {
    if (is_element) return status_only(405, "stream elements are immutable");
    if (!is_turtle_body(request)) return status_only(415, "POST bodies must be text/turtle");
    return post(entry, request, arrival);
  }

  if (request.method == "PUT") {
    if (is_element) return status_only(405, "stream elements are immutable");
    if (!is_turtle_body(request)) return status_only(415, "PUT bodies must be text/turtle");
    return put(entry, request);
  }

  if (request.method == "DELETE") {
    if (!is_element) return status_only(405, "containers cannot be deleted");
    return remove(entry, *route.element_path);
  }

  return status_only(405, "method not allowed");
}

http::Response ContainerService::get_container(const ContainerRegistry::Entry& entry, rdf::Timestamp t_eval) const {
  std::string body;
  {
    std::shared_lock lock(entry.mutex);
    body = rdf::serialize_turtle(core::container_representation(entry.state, t_eval), entry.state.base());
  }
  auto r = turtle_response(200, std::move(body));
  r.headers.emplace("Link", "<" + std::string(v::ldp::container) + ">; rel=\"type\", <" +
                                std::string(v::ldpsc::stream_container) + ">; rel=\"type\"");
  r.headers.emplace("Cache-Control", std::string(kContainerCacheControl));
  r.headers.emplace(std::string(http::kEvaluationTimeHeader), rdf::format_timestamp(t_eval));
  return r;
}

http::Response ContainerService::get_element(const ContainerRegistry::Entry& entry,
                                             const std::string& element_path) const {
  core::ElementPtr element;
  std::string iri;
  {
    std::shared_lock lock(entry.mutex);
    element = entry.state.find(element_path);
    if (!element) return status_only(404, "no such resource");
    iri = entry.state.iri_of(*element);
  }
  // Elements are immutable and serialization is deterministic, so the bytes
  // never change for the lifetime of the element.
  auto r = turtle_response(200, rdf::serialize_turtle(element->graph, iri));
  r.headers.emplace("Cache-Control", std::string(kElementCacheControl));
  return r;
}

http::Response ContainerService::post(ContainerRegistry::Entry& entry, const http::Request& request,
                                      rdf::Timestamp arrival) {
  std::string location;
  bool timestamped = false;
  {
    std::unique_lock lock(entry.mutex);
    location = core::element_iri(entry.state.base(), entry.state.next_path());
    rdf::Graph graph;
    try {
      // `<>` in the payload denotes the resource being created.
      graph = rdf::parse_turtle(request.body, location);
    } catch (const rdf::TurtleError& e) {
      return status_only(400, std::string("invalid Turtle: ") + e.what());
    }
    for (const auto& w : entry.state.windows()) {
      if (!core::timestamp_extract(graph, w.content_timestamp_relation()).empty()) timestamped = true;
    }
    if (entry.state.windows().empty()) timestamped = true;
    entry.state.append(std::move(graph), arrival);
  }
  if (!timestamped) log("warning: " + location + " carries no timestamp for any window of " + entry.path);
  auto r = status_only(201);
  r.headers.emplace("Location", location);
  return r;
}

http::Response ContainerService::put(ContainerRegistry::Entry& entry, const http::Request& request) {
  try {
    auto body = rdf::parse_turtle(request.body, entry.state.base());
    auto specs = core::parse_window_specs(body, entry.state.base());
    std::unique_lock lock(entry.mutex);
    entry.state.set_windows(std::move(specs));
  } catch (const rdf::TurtleError& e) {
    return status_only(400, std::string("invalid Turtle: ") + e.what());
  } catch (const core::WindowSpecError& e) {
    return status_only(400, std::string("invalid window: ") + e.what());
  }
  return status_only(204);
}

http::Response ContainerService::remove(ContainerRegistry::Entry& entry, const std::string& element_path) {
  std::unique_lock lock(entry.mutex);
  if (!entry.state.remove(element_path)) return status_only(404, "no such resource");
  return status_only(204);
}

std::vector<std::string> ContainerService::sweep() {
  std::vector<std::string> removed;
  for (auto* entry : registry_.entries()) {
    std::unique_lock lock(entry->mutex);
    for (const auto& path : core::apply_retention(entry->state, clock_->now())) {
      removed.push_back(core::element_iri(entry->state.base(), path));
    }
  }
  return removed;
}

void ContainerService::with_container(const std::string& path,
                                      const std::function<void(core::StreamContainerState&)>& fn) {
  auto* entry = registry_.find(ContainerRegistry::normalize(path));
  if (!entry) throw std::invalid_argument("unknown container " + path);
  std::unique_lock lock(entry->mutex);
  fn(entry->state);
}

void ContainerService::dump(const std::string& path, const std::filesystem::path& dir) const {
  auto* entry = registry_.find(ContainerRegistry::normalize(path));
  if (!entry) throw std::invalid_argument("unknown container " + path);
  std::shared_lock lock(entry->mutex);
  const auto& state = entry->state;
  std::filesystem::create_directories(dir);

  rdf::Graph description;
  auto container = rdf::iri(state.base());
  description.insert(container, rdf::iri(std::string(v::rdf::type)),
                     rdf::iri(std::string(v::ldpsc::stream_container)));
  std::size_t index = 0;
  for (const auto& w : state.windows()) {
    core::describe_window(description, container, rdf::blank("w" + std::to_string(index++)), w);
  }
  write_file(dir / "container.ttl", rdf::serialize_turtle(description, state.base()));

  std::ostringstream manifest;
  manifest << "# seq\tarrival\n";
  for (const auto& e : state.elements()) {
    manifest << e->seq << "\t" << rdf::format_timestamp(e->arrival) << "\n";
    write_file(dir / (std::to_string(e->seq) + ".ttl"), rdf::serialize_turtle(e->graph, state.iri_of(*e)));
  }
  write_file(dir / "elements.tsv", manifest.str());
}

void ContainerService::load(const std::string& path, const std::filesystem::path& dir) {
  auto* entry = registry_.find(ContainerRegistry::normalize(path));
  if (!entry) throw std::invalid_argument("unknown container " + path);
  std::unique_lock lock(entry->mutex);
  auto& state = entry->state;

  auto description = rdf::parse_turtle(read_file(dir / "container.ttl"), state.base());
  state.set_windows(core::parse_window_specs(description, state.base()));

  std::istringstream manifest(read_file(dir / "elements.tsv"));
  std::string line;
  while (std::getline(manifest, line)) {
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw std::runtime_error("malformed manifest line: " + line);
    auto seq = std::stoull(line.substr(0, tab));
    auto arrival = rdf::parse_timestamp(line.substr(tab + 1));
    auto element_path = "/" + std::to_string(seq);
    auto graph = rdf::parse_turtle(read_file(dir / (std::to_string(seq) + ".ttl")),
                                   core::element_iri(state.base(), element_path));
    state.restore(std::make_shared<const core::StreamElement>(
        core::StreamElement{element_path, std::move(graph), seq, arrival}));
  }
}

void ContainerService::log(const std::string& message) const {
  if (logger_) logger_(message);
}

}  // namespace sc::server
