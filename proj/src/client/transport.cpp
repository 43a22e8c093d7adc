#include "sc/client/transport.hpp"

#include <httplib.h>

#include <future>

namespace sc::client {

http::Response HttpTransport::send(const http::Request& request) {
  auto [origin, path] = http::split_origin(request.target);
  if (origin.empty()) throw TransportError("request target is not an absolute IRI: " + request.target);
  httplib::Client cli(origin);
  cli.set_connection_timeout(timeout_seconds_, 0);
  cli.set_read_timeout(timeout_seconds_, 0);
  cli.set_write_timeout(timeout_seconds_, 0);

  httplib::Request req;
  req.method = request.method;
  req.path = path;
  for (const auto& [name, value] : request.headers) req.headers.emplace(name, value);
  req.body = request.body;

  auto result = cli.send(req);
  if (!result) {
    throw TransportError(request.method + " " + request.target + ": " + httplib::to_string(result.error()));
  }
  http::Response response;
  response.status = result->status;
  for (const auto& [name, value] : result->headers) response.headers.emplace(name, value);
  response.body = result->body;
  return response;
}

std::vector<http::Response> HttpTransport::send_all(const std::vector<http::Request>& requests) {
  std::vector<std::future<http::Response>> pending;
  pending.reserve(requests.size());
  for (const auto& request : requests) {
    pending.push_back(std::async(std::launch::async, [this, &request] {
      try {
        return send(request);
      } catch (const TransportError& e) {
        http::Response failed;
        failed.status = 0;
        failed.body = e.what();
        return failed;
      }
    }));
  }
  std::vector<http::Response> out;
  out.reserve(requests.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

http::Request get_turtle(std::string iri) {
  http::Request r;
  r.method = "GET";
  r.target = std::move(iri);
  r.headers.emplace("Accept", std::string(http::kTurtle));
  return r;
}

http::Request post_turtle(std::string iri, std::string body) {
  http::Request r;
  r.method = "POST";
  r.target = std::move(iri);
  r.headers.emplace("Content-Type", std::string(http::kTurtle));
  r.body = std::move(body);
  return r;
}

http::Request put_turtle(std::string iri, std::string body) {
  auto r = post_turtle(std::move(iri), std::move(body));
  r.method = "PUT";
  return r;
}

}  // namespace sc::client
