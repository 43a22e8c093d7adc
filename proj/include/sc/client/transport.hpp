#pragma once

#include <stdexcept>
#include <vector>

#include "sc/http/message.hpp"

namespace sc::client {

class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Moves requests addressed by absolute IRI to a server and back.
class Transport {
 public:
  virtual ~Transport() = default;

  virtual http::Response send(const http::Request& request) = 0;

  // Issues every request concurrently. Responses come back in request order;
  // a request that failed in transport yields status 0 with the reason as body.
  virtual std::vector<http::Response> send_all(const std::vector<http::Request>& requests) = 0;
};

// Real HTTP/1.1 via cpp-httplib; send_all runs one connection per request on
// its own thread.
class HttpTransport final : public Transport {
 public:
  explicit HttpTransport(int timeout_seconds = 10) : timeout_seconds_(timeout_seconds) {}

  http::Response send(const http::Request& request) override;
  std::vector<http::Response> send_all(const std::vector<http::Request>& requests) override;

 private:
  int timeout_seconds_;
};

http::Request get_turtle(std::string iri);
http::Request post_turtle(std::string iri, std::string body);
http::Request put_turtle(std::string iri, std::string body);

}  // namespace sc::client
