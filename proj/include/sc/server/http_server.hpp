#pragma once

#include <atomic>
#include <condition_variable>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "sc/server/container_service.hpp"

namespace httplib {
class Server;
}

namespace sc::server {

struct ServerConfig {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::string base_iri;  // defaults to http://<host>:<port>
  std::vector<std::string> containers;
  std::optional<rdf::Duration> retention;
  rdf::Duration sweep_period = rdf::Duration::from_seconds(60);
  std::optional<rdf::Timestamp> simulated_clock_start;
};

// Serves a ContainerService over HTTP/1.1 with keep-alive and a worker pool,
// and runs the retention sweep on its own thread.
class HttpServer {
 public:
  explicit HttpServer(std::shared_ptr<ContainerService> service);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds the listening socket; port 0 picks a free one. Returns the bound port.
  int bind(const std::string& host, int port);

  // Blocks until stop().
  void listen();
  // listen() on a background thread.
  void start();
  void stop();

  // Periodic retention sweep; no-op when `period` is not positive.
  void start_sweeper(rdf::Duration period);

  // The service may be attached after bind(), once the port is known.
  void set_service(std::shared_ptr<ContainerService> service) { service_ = std::move(service); }
  ContainerService& service() { return *service_; }

 private:
  std::shared_ptr<ContainerService> service_;
  std::unique_ptr<httplib::Server> server_;
  std::thread listener_;
  std::thread sweeper_;
  std::mutex sweep_mutex_;
  std::condition_variable sweep_cv_;
  bool stopping_ = false;
};

// Builds the service described by `config`.
std::shared_ptr<ContainerService> make_service(const ServerConfig& config, int bound_port);

}  // namespace sc::server
