#include "sc/server/http_server.hpp"

#include <httplib.h>

#include <stdexcept>

namespace sc::server {

HttpServer::HttpServer(std::shared_ptr<ContainerService> service)
    : service_(std::move(service)), server_(std::make_unique<httplib::Server>()) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    http::Request request;
    request.method = req.method;
    request.target = req.target.empty() ? req.path : req.target;
    for (const auto& [name, value] : req.headers) request.headers.emplace(name, value);
    request.body = req.body;

    if (!service_) {
      res.status = 503;
      return;
    }
    auto response = service_->handle(request);
    res.status = response.status;
    std::string content_type = "text/plain";
    for (const auto& [name, value] : response.headers) {
      if (http::media_type(name) == "content-type") {
        content_type = value;
      } else {
        res.set_header(name, value);
      }
    }
    if (!response.body.empty()) res.set_content(response.body, content_type);
  };
  const char* any = R"(/.*)";
  server_->Get(any, handler);
  server_->Post(any, handler);
  server_->Put(any, handler);
  server_->Delete(any, handler);
  server_->Options(any, handler);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    int bound = server_->bind_to_any_port(host);
    if (bound < 0) throw std::runtime_error("cannot bind " + host);
    return bound;
  }
  if (!server_->bind_to_port(host, port)) throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
  return port;
}

void HttpServer::listen() { server_->listen_after_bind(); }

void HttpServer::start() {
  listener_ = std::thread([this] { listen(); });
  server_->wait_until_ready();
}

void HttpServer::stop() {
  {
    std::lock_guard lock(sweep_mutex_);
    stopping_ = true;
  }
  sweep_cv_.notify_all();
  if (sweeper_.joinable()) sweeper_.join();
  server_->stop();
  if (listener_.joinable()) listener_.join();
}

void HttpServer::start_sweeper(rdf::Duration period) {
  if (period.millis() <= 0) return;
  sweeper_ = std::thread([this, period] {
    std::unique_lock lock(sweep_mutex_);
    while (!sweep_cv_.wait_for(lock, std::chrono::milliseconds(period.millis()), [this] { return stopping_; })) {
      lock.unlock();
      service_->sweep();
      lock.lock();
    }
  });
}

std::shared_ptr<ContainerService> make_service(const ServerConfig& config, int bound_port) {
  std::shared_ptr<core::Clock> clock;
  if (config.simulated_clock_start) {
    clock = std::make_shared<core::OffsetClock>(*config.simulated_clock_start);
  } else {
    clock = std::make_shared<core::SystemClock>();
  }
  auto base = config.base_iri.empty() ? "http://" + config.host + ":" + std::to_string(bound_port) : config.base_iri;
  auto service = std::make_shared<ContainerService>(base, std::move(clock));
  for (const auto& path : config.containers) service->add_container(path, config.retention);
  return service;
}

}  // namespace sc::server
