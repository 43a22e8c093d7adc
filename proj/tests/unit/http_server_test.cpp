#include <gtest/gtest.h>

#include <future>
#include <set>

#include "sc/client/stream_client.hpp"
#include "sc/client/transport.hpp"
#include "sc/core/clock.hpp"
#include "sc/rdf/turtle.hpp"
#include "sc/server/http_server.hpp"
#include "support.hpp"

namespace sc::server {
namespace {

using test::ts;

class HttpServerTest : public ::testing::Test {
 protected:
  void SetUp() override {
    clock = std::make_shared<core::ManualClock>(ts("2021-07-20T10:51:10Z"));
    server = std::make_unique<HttpServer>(nullptr);
    port = server->bind("127.0.0.1", 0);
    origin = "http://127.0.0.1:" + std::to_string(port);
    service = std::make_shared<ContainerService>(origin, clock);
    service->add_container("/stream");
    service->add_container("/results");
    server->set_service(service);
    server->start();
  }
  void TearDown() override { server->stop(); }

  std::shared_ptr<core::ManualClock> clock;
  std::shared_ptr<ContainerService> service;
  std::unique_ptr<HttpServer> server;
  int port = 0;
  std::string origin;
  client::HttpTransport transport;
};

TEST_F(HttpServerTest, ServesTheProtocolOverHttp) {
  auto created = transport.send(client::post_turtle(origin + "/stream", "<> <http://example.org/p> 1 ."));
  EXPECT_EQ(created.status, 201);
  EXPECT_EQ(created.header("Location"), origin + "/stream/0");

  auto container = transport.send(client::get_turtle(origin + "/stream"));
  EXPECT_EQ(container.status, 200);
  EXPECT_EQ(container.header("Cache-Control"), "no-cache");
  EXPECT_NE(container.header("Link").value_or("").find("rel=\"type\""), std::string::npos);
  EXPECT_EQ(container.header("Evaluation-Time"), "2021-07-20T10:51:10.000Z");

  auto element = transport.send(client::get_turtle(origin + "/stream/0"));
  EXPECT_EQ(element.status, 200);
  EXPECT_EQ(element.header("Cache-Control"), std::string(kElementCacheControl));

  http::Request del{"DELETE", origin + "/stream/0", {}, {}};
  EXPECT_EQ(transport.send(del).status, 204);
  EXPECT_EQ(transport.send(del).status, 404);

  http::Request options{"OPTIONS", origin + "/stream", {}, {}};
  EXPECT_EQ(transport.send(options).status, 204);
  EXPECT_EQ(transport.send(client::get_turtle(origin + "/missing")).status, 404);
  EXPECT_EQ(transport.send(client::put_turtle(origin + "/stream", "garbage")).status, 400);
}

TEST_F(HttpServerTest, ConcurrentPostsGetDistinctGapFreeLocations) {
  constexpr int kWriters = 8;
  constexpr int kEach = 25;
  std::vector<std::future<std::vector<std::string>>> writers;
  for (int w = 0; w < kWriters; ++w) {
    writers.push_back(std::async(std::launch::async, [this] {
      client::HttpTransport own;
      std::vector<std::string> locations;
      for (int i = 0; i < kEach; ++i) {
        auto r = own.send(client::post_turtle(origin + "/stream", "<> <http://example.org/p> 1 ."));
        locations.push_back(r.status == 201 ? r.header("Location").value_or("") : "");
      }
      return locations;
    }));
  }
  std::set<std::string> all;
  for (auto& w : writers) {
    for (auto& l : w.get()) all.insert(l);
  }
  ASSERT_EQ(all.size(), static_cast<std::size_t>(kWriters * kEach));
  for (int i = 0; i < kWriters * kEach; ++i) EXPECT_TRUE(all.contains(origin + "/stream/" + std::to_string(i)));
}

TEST_F(HttpServerTest, SendAllRunsRequestsConcurrently) {
  std::vector<http::Request> requests;
  for (int i = 0; i < 10; ++i) {
    transport.send(client::post_turtle(origin + "/stream", ""));
    requests.push_back(client::get_turtle(origin + "/stream/" + std::to_string(i)));
  }
  requests.push_back(client::get_turtle("http://127.0.0.1:1/unreachable"));
  auto responses = transport.send_all(requests);
  ASSERT_EQ(responses.size(), requests.size());
  for (int i = 0; i < 10; ++i) EXPECT_EQ(responses[static_cast<std::size_t>(i)].status, 200);
  EXPECT_EQ(responses.back().status, 0);
  EXPECT_FALSE(responses.back().body.empty());
}

TEST_F(HttpServerTest, WithoutServiceAnswers503) {
  HttpServer bare(nullptr);
  auto p = bare.bind("127.0.0.1", 0);
  bare.start();
  EXPECT_EQ(transport.send(client::get_turtle("http://127.0.0.1:" + std::to_string(p) + "/")).status, 503);
  bare.stop();
}

TEST(HttpTransport, UnreachableHostThrows) {
  client::HttpTransport transport(1);
  EXPECT_THROW(transport.send(client::get_turtle("http://127.0.0.1:1/")), client::TransportError);
}

TEST(MakeService, UsesConfiguredBaseAndContainers) {
  ServerConfig config;
  config.containers = {"/a", "/b"};
  config.simulated_clock_start = ts("2021-07-20T10:00:00Z");
  auto service = make_service(config, 9999);
  EXPECT_EQ(service->container_iri("/a"), "http://127.0.0.1:9999/a");
  auto now = service->clock().now();
  EXPECT_GE(now, ts("2021-07-20T10:00:00Z"));
  EXPECT_LT(now, ts("2021-07-20T10:01:00Z"));
  config.base_iri = "http://public.example";
  EXPECT_EQ(make_service(config, 1)->container_iri("/b"), "http://public.example/b");
}

}  // namespace
}  // namespace sc::server
