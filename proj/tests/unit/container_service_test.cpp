#include <gtest/gtest.h>

#include <filesystem>

#include "sc/core/clock.hpp"
#include "sc/rdf/isomorphism.hpp"
#include "sc/rdf/turtle.hpp"
#include "sc/server/container_service.hpp"
#include "support.hpp"

namespace sc::server {
namespace {

namespace v = rdf::vocab;
using test::dur;
using test::ts;

const std::string kOrigin = "http://localhost:8080";

const std::string kFigureWindow = R"(
@prefix ldpsc: <https://solid.ti.rw.fau.de/public/ns/stream-containers#> .
@prefix ldp: <http://www.w3.org/ns/ldp#> .
@prefix sosa: <http://www.w3.org/ns/sosa/> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
@prefix ex: <http://example.org/> .
<> a ldpsc:StreamContainer ;
   ldpsc:window [ ldp:hasMemberRelation ex:inWindow ; ldp:membershipResource <#window1> ;
                  ldpsc:contentTimestampRelation sosa:resultTime ; ldpsc:logical "PT2M"^^xsd:duration ] .
)";

std::string observation_body(const std::string& time, const std::string& value = "22.3") {
  return "@prefix sosa: <http://www.w3.org/ns/sosa/> .\n@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
         "<> a sosa:Observation ; sosa:hasSimpleResult " +
         value + " ;\n   sosa:resultTime \"" + time + "\"^^xsd:dateTimeStamp .\n";
}

http::Request request(std::string method, std::string target, std::string body = {},
                      std::string type = "text/turtle") {
  http::Request r;
  r.method = std::move(method);
  r.target = std::move(target);
  r.body = std::move(body);
  if (!type.empty() && (r.method == "POST" || r.method == "PUT")) r.headers.emplace("Content-Type", type);
  return r;
}

class ServiceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    clock = std::make_shared<core::ManualClock>(ts("2021-07-20T10:47:00Z"));
    service = std::make_shared<ContainerService>(kOrigin, clock);
    service->add_container("/");
  }

  std::string post(const std::string& time, const std::string& target = "/") {
    auto r = service->handle(request("POST", target, observation_body(time)));
    EXPECT_EQ(r.status, 201) << r.body;
    return r.header("Location").value_or("");
  }

  void load_figure() {
    ASSERT_EQ(service->handle(request("PUT", "/", kFigureWindow)).status, 204);
    for (auto t : {"2021-07-20T10:47:08.657Z", "2021-07-20T10:48:08.657Z", "2021-07-20T10:49:38.657Z",
                   "2021-07-20T10:51:08.657Z"}) {
      post(t);
    }
  }

  std::shared_ptr<core::ManualClock> clock;
  std::shared_ptr<ContainerService> service;
};

TEST_F(ServiceTest, FreshContainerHasOnlyItsType) {
  auto r = service->handle(request("GET", "/"));
  EXPECT_EQ(r.status, 200);
  auto g = rdf::parse_turtle(r.body, kOrigin + "/");
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.contains({test::I(kOrigin + "/"), test::I(v::rdf::type), test::I(v::ldpsc::stream_container)}));
  EXPECT_EQ(r.header("Cache-Control"), "no-cache");
  EXPECT_EQ(http::media_type(r.header("Content-Type").value_or("")), "text/turtle");
  auto link = r.header("Link").value_or("");
  EXPECT_NE(link.find("<http://www.w3.org/ns/ldp#Container>; rel=\"type\""), std::string::npos);
  EXPECT_NE(link.find("stream-containers#StreamContainer>; rel=\"type\""), std::string::npos);
  EXPECT_EQ(r.header("Evaluation-Time"), "2021-07-20T10:47:00.000Z");
}

TEST_F(ServiceTest, FigureStateRendersTheFigure) {
  load_figure();
  clock->set(ts("2021-07-20T10:51:10Z"));
  auto r = service->handle(request("GET", "/"));
  auto figure = rdf::parse_turtle(test::read_text(test::fixture_dir() / "figure-container.ttl"), kOrigin + "/");
  EXPECT_TRUE(rdf::isomorphic(rdf::parse_turtle(r.body, kOrigin + "/"), figure)) << r.body;
}

TEST_F(ServiceTest, MembershipFollowsTheClock) {
  load_figure();
  clock->set(ts("2021-07-20T10:51:10Z"));
  auto in_window = test::I("http://example.org/inWindow");
  auto window = test::I(kOrigin + "/#window1");
  auto first = rdf::parse_turtle(service->handle(request("GET", "/")).body, kOrigin + "/");
  EXPECT_TRUE(first.contains({window, in_window, test::I(kOrigin + "/2")}));
  clock->set(ts("2021-07-20T10:51:38.657Z"));
  auto second = rdf::parse_turtle(service->handle(request("GET", "/")).body, kOrigin + "/");
  EXPECT_FALSE(second.contains({window, in_window, test::I(kOrigin + "/2")}));
  EXPECT_TRUE(second.contains({window, in_window, test::I(kOrigin + "/3")}));
}

TEST_F(ServiceTest, PostReturnsLocationsAndBaseIsTheNewElement) {
  EXPECT_EQ(post("2021-07-20T10:47:08.657Z"), kOrigin + "/0");
  EXPECT_EQ(post("2021-07-20T10:48:08.657Z"), kOrigin + "/1");
  auto r = service->handle(request("GET", "/1"));
  ASSERT_EQ(r.status, 200);
  auto g = rdf::parse_turtle(r.body, kOrigin + "/1");
  EXPECT_EQ(g.match(test::I(kOrigin + "/1"), std::nullopt, std::nullopt).size(), 3u);
  EXPECT_EQ(r.header("Cache-Control"), std::string(kElementCacheControl));
}

TEST_F(ServiceTest, EmptyPostCreatesEmptyElement) {
  auto r = service->handle(request("POST", "/", ""));
  EXPECT_EQ(r.status, 201);
  EXPECT_EQ(service->handle(request("GET", "/0")).body, "");
}

TEST_F(ServiceTest, ElementBytesAreStable) {
  post("2021-07-20T10:47:08.657Z");
  auto a = service->handle(request("GET", "/0")).body;
  post("2021-07-20T10:48:08.657Z");
  ASSERT_EQ(service->handle(request("PUT", "/", kFigureWindow)).status, 204);
  clock->advance(dur("PT1H"));
  EXPECT_EQ(service->handle(request("GET", "/0")).body, a);
}

TEST_F(ServiceTest, PostErrors) {
  EXPECT_EQ(service->handle(request("POST", "/", "<a> <b>", "text/turtle")).status, 400);
  EXPECT_EQ(service->handle(request("POST", "/", "{}", "application/ld+json")).status, 415);
  EXPECT_EQ(service->handle(request("POST", "/", "", "")).status, 415);
  EXPECT_EQ(service->handle(request("POST", "/", "", "text/turtle; charset=utf-8")).status, 201);
  EXPECT_EQ(service->handle(request("POST", "/0", "")).status, 405);
  EXPECT_EQ(service->handle(request("POST", "/nope/deeper", "")).status, 404);
}

TEST_F(ServiceTest, UntimestampedPostIsAcceptedWithWarning) {
  std::vector<std::string> warnings;
  service->set_logger([&](const std::string& m) { warnings.push_back(m); });
  ASSERT_EQ(service->handle(request("PUT", "/", kFigureWindow)).status, 204);
  EXPECT_EQ(service->handle(request("POST", "/", "<> a <http://example.org/Thing> .")).status, 201);
  EXPECT_EQ(warnings.size(), 1u);
}

TEST_F(ServiceTest, PutValidation) {
  EXPECT_EQ(service->handle(request("PUT", "/", "<> <http://e/p> ")).status, 400);
  auto missing = service->handle(request("PUT", "/", R"(
    <> <https://solid.ti.rw.fau.de/public/ns/stream-containers#window> [
      <http://www.w3.org/ns/ldp#membershipResource> <#w> ;
      <https://solid.ti.rw.fau.de/public/ns/stream-containers#contentTimestampRelation> <http://e/t> ;
      <https://solid.ti.rw.fau.de/public/ns/stream-containers#physical> 3 ] .)"));
  EXPECT_EQ(missing.status, 400);
  EXPECT_NE(missing.body.find("hasMemberRelation"), std::string::npos) << missing.body;
  EXPECT_EQ(service->handle(request("PUT", "/", kFigureWindow, "text/plain")).status, 415);
  EXPECT_EQ(service->handle(request("PUT", "/", "")).status, 204) << "no windows is a valid document";
}

TEST_F(ServiceTest, PutIsIdempotent) {
  load_figure();
  clock->set(ts("2021-07-20T10:51:10Z"));
  auto before = service->handle(request("GET", "/")).body;
  ASSERT_EQ(service->handle(request("PUT", "/", kFigureWindow)).status, 204);
  EXPECT_EQ(service->handle(request("GET", "/")).body, before);
  ASSERT_EQ(service->handle(request("PUT", "/", before)).status, 204) << "a GET body can be PUT back";
  EXPECT_EQ(service->handle(request("GET", "/")).body, before);
}

TEST_F(ServiceTest, DeleteRemovesFromContainmentAndWindows) {
  load_figure();
  clock->set(ts("2021-07-20T10:51:10Z"));
  EXPECT_EQ(service->handle(request("DELETE", "/2")).status, 204);
  EXPECT_EQ(service->handle(request("DELETE", "/2")).status, 404);
  EXPECT_EQ(service->handle(request("GET", "/2")).status, 404);
  auto g = rdf::parse_turtle(service->handle(request("GET", "/")).body, kOrigin + "/");
  EXPECT_EQ(g.objects(test::I(kOrigin + "/"), test::I(v::ldp::contains)).size(), 3u);
  EXPECT_EQ(g.objects(test::I(kOrigin + "/#window1"), test::I("http://example.org/inWindow")),
            std::vector<rdf::Term>{test::I(kOrigin + "/3")});
  EXPECT_EQ(service->handle(request("GET", "/3")).status, 200) << "other paths are untouched";
  EXPECT_EQ(service->handle(request("DELETE", "/")).status, 405);
}

TEST_F(ServiceTest, AcceptAndOptions) {
  auto r = request("GET", "/");
  r.headers.emplace("Accept", "application/ld+json");
  EXPECT_EQ(service->handle(r).status, 406);
  r.headers.clear();
  r.headers.emplace("Accept", "application/ld+json;q=0.9, text/turtle;q=0.5");
  EXPECT_EQ(service->handle(r).status, 200);
  r.headers.clear();
  r.headers.emplace("Accept", "*/*");
  EXPECT_EQ(service->handle(r).status, 200);
  EXPECT_TRUE(accepts_turtle("text/*"));
  EXPECT_FALSE(accepts_turtle("text/turtle;q=0"));
  auto options = service->handle(request("OPTIONS", "/"));
  EXPECT_EQ(options.status, 204);
  EXPECT_NE(options.header("Allow").value_or("").find("POST"), std::string::npos);
  EXPECT_EQ(service->handle(request("PATCH", "/")).status, 405);
  EXPECT_EQ(service->handle(request("HEAD", "/")).body, "");
}

TEST_F(ServiceTest, UnknownTargets) {
  EXPECT_EQ(service->handle(request("GET", "/7")).status, 404);
  EXPECT_EQ(service->handle(request("GET", "/abc")).status, 404);
  EXPECT_EQ(service->handle(request("GET", "/007")).status, 404);
}

TEST_F(ServiceTest, SweepAppliesRetention) {
  auto retained = std::make_shared<ContainerService>(kOrigin, clock);
  retained->add_container("/stream", dur("P1D"));
  ASSERT_EQ(retained->handle(request("PUT", "/stream", kFigureWindow)).status, 204);
  auto old = retained->handle(request("POST", "/stream", observation_body("2021-07-20T10:00:00Z")));
  auto fresh = retained->handle(request("POST", "/stream", observation_body("2021-07-21T10:00:00Z")));
  clock->set(ts("2021-07-21T11:00:00Z"));
  EXPECT_EQ(retained->sweep(), std::vector<std::string>{old.header("Location").value()});
  EXPECT_EQ(retained->handle(request("GET", "/stream/1")).status, 200);
  EXPECT_EQ(retained->handle(request("GET", "/stream/0")).status, 404);
}

TEST(ContainerRegistry, RejectsOverlappingPaths) {
  ContainerRegistry registry;
  registry.add("/a", "http://h/a", std::nullopt);
  EXPECT_THROW(registry.add("/a/", "http://h/a", std::nullopt), std::invalid_argument);
  EXPECT_THROW(registry.add("/a/b", "http://h/a/b", std::nullopt), std::invalid_argument);
  EXPECT_THROW(registry.add("/", "http://h/", std::nullopt), std::invalid_argument);
  EXPECT_NO_THROW(registry.add("/ab", "http://h/ab", std::nullopt));
  EXPECT_EQ(registry.route("/a").container->path, "/a");
  EXPECT_EQ(registry.route("/a/3?x").element_path, "/3");
  EXPECT_EQ(registry.route("/b").container, nullptr);
  EXPECT_EQ(ContainerRegistry::normalize("a/b//"), "/a/b");
}

TEST_F(ServiceTest, DumpAndLoadPreserveState) {
  load_figure();
  service->handle(request("DELETE", "/1"));
  auto dir = std::filesystem::temp_directory_path() / "sc-dump-test";
  std::filesystem::remove_all(dir);
  service->dump("/", dir);
  auto copy = std::make_shared<ContainerService>(kOrigin, clock);
  copy->add_container("/");
  copy->load("/", dir);
  clock->set(ts("2021-07-20T10:51:10Z"));
  EXPECT_EQ(copy->handle(request("GET", "/")).body, service->handle(request("GET", "/")).body);
  EXPECT_EQ(copy->handle(request("GET", "/3")).body, service->handle(request("GET", "/3")).body);
  EXPECT_EQ(copy->handle(request("POST", "/", "")).header("Location"), kOrigin + "/4");
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace sc::server
