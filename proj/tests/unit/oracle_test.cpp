#include <gtest/gtest.h>

#include <random>

#include "sc/oracle/scenario.hpp"
#include "sc/oracle/semantics.hpp"
#include "sc/oracle/simulation.hpp"
#include "support.hpp"

namespace sc::oracle {
namespace {

namespace v = rdf::vocab;
using test::dur;
using test::ms;
using test::ts;

const std::string kPred(v::sosa::result_time);

std::vector<rdf::Graph> random_graphs(std::mt19937_64& rng, int n, rdf::Timestamp base, int spread_seconds) {
  std::vector<rdf::Graph> out;
  for (int i = 0; i < n; ++i) {
    rdf::Graph g;
    auto subject = rdf::iri("http://e/" + std::to_string(i));
    auto stamps = static_cast<int>(rng() % 4);
    for (int k = 0; k < stamps; ++k) {
      auto t = base + rdf::Duration::from_seconds(static_cast<std::int64_t>(rng() % static_cast<unsigned>(spread_seconds)));
      g.insert(subject, test::I(rng() % 5 ? kPred : "http://e/other"), rdf::timestamp_literal(t));
    }
    out.push_back(g);
  }
  return out;
}

TEST(TupleStream, ExampleObservationGivesOnePair) {
  std::vector<rdf::Graph> graphs = {test::observation(rdf::iri("http://e/3"), 22.3, {ts("2021-07-20T10:51:08.657Z")}),
                                    test::observation(rdf::iri("http://e/4"), 22.3, {})};
  auto s = to_tuple_stream(graphs, kPred);
  ASSERT_EQ(s.pairs.size(), 1u);
  EXPECT_EQ(s.pairs[0].graph, 0u);
  EXPECT_EQ(s.pairs[0].t, ts("2021-07-20T10:51:08.657Z"));
}

TEST(TupleStream, PairsMatchATripleScan) {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 100; ++round) {
    auto graphs = random_graphs(rng, 20, ts("2021-07-20T10:00:00Z"), 600);
    auto s = to_tuple_stream(graphs, kPred);
    std::multiset<std::pair<std::size_t, rdf::Timestamp>> expected, actual;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      std::set<rdf::Timestamp> distinct;
      for (const auto& t : graphs[i]) {
        if (t.predicate.as_iri().value == kPred) distinct.insert(rdf::parse_timestamp(t.object.as_literal().lexical));
      }
      for (auto t : distinct) expected.insert({i, t});
    }
    for (const auto& p : s.pairs) actual.insert({p.graph, p.t});
    ASSERT_EQ(actual, expected);
  }
}

TEST(InstantWindow, IntervalIsOpenBelowClosedAbove) {
  std::vector<rdf::Graph> graphs = {test::observation(rdf::blank("o"), 1, {ts("2021-07-20T10:00:00Z")}),
                                    test::observation(rdf::blank("o"), 1, {ts("2021-07-20T10:01:00Z")})};
  auto s = to_tuple_stream(graphs, kPred);
  auto w = instant_window(s, ts("2021-07-20T10:00:00Z"), ts("2021-07-20T10:01:00Z"));
  EXPECT_EQ(w.members, std::set<std::size_t>{1});
  EXPECT_TRUE(instant_window(s, ts("2021-07-20T10:01:00Z"), ts("2021-07-20T10:01:00Z")).members.empty());
  EXPECT_THROW(instant_window(s, ts("2021-07-20T10:02:00Z"), ts("2021-07-20T10:01:00Z")), std::invalid_argument);
}

TEST(InstantWindow, EqualsLinearScan) {
  std::mt19937_64 rng(10);
  auto base = ts("2021-07-20T10:00:00Z");
  for (int round = 0; round < 200; ++round) {
    auto graphs = random_graphs(rng, 30, base, 300);
    auto s = to_tuple_stream(graphs, kPred);
    auto o = base + rdf::Duration::from_seconds(static_cast<std::int64_t>(rng() % 300));
    auto c = o + rdf::Duration::from_seconds(static_cast<std::int64_t>(rng() % 200));
    std::set<std::size_t> expected;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (const auto& t : graphs[i]) {
        if (t.predicate.as_iri().value != kPred) continue;
        auto when = rdf::parse_timestamp(t.object.as_literal().lexical);
        if (o < when && when <= c) expected.insert(i);
      }
    }
    ASSERT_EQ(instant_window(s, o, c).members, expected);
  }
}

TEST(SlidingWindows, BoundsAndTiling) {
  TupleStream empty;
  auto one = sliding_window_sequence(empty, {dur("PT1M"), dur("PT1M"), ts("2021-07-20T10:00:00Z")}, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].open, ts("2021-07-20T09:59:00Z"));
  EXPECT_EQ(one[0].close, ts("2021-07-20T10:00:00Z"));
  auto tiles = sliding_window_sequence(empty, {dur("PT1M"), dur("PT1M"), ts("2021-07-20T10:00:00Z")}, 5);
  for (std::size_t i = 0; i + 1 < tiles.size(); ++i) EXPECT_EQ(tiles[i].close, tiles[i + 1].open);
  EXPECT_THROW(sliding_window_sequence(empty, {rdf::Duration{}, dur("PT1M"), ts("2021-07-20T10:00:00Z")}, 1),
               std::invalid_argument);
}

TEST(SlidingWindows, ShiftInvariance) {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 50; ++round) {
    auto base = ts("2021-07-20T10:00:00Z");
    auto shift = rdf::Duration::from_seconds(static_cast<std::int64_t>(rng() % 100000));
    auto graphs = random_graphs(rng, 25, base, 900);
    std::vector<rdf::Graph> shifted;
    for (const auto& g : graphs) {
      rdf::Graph h;
      for (const auto& t : g) {
        h.insert(t.subject, t.predicate,
                 rdf::timestamp_literal(rdf::parse_timestamp(t.object.as_literal().lexical) + shift));
      }
      shifted.push_back(h);
    }
    SlidingWindowSpec spec{rdf::Duration::from_seconds(static_cast<std::int64_t>(1 + rng() % 300)),
                           rdf::Duration::from_seconds(static_cast<std::int64_t>(1 + rng() % 300)), base};
    SlidingWindowSpec moved = spec;
    moved.t0 = base + shift;
    auto a = sliding_window_sequence(to_tuple_stream(graphs, kPred), spec, 10);
    auto b = sliding_window_sequence(to_tuple_stream(shifted, kPred), moved, 10);
    for (std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(a[i].members, b[i].members);
  }
}

TEST(SlidingWindows, MonotoneStreamMembershipIsBounded) {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 50; ++round) {
    auto base = ts("2021-07-20T10:00:00Z");
    std::vector<rdf::Graph> graphs;
    auto t = base;
    for (int i = 0; i < 40; ++i) {
      t = t + rdf::Duration::from_millis(static_cast<std::int64_t>(rng() % 20000));
      graphs.push_back(test::observation(rdf::blank("o"), i, {t}));
    }
    auto alpha = rdf::Duration::from_seconds(static_cast<std::int64_t>(1 + rng() % 60));
    auto beta = alpha + rdf::Duration::from_seconds(static_cast<std::int64_t>(rng() % 60));
    auto windows = sliding_window_sequence(to_tuple_stream(graphs, kPred), {alpha, beta, base}, 60);
    auto bound = (alpha.millis() + beta.millis() - 1) / beta.millis();
    for (std::size_t g = 0; g < graphs.size(); ++g) {
      std::int64_t count = 0;
      for (const auto& w : windows) count += w.members.contains(g);
      ASSERT_LE(count, bound);
    }
  }
}

client::PollTrace trace_of(std::vector<std::set<std::string>> cycles, rdf::Timestamp t0, rdf::Duration beta) {
  client::PollTrace trace;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    client::PollCycle c;
    c.index = i;
    c.scheduled = t0 + beta * static_cast<std::int64_t>(i);
    client::WindowSnapshot s;
    s.t_eval = c.scheduled;
    for (const auto& iri : cycles[i]) s.members[iri] = rdf::Graph{};
    c.snapshot = s;
    trace.cycles.push_back(c);
  }
  return trace;
}

TEST(CheckEquivalence, EmptyStreamPasses) {
  SlidingWindowSpec spec{dur("PT1M"), dur("PT10S"), ts("2021-07-20T10:00:00Z")};
  auto report = check_equivalence(trace_of({{}, {}, {}}, spec.t0, spec.beta), spec, {}, {}, 3);
  EXPECT_TRUE(report.pass) << report.to_text();
}

TEST(CheckEquivalence, ReportsFirstDivergenceAndLengthMismatch) {
  SlidingWindowSpec spec{dur("PT1M"), dur("PT10S"), ts("2021-07-20T10:00:00Z")};
  std::vector<rdf::Graph> graphs = {rdf::Graph{}};
  graphs[0].insert(rdf::iri("http://e/a"), test::I(kPred), rdf::timestamp_literal(ts("2021-07-20T10:00:15Z")));
  auto stream = to_tuple_stream(graphs, kPred);
  std::map<std::string, std::size_t> index = {{"http://h/0", 0}};

  auto good = trace_of({{}, {}, {"http://h/0"}}, spec.t0, spec.beta);
  good.cycles[2].snapshot->members["http://h/0"] = graphs[0];
  EXPECT_TRUE(check_equivalence(good, spec, stream, index, 3).pass);

  auto early = trace_of({{}, {"http://h/0"}, {"http://h/0"}}, spec.t0, spec.beta);
  auto report = check_equivalence(early, spec, stream, index, 3);
  EXPECT_FALSE(report.pass);
  EXPECT_EQ(report.first_divergence, 1u);
  EXPECT_NE(report.detail.find("http://h/0"), std::string::npos) << report.detail;

  auto short_trace = trace_of({{}, {}}, spec.t0, spec.beta);
  auto mismatch = check_equivalence(short_trace, spec, stream, index, 3);
  EXPECT_FALSE(mismatch.pass);
  EXPECT_NE(mismatch.detail.find("cycles"), std::string::npos);

  auto wrong_content = good;
  wrong_content.cycles[2].snapshot->members["http://h/0"] = rdf::Graph{};
  EXPECT_FALSE(check_equivalence(wrong_content, spec, stream, index, 3).pass);

  auto late = good;
  late.cycles[1].snapshot->t_eval = late.cycles[1].snapshot->t_eval + ms(1);
  EXPECT_FALSE(check_equivalence(late, spec, stream, index, 3).pass);

  auto stranger = trace_of({{}, {}, {"http://h/0", "http://h/9"}}, spec.t0, spec.beta);
  stranger.cycles[2].snapshot->members["http://h/0"] = graphs[0];
  EXPECT_FALSE(check_equivalence(stranger, spec, stream, index, 3).pass);
}

TEST(Simulation, ZeroLatencyArrivesImmediately) {
  SimulatedEnvironment env(ms(0), ts("2021-07-20T10:00:00Z"));
  auto service = env.add_service("http://sim.example");
  service->add_container("/s");
  auto r = env.transport().send({"GET", "http://sim.example/s", {}, {}});
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(env.transport().log().at(0).arrived, ts("2021-07-20T10:00:00Z"));
  EXPECT_EQ(r.header("Evaluation-Time"), "2021-07-20T10:00:00.000Z");
}

TEST(Simulation, ConcurrentRequestsShareOneDelay) {
  SimulatedEnvironment env(ms(250), ts("2021-07-20T10:00:00Z"));
  auto service = env.add_service("http://sim.example");
  service->add_container("/s");
  auto responses = env.transport().send_all(
      {{"GET", "http://sim.example/s", {}, {}}, {"GET", "http://sim.example/s", {}, {}}});
  EXPECT_EQ(responses.size(), 2u);
  EXPECT_EQ(env.clock().now(), ts("2021-07-20T10:00:00.250Z"));
  EXPECT_EQ(env.transport().log()[0].arrived, env.transport().log()[1].arrived);
  EXPECT_THROW(SimulatedTransport(env.clock(), ms(-1)), std::invalid_argument);
}

TEST(Simulation, ClockRunsEventsInOrder) {
  VirtualClock clock(ts("2021-07-20T10:00:00Z"));
  std::vector<int> order;
  clock.schedule(ts("2021-07-20T10:00:02Z"), [&] { order.push_back(2); });
  clock.schedule(ts("2021-07-20T10:00:01Z"), [&] { order.push_back(1); });
  clock.schedule(ts("2021-07-20T10:00:02Z"), [&] { order.push_back(3); });
  EXPECT_TRUE(clock.sleep_until(ts("2021-07-20T10:00:01.500Z")));
  EXPECT_EQ(order, std::vector<int>{1});
  EXPECT_TRUE(clock.sleep_until(ts("2021-07-20T10:00:05Z")));
  EXPECT_EQ(order, (std::vector<int>{1, 2, 3}));
  EXPECT_FALSE(clock.sleep_until(ts("2021-07-20T10:00:04Z")));
  EXPECT_EQ(clock.now(), ts("2021-07-20T10:00:05Z"));
}

TEST(Scenario, ParsesDirectivesAndElements) {
  auto s = load_scenario(test::scenario_dir() / "figure-example" / "scenario.txt");
  EXPECT_EQ(s.alpha, dur("PT2M"));
  EXPECT_EQ(s.beta, dur("PT30S"));
  EXPECT_EQ(s.cycles, 3u);
  ASSERT_EQ(s.elements.size(), 4u);
  EXPECT_EQ(s.elements[3].offset, dur("PT58.657S"));
  EXPECT_THROW(parse_scenario("bogus = 1", "."), ScenarioError);
  EXPECT_THROW(parse_scenario("PT1S", "."), ScenarioError);
  EXPECT_THROW(parse_scenario("PT1S missing-file.ttl", "."), ScenarioError);
  EXPECT_THROW(parse_scenario("cycles = two", "."), ScenarioError);
  EXPECT_TRUE(parse_scenario("# nothing\n\n", ".").elements.empty());
}

TEST(Scenario, OverridesWinOverFileValues) {
  Scenario s;
  s.alpha = dur("PT5M");
  auto p = resolve_parameters(s);
  EXPECT_EQ(p.alpha, dur("PT5M"));
  EXPECT_EQ(p.beta, dur("PT10S"));
  EXPECT_EQ(p.cycles, 10u);
  EXPECT_EQ(p.predicate, kPred);
  VerifyOverrides o;
  o.alpha = dur("PT1S");
  EXPECT_EQ(resolve_parameters(s, o).alpha, dur("PT1S"));
}

TEST(Scenario, RandomScenariosRespectBounds) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto s = random_scenario(seed);
    ASSERT_LE(s.elements.size(), 100u);
    ASSERT_GE(*s.alpha, dur("PT1S"));
    ASSERT_LE(*s.alpha, dur("PT10M"));
    ASSERT_GE(*s.beta, dur("PT1S"));
    ASSERT_LE(*s.beta, dur("PT10M"));
    ASSERT_LE(*s.cycles, 20u);
    ASSERT_LT(s.latency->millis() * 2, s.beta->millis());
  }
  EXPECT_EQ(random_scenario(77).elements.size(), random_scenario(77).elements.size());
}

TEST(Verification, FigureScenarioEndsWithTwoAndThree) {
  auto s = load_scenario(test::scenario_dir() / "figure-example" / "scenario.txt");
  auto result = run_verification(s, resolve_parameters(s));
  EXPECT_TRUE(result.report.pass) << result.report.to_text();
  ASSERT_EQ(result.trace.cycles.size(), 3u);
  std::set<std::string> last;
  for (const auto& [iri, _] : result.trace.cycles.back().snapshot->members) last.insert(iri);
  EXPECT_EQ(last, (std::set<std::string>{result.locations[2], result.locations[3]}));
}

TEST(Verification, LateElementAppearsInTheNextWindow) {
  // Stamped before cycle 1's evaluation but posted just after it: the
  // container cannot show it at cycle 1, so the observed trace diverges from
  // the oracle there, and the element first appears at cycle 2.
  Scenario s;
  s.alpha = dur("PT1M");
  s.beta = dur("PT10S");
  s.t0 = ts("2021-07-20T10:00:00Z");
  s.cycles = 3;
  s.latency = ms(20);
  rdf::Graph g;
  g.insert(rdf::iri("http://e/late"), test::I(kPred), rdf::timestamp_literal(ts("2021-07-20T10:00:05Z")));
  s.elements.push_back({dur("PT10.001S"), g, "late"});
  auto result = run_verification(s, resolve_parameters(s));
  EXPECT_TRUE(result.trace.cycles[1].snapshot->members.empty());
  EXPECT_EQ(result.trace.cycles[2].snapshot->members.size(), 1u);
  EXPECT_FALSE(result.report.pass);
  EXPECT_EQ(result.report.first_divergence, 1u);

  // Posted between evaluations with a timestamp in that gap: first member in
  // the following window, and the oracle agrees.
  s.elements[0] = {dur("PT10.001S"), g, "on time"};
  s.elements[0].graph = rdf::Graph{};
  s.elements[0].graph.insert(rdf::iri("http://e/x"), test::I(kPred),
                             rdf::timestamp_literal(ts("2021-07-20T10:00:10.001Z")));
  auto ok = run_verification(s, resolve_parameters(s));
  EXPECT_TRUE(ok.report.pass) << ok.report.to_text();
  EXPECT_TRUE(ok.trace.cycles[1].snapshot->members.empty());
  EXPECT_EQ(ok.trace.cycles[2].snapshot->members.size(), 1u);
}

TEST(Verification, IsReproducible) {
  auto a = run_verification(random_scenario(3), resolve_parameters(random_scenario(3)));
  auto b = run_verification(random_scenario(3), resolve_parameters(random_scenario(3)));
  EXPECT_EQ(a.report.to_text(), b.report.to_text());
  EXPECT_EQ(a.locations, b.locations);
}

}  // namespace
}  // namespace sc::oracle
