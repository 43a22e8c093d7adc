#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <csignal>
#include <iostream>
#include <random>
#include <thread>

#include "sc/client/stream_client.hpp"
#include "sc/core/window_spec.hpp"
#include "sc/oracle/scenario.hpp"
#include "sc/oracle/simulation.hpp"
#include "sc/rdf/iri.hpp"
#include "sc/rdf/turtle.hpp"
#include "sc/rdf/vocab.hpp"
#include "sc/server/http_server.hpp"

namespace sc::cli {

namespace v = rdf::vocab;

namespace {

std::atomic<bool> g_stop{false};

extern "C" void on_signal(int) { g_stop = true; }

// CLI11 validators that reuse the library parsers, so bad values are caught
// before anything touches the network.
const CLI::Validator kDuration(
    [](std::string& s) {
      try {
        rdf::parse_duration(s);
        return std::string();
      } catch (const std::exception& e) {
        return std::string("invalid duration: ") + e.what();
      }
    },
    "DURATION");

const CLI::Validator kPositiveDuration(
    [](std::string& s) {
      try {
        if (rdf::parse_duration(s).millis() <= 0) return std::string("duration must be positive");
        return std::string();
      } catch (const std::exception& e) {
        return std::string("invalid duration: ") + e.what();
      }
    },
    "DURATION>0");

const CLI::Validator kTimestamp(
    [](std::string& s) {
      try {
        rdf::parse_timestamp(s);
        return std::string();
      } catch (const std::exception& e) {
        return std::string("invalid timestamp: ") + e.what();
      }
    },
    "TIMESTAMP");

const CLI::Validator kIriLike(
    [](std::string& s) {
      try {
        expand_iri(s, "http://validation.invalid/");
        return std::string();
      } catch (const std::exception& e) {
        return std::string(e.what());
      }
    },
    "IRI");

const CLI::Validator kAbsoluteIri(
    [](std::string& s) {
      try {
        auto e = expand_iri(s);
        (void)e;
        return std::string();
      } catch (const std::exception& e) {
        return std::string(e.what());
      }
    },
    "IRI");

std::optional<rdf::Duration> opt_duration(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return rdf::parse_duration(s);
}

std::optional<rdf::Timestamp> opt_timestamp(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return rdf::parse_timestamp(s);
}

// ---------------------------------------------------------------- serve

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string base_iri;
  std::vector<std::string> containers;
  std::string retention;
  std::string sweep_period = "PT1M";
  std::string simulated_clock;
};

int serve(const ServeOptions& o, std::ostream& out, std::ostream& err) {
  server::ServerConfig config;
  config.host = o.host;
  config.port = o.port;
  config.containers = o.containers.empty() ? std::vector<std::string>{"/stream"} : o.containers;
  config.retention = opt_duration(o.retention);
  config.sweep_period = rdf::parse_duration(o.sweep_period);
  config.simulated_clock_start = opt_timestamp(o.simulated_clock);
  if (!o.base_iri.empty()) {
    auto parts = rdf::split_iri(o.base_iri);
    if (!rdf::is_absolute_iri(o.base_iri) || parts.fragment || parts.query || !parts.authority ||
        (parts.path != "" && parts.path != "/")) {
      err << "error: --base-iri must be an absolute origin such as http://example.org\n";
      return 2;
    }
    config.base_iri = o.base_iri.back() == '/' ? o.base_iri.substr(0, o.base_iri.size() - 1) : o.base_iri;
  }

  server::HttpServer http(nullptr);
  int port = 0;
  try {
    port = http.bind(config.host, config.port);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  auto service = server::make_service(config, port);
  service->set_logger([&err](const std::string& m) { err << "warning: " << m << "\n"; });
  http.set_service(service);
  if (config.retention) http.start_sweeper(config.sweep_period);

  g_stop = false;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  http.start();
  for (const auto& path : config.containers) out << "serving " << service->container_iri(path) << "\n";
  out.flush();
  while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(100));
  http.stop();
  return 0;
}

// ------------------------------------------------------------- generate

struct GenerateOptions {
  std::string target;
  std::string period = "PT1S";
  std::size_t count = 10;
  std::string property = "ex:temperature";
  std::string range = "15..30";
  std::string start;
  std::uint64_t seed = std::random_device{}();
};

std::pair<double, double> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("range must look like min..max");
  std::size_t used = 0;
  auto lo = std::stod(s.substr(0, dots), &used);
  if (used != dots) throw std::invalid_argument("bad range minimum");
  auto hi_text = s.substr(dots + 2);
  auto hi = std::stod(hi_text, &used);
  if (used != hi_text.size()) throw std::invalid_argument("bad range maximum");
  if (lo > hi) throw std::invalid_argument("range minimum exceeds maximum");
  return {lo, hi};
}

int generate(const GenerateOptions& o, std::ostream& out, std::ostream& err) {
  auto [lo, hi] = parse_range(o.range);
  auto target = expand_iri(o.target);
  auto property = expand_iri(o.property);
  auto period = rdf::parse_duration(o.period);
  auto start = opt_timestamp(o.start);

  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> values(lo, hi);
  core::SystemClock clock;
  client::HttpTransport transport;
  auto first = clock.now();
  for (std::size_t i = 0; i < o.count; ++i) {
    rdf::Timestamp t;
    if (start) {
      // Synthetic timestamps: post back to back.
      t = *start + period * static_cast<std::int64_t>(i);
    } else {
      auto due = first + period * static_cast<std::int64_t>(i);
      clock.sleep_until(due);
      t = clock.now();
    }
    // One decimal place, like the readings in the example observation.
    char value[32];
    std::snprintf(value, sizeof value, "%.1f", values(rng));
    rdf::Graph g;
    auto self = rdf::iri("");
    g.insert(self, rdf::iri(std::string(v::rdf::type)), rdf::iri(std::string(v::sosa::observation)));
    g.insert(self, rdf::iri(std::string(v::sosa::observed_property)), rdf::iri(property));
    g.insert(self, rdf::iri(std::string(v::sosa::has_simple_result)),
             rdf::typed_literal(value, std::string(v::xsd::decimal)));
    g.insert(self, rdf::iri(std::string(v::sosa::result_time)), rdf::timestamp_literal(t));
    auto body = rdf::serialize_turtle(g, "", rdf::default_prefixes());
    http::Response response;
    try {
      response = transport.send(client::post_turtle(target, body));
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
    if (response.status != 201) {
      err << "error: POST <" << target << "> returned " << response.status << ": " << response.body << "\n";
      return 1;
    }
    out << response.header("Location").value_or("") << "\n";
  }
  return 0;
}

// --------------------------------------------------------------- window

struct WindowOptions {
  std::string container;
  std::string membership_resource;
  std::string member_relation;
  std::string timestamp_relation = "sosa:resultTime";
  std::string logical;
  std::uint64_t physical = 0;
};

int window(const WindowOptions& o, std::ostream& out, std::ostream& err) {
  auto container = expand_iri(o.container);
  std::optional<core::WindowSpec> spec;
  try {
    auto resource = expand_iri(o.membership_resource, container);
    auto relation = expand_iri(o.member_relation, container);
    auto stamp = expand_iri(o.timestamp_relation, container);
    spec = o.logical.empty() ? core::WindowSpec::physical(relation, resource, stamp, o.physical)
                             : core::WindowSpec::logical(relation, resource, stamp, rdf::parse_duration(o.logical));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  rdf::Graph body;
  auto self = rdf::iri(container);
  body.insert(self, rdf::iri(std::string(v::rdf::type)), rdf::iri(std::string(v::ldpsc::stream_container)));
  core::describe_window(body, self, rdf::blank("w"), *spec);
  client::HttpTransport transport;
  http::Response response;
  try {
    response = transport.send(client::put_turtle(container, rdf::serialize_turtle(body, container, rdf::default_prefixes())));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (response.status / 100 != 2) {
    err << "error: PUT <" << container << "> returned " << response.status << ": " << response.body << "\n";
    return 1;
  }
  out << "window " << core::to_string(*spec) << " set on <" << container << ">\n";
  return 0;
}

// --------------------------------------------------------------- client

struct ClientOptions {
  std::string container;
  std::string window;
  std::string t0 = "now";
  std::string beta = "PT10S";
  std::optional<std::size_t> count;
  std::string op = "rstream";
  std::string merge = "union";
  std::string transform = "identity";
  std::string value_property = "sosa:hasSimpleResult";
  std::string sink;
  std::string timestamp_relation = "sosa:resultTime";
  std::string transport = "real";
  std::string fixture;
  std::string delta = "PT0.05S";
};

int client_command(const ClientOptions& o, std::ostream& out, std::ostream& err) {
  auto container = expand_iri(o.container);
  auto window = expand_iri(o.window.empty() ? "#window1" : o.window, container);
  auto op = client::parse_stream_operator(o.op);
  auto beta = rdf::parse_duration(o.beta);
  auto delta = rdf::parse_duration(o.delta);
  auto stamp_relation = expand_iri(o.timestamp_relation);
  auto sink = o.sink.empty() ? std::string() : expand_iri(o.sink);
  client::GraphTransform fn = client::identity_transform;
  if (o.transform == "average") {
    fn = client::average_transform(expand_iri(o.value_property), std::string(v::ex::ns) + "average");
  } else if (o.transform != "identity") {
    err << "error: --transform must be identity or average\n";
    return 2;
  }
  if (o.transport == "simulated" && o.fixture.empty()) {
    err << "error: --transport simulated needs --fixture <dump directory>\n";
    return 2;
  }
  if (o.count && *o.count == 0) return 0;

  std::unique_ptr<core::Clock> real_clock;
  std::unique_ptr<oracle::SimulatedEnvironment> sim;
  std::unique_ptr<client::HttpTransport> http;
  core::Clock* clock = nullptr;
  client::Transport* transport = nullptr;

  rdf::Timestamp t0;
  if (o.t0 != "now") t0 = rdf::parse_timestamp(o.t0);
  if (o.transport == "simulated") {
    if (o.t0 == "now") {
      err << "error: --transport simulated needs an explicit --t0\n";
      return 2;
    }
    auto [origin, path] = http::split_origin(container);
    sim = oracle::simulated_environment(delta, t0 - delta - rdf::Duration::from_millis(1));
    auto service = sim->add_service(origin);
    service->add_container(path);
    service->load(path, o.fixture);
    if (!sink.empty()) {
      auto [sink_origin, sink_path] = http::split_origin(sink);
      if (sink_origin != origin) {
        err << "error: a simulated sink must share the container's origin\n";
        return 2;
      }
      if (sink_path != path) service->add_container(sink_path);
    }
    clock = &sim->clock();
    transport = &sim->transport();
  } else if (o.transport == "real") {
    real_clock = std::make_unique<core::SystemClock>();
    http = std::make_unique<client::HttpTransport>();
    clock = real_clock.get();
    transport = http.get();
    if (o.t0 == "now") t0 = clock->now() + delta;
  } else {
    err << "error: --transport must be real or simulated\n";
    return 2;
  }

  g_stop = false;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);

  std::optional<client::WindowSnapshot> previous;
  int status = 0;
  auto handler = [&](const client::PollCycle& cycle) {
    out << "cycle " << cycle.index << " t=" << rdf::format_timestamp(cycle.scheduled);
    if (cycle.overrun) out << " overrun";
    if (!cycle.snapshot) {
      out << " error: " << cycle.error << "\n";
      status = 1;
      return;
    }
    const auto& snap = *cycle.snapshot;
    auto selected = client::derive(op, previous ? &*previous : nullptr, snap);
    out << " members=" << snap.members.size() << " " << client::to_string(op) << "=" << selected.size();
    for (const auto& [iri, g] : selected) out << " <" << iri << ">";
    if (!snap.complete()) out << " incomplete=" << snap.failures.size();
    if (!sink.empty() && !selected.empty()) {
      client::WindowSnapshot view = snap;
      view.members = selected;
      auto result = client::transform(view, client::MergePolicy::union_merge, fn);
      if (!result.empty()) {
        try {
          out << " -> <" << client::emit(*transport, result, stamp_relation, snap.t_eval, sink) << ">";
        } catch (const std::exception& e) {
          out << " emit failed: " << e.what();
          status = 1;
        }
      }
    }
    out << "\n";
    out.flush();
    previous = snap;
  };

  client::PollSchedule schedule{t0, beta, o.count, delta};
  if (o.count) {
    client::run_polling(*clock, *transport, schedule, container, window, handler);
  } else {
    // Unbounded: poll one cycle at a time so a signal can end the loop.
    for (std::size_t i = 0; !g_stop; ++i) {
      client::PollSchedule one{schedule.at(i), beta, 1, delta};
      auto trace = client::run_polling(*clock, *transport, one, container, window, [&](client::PollCycle c) {
        c.index = i;
        handler(c);
      });
      schedule.delta_allowance = trace.cycles.back().delta_estimate;
    }
  }
  return status;
}

// --------------------------------------------------------------- verify

struct VerifyOptions {
  std::string scenario;
  std::string alpha, beta, t0, latency;
  std::optional<std::size_t> cycles;
  std::size_t random = 0;
  std::uint64_t seed = 1;
};

int verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  oracle::VerifyOverrides overrides;
  overrides.alpha = opt_duration(o.alpha);
  overrides.beta = opt_duration(o.beta);
  overrides.t0 = opt_timestamp(o.t0);
  overrides.latency = opt_duration(o.latency);
  overrides.cycles = o.cycles;

  if (o.random > 0) {
    std::size_t failures = 0;
    for (std::size_t i = 0; i < o.random; ++i) {
      auto seed = o.seed + i;
      auto scenario = oracle::random_scenario(seed);
      auto params = oracle::resolve_parameters(scenario, overrides);
      auto result = oracle::run_verification(scenario, params);
      out << "seed " << seed << ": " << scenario.elements.size() << " elements, alpha "
          << rdf::format_duration(params.alpha) << ", beta " << rdf::format_duration(params.beta) << ", "
          << params.cycles << " cycles: " << (result.report.pass ? "PASS" : "FAIL " + result.report.detail) << "\n";
      if (!result.report.pass) ++failures;
    }
    out << (failures == 0 ? "PASS" : "FAIL") << ": " << o.random - failures << "/" << o.random << " scenarios\n";
    return failures == 0 ? 0 : 1;
  }

  oracle::Scenario scenario;
  if (!o.scenario.empty()) {
    try {
      scenario = oracle::load_scenario(o.scenario);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
  }
  auto params = oracle::resolve_parameters(scenario, overrides);
  auto result = oracle::run_verification(scenario, params);
  out << "alpha " << rdf::format_duration(params.alpha) << ", beta " << rdf::format_duration(params.beta) << ", t0 "
      << rdf::format_timestamp(params.t0) << ", " << params.cycles << " cycles, latency "
      << rdf::format_duration(params.latency) << "\n";
  // Print element paths relative to the simulated origin, e.g. "/stream/2".
  auto text = result.report.to_text();
  for (auto pos = text.find("http://sim.example"); pos != std::string::npos; pos = text.find("http://sim.example"))
    text.erase(pos, std::string_view("http://sim.example").size());
  out << text;
  return result.report.pass ? 0 : 1;
}

}  // namespace

std::string expand_iri(const std::string& value, const std::string& base) {
  if (value.empty()) throw std::invalid_argument("empty IRI");
  if (value.front() == '<' && value.back() == '>') return expand_iri(value.substr(1, value.size() - 2), base);
  if (rdf::is_absolute_iri(value) && value.find("://") != std::string::npos) return value;
  if (auto colon = value.find(':'); colon != std::string::npos) {
    auto prefix = value.substr(0, colon);
    const auto& prefixes = rdf::default_prefixes();
    if (auto it = prefixes.find(prefix); it != prefixes.end()) return it->second + value.substr(colon + 1);
    if (rdf::is_absolute_iri(value)) return value;
  }
  if (!base.empty() && (value.front() == '#' || value.front() == '/' || value.front() == '.')) {
    return rdf::resolve_iri(base, value);
  }
  throw std::invalid_argument("'" + value + "' is not an absolute IRI or known prefixed name");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stream Containers: pull-based RDF stream processing over HTTP", "stream-containers"};
  app.require_subcommand(1);

  ServeOptions serve_opts;
  auto* serve_cmd = app.add_subcommand("serve", "Run a Stream Container server");
  serve_cmd->add_option("--host", serve_opts.host, "Bind address")->capture_default_str();
  serve_cmd->add_option("--port", serve_opts.port, "TCP port (0 picks a free one)")
      ->envname("SC_PORT")
      ->check(CLI::Range(0, 65535))
      ->capture_default_str();
  serve_cmd->add_option("--base-iri", serve_opts.base_iri, "Public origin of the server")->envname("SC_BASE_IRI");
  serve_cmd->add_option("--container", serve_opts.containers, "Container path (repeatable; default /stream)");
  serve_cmd->add_option("--retention", serve_opts.retention, "Drop elements older than this")->check(kPositiveDuration);
  serve_cmd->add_option("--sweep-period", serve_opts.sweep_period, "Retention sweep interval")
      ->check(kPositiveDuration)
      ->capture_default_str();
  serve_cmd->add_option("--simulated-clock", serve_opts.simulated_clock, "Start the server clock at this instant")
      ->check(kTimestamp);

  GenerateOptions gen_opts;
  auto* gen_cmd = app.add_subcommand("generate", "POST SOSA observations to a container");
  gen_cmd->add_option("--target", gen_opts.target, "Container IRI")->required()->check(kAbsoluteIri);
  gen_cmd->add_option("--period", gen_opts.period, "Time between observations")
      ->check(kPositiveDuration)
      ->capture_default_str();
  gen_cmd->add_option("--count", gen_opts.count, "Number of observations")->capture_default_str();
  gen_cmd->add_option("--property", gen_opts.property, "Observed property IRI")
      ->check(kAbsoluteIri)
      ->capture_default_str();
  gen_cmd->add_option("--range", gen_opts.range, "Value range min..max")
      ->check(CLI::Validator(
          [](std::string& s) {
            try {
              parse_range(s);
              return std::string();
            } catch (const std::exception& e) {
              return std::string(e.what());
            }
          },
          "MIN..MAX"))
      ->capture_default_str();
  gen_cmd->add_option("--start", gen_opts.start, "Stamp observations from this instant instead of the wall clock")
      ->check(kTimestamp);
  gen_cmd->add_option("--seed", gen_opts.seed, "Seed for observation values");

  WindowOptions win_opts;
  auto* win_cmd = app.add_subcommand("window", "PUT a window specification on a container");
  win_cmd->add_option("--container", win_opts.container, "Container IRI")->required()->check(kAbsoluteIri);
  win_cmd->add_option("--membership-resource", win_opts.membership_resource, "Window resource, e.g. '#window1'")
      ->required()
      ->check(kIriLike);
  win_cmd->add_option("--member-relation", win_opts.member_relation, "Membership predicate")
      ->required()
      ->check(kIriLike);
  win_cmd->add_option("--timestamp-relation", win_opts.timestamp_relation, "Timestamp predicate")
      ->check(kIriLike)
      ->capture_default_str();
  auto* logical = win_cmd->add_option("--logical", win_opts.logical, "Logical window size")->check(kPositiveDuration);
  auto* physical =
      win_cmd->add_option("--physical", win_opts.physical, "Physical window size")->check(CLI::PositiveNumber);
  logical->excludes(physical);
  win_cmd->callback([&] {
    if (!*logical && !*physical) throw CLI::ValidationError("exactly one of --logical or --physical is required");
  });

  ClientOptions cl_opts;
  auto* cl_cmd = app.add_subcommand("client", "Poll a window and derive a stream");
  cl_cmd->add_option("--container", cl_opts.container, "Container IRI")->required()->check(kAbsoluteIri);
  cl_cmd->add_option("--window", cl_opts.window, "Window resource IRI (default '#window1')")->check(kIriLike);
  cl_cmd->add_option("--t0", cl_opts.t0, "First evaluation instant, or 'now'")
      ->check(CLI::Validator(
          [](std::string& s) { return s == "now" ? std::string() : kTimestamp(s); }, "TIMESTAMP|now"))
      ->capture_default_str();
  cl_cmd->add_option("--beta", cl_opts.beta, "Polling period")->check(kPositiveDuration)->capture_default_str();
  cl_cmd->add_option("--count", cl_opts.count, "Number of cycles (unbounded when absent)");
  cl_cmd->add_option("--op", cl_opts.op, "Stream operator")
      ->check(CLI::IsMember({"rstream", "istream", "dstream"}))
      ->capture_default_str();
  cl_cmd->add_option("--merge", cl_opts.merge, "Merge policy")->check(CLI::IsMember({"union"}))->capture_default_str();
  cl_cmd->add_option("--transform", cl_opts.transform, "Graph transform")
      ->check(CLI::IsMember({"identity", "average"}))
      ->capture_default_str();
  cl_cmd->add_option("--value-property", cl_opts.value_property, "Property averaged by --transform average")
      ->check(kAbsoluteIri)
      ->capture_default_str();
  cl_cmd->add_option("--sink", cl_opts.sink, "Container receiving results")->check(kAbsoluteIri);
  cl_cmd->add_option("--timestamp-relation", cl_opts.timestamp_relation, "Timestamp predicate for emitted results")
      ->check(kAbsoluteIri)
      ->capture_default_str();
  cl_cmd->add_option("--transport", cl_opts.transport, "real or simulated")
      ->check(CLI::IsMember({"real", "simulated"}))
      ->capture_default_str();
  cl_cmd->add_option("--fixture", cl_opts.fixture, "Container dump served by the simulated transport")
      ->check(CLI::ExistingDirectory);
  cl_cmd->add_option("--delta", cl_opts.delta, "Initial request delay estimate (simulated latency)")
      ->check(kDuration)
      ->capture_default_str();

  VerifyOptions ver_opts;
  auto* ver_cmd = app.add_subcommand("verify", "Check polling traces against the sliding-window oracle");
  ver_cmd->add_option("--scenario", ver_opts.scenario, "Scenario file")->check(CLI::ExistingFile);
  ver_cmd->add_option("--alpha", ver_opts.alpha, "Window size")->check(kPositiveDuration);
  ver_cmd->add_option("--beta", ver_opts.beta, "Polling period")->check(kPositiveDuration);
  ver_cmd->add_option("--t0", ver_opts.t0, "First evaluation instant")->check(kTimestamp);
  ver_cmd->add_option("--cycles", ver_opts.cycles, "Number of polls");
  ver_cmd->add_option("--latency", ver_opts.latency, "Simulated request delay")->check(kDuration);
  auto* random = ver_cmd->add_option("--random", ver_opts.random, "Run N seeded random scenarios instead");
  ver_cmd->add_option("--seed", ver_opts.seed, "First seed for --random")->capture_default_str();
  random->excludes("--scenario");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    auto* failed = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << failed->help();
    return 2;
  }

  try {
    if (*serve_cmd) return serve(serve_opts, out, err);
    if (*gen_cmd) return generate(gen_opts, out, err);
    if (*win_cmd) return window(win_opts, out, err);
    if (*cl_cmd) return client_command(cl_opts, out, err);
    if (*ver_cmd) return verify(ver_opts, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace sc::cli
