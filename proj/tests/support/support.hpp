#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>

#include "sc/rdf/graph.hpp"
#include "sc/rdf/vocab.hpp"
#include "sc/rdf/xsd.hpp"

namespace sc::test {

inline rdf::Term I(std::string_view iri) { return rdf::iri(std::string(iri)); }

inline rdf::Timestamp ts(std::string_view lexical) { return rdf::parse_timestamp(lexical); }
inline rdf::Duration dur(std::string_view lexical) { return rdf::parse_duration(lexical); }
inline rdf::Duration ms(std::int64_t n) { return rdf::Duration::from_millis(n); }

inline std::filesystem::path fixture_dir() { return SC_FIXTURE_DIR; }
inline std::filesystem::path scenario_dir() { return SC_SCENARIO_DIR; }

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// A SOSA observation like the example resource, stamped at each of `times`.
inline rdf::Graph observation(const rdf::Term& subject, double value, std::initializer_list<rdf::Timestamp> times) {
  namespace v = rdf::vocab;
  rdf::Graph g;
  g.insert(subject, I(v::rdf::type), I(v::sosa::observation));
  g.insert(subject, I(v::sosa::observed_property), I(std::string(v::ex::ns) + "temperature"));
  std::ostringstream value_text;
  value_text << value;
  auto lexical = value_text.str();
  if (lexical.find('.') == std::string::npos) lexical += ".0";
  g.insert(subject, I(v::sosa::has_simple_result), rdf::typed_literal(lexical, std::string(v::xsd::decimal)));
  for (auto t : times) g.insert(subject, I(v::sosa::result_time), rdf::timestamp_literal(t));
  return g;
}

// Random graphs that exercise the Turtle writer: relative and prefixed IRIs,
// IRIs that cannot be prefixed names, shared and chained blank nodes, blank
// node cycles, and literals with escapes, language tags and datatypes.
class GraphGenerator {
 public:
  GraphGenerator(std::uint64_t seed, std::string base) : rng_(seed), base_(std::move(base)) {}

  rdf::Graph next() {
    rdf::Graph g;
    blanks_ = pick(0, 5);
    auto triples = pick(0, 25);
    for (int i = 0; i < triples; ++i) g.insert(subject(), predicate(), object());
    if (blanks_ >= 2 && pick(0, 3) == 0) {
      // Blank node cycle: every node referenced once, nothing to anchor on.
      auto p = I(std::string(rdf::vocab::ex::ns) + "next");
      g.insert(rdf::blank("c0"), p, rdf::blank("c1"));
      g.insert(rdf::blank("c1"), p, rdf::blank("c0"));
    }
    return g;
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  rdf::Term named() {
    static const std::vector<std::string> locals = {"a", "b_c", "with-dash", "x1", "has.dot", "1digit", "sp%20ace",
                                                    "", "caf\xC3\xA9"};
    const auto& local = locals[static_cast<std::size_t>(pick(0, static_cast<int>(locals.size()) - 1))];
    switch (pick(0, 6)) {
      case 0: return I(base_);
      case 1: return I(base_ + "#" + (local.empty() ? "f" : local));
      case 2: return I(origin() + "/" + std::to_string(pick(0, 40)));
      case 3: return I(std::string(rdf::vocab::sosa::ns) + local);
      case 4: return I("urn:uuid:" + std::to_string(pick(1000, 9999)));
      case 5: return I("https://other.example/p/" + local + "?q=" + std::to_string(pick(0, 9)));
      default: return I(std::string(rdf::vocab::ex::ns) + local);
    }
  }

  std::string origin() const { return base_.substr(0, base_.find('/', base_.find("://") + 3)); }

  rdf::Term blank_node() { return rdf::blank("n" + std::to_string(pick(0, std::max(0, blanks_ - 1)))); }

  rdf::Term subject() { return blanks_ > 0 && pick(0, 2) == 0 ? blank_node() : named(); }

  rdf::Term predicate() {
    if (pick(0, 5) == 0) return I(rdf::vocab::rdf::type);
    return named();
  }

  rdf::Term object() {
    namespace xsd = rdf::vocab::xsd;
    switch (pick(0, 11)) {
      case 0:
      case 1: return named();
      case 2: return blanks_ > 0 ? blank_node() : named();
      case 3: return rdf::literal(text());
      case 4: return rdf::lang_literal(text(), pick(0, 1) ? "en" : "de-AT");
      case 5: return rdf::typed_literal(std::to_string(pick(-500, 500)), std::string(xsd::integer));
      case 6: return rdf::typed_literal(std::to_string(pick(-99, 99)) + "." + std::to_string(pick(0, 99)),
                                        std::string(xsd::decimal));
      case 7: return rdf::typed_literal(std::to_string(pick(1, 9)) + ".5E" + std::to_string(pick(-3, 3)),
                                        std::string(xsd::double_));
      case 8: return rdf::typed_literal(pick(0, 1) ? "true" : "false", std::string(xsd::boolean));
      case 9: return rdf::timestamp_literal(rdf::Timestamp::from_unix_millis(pick(0, 2'000'000'000) * 1000LL));
      case 10: return rdf::typed_literal("0" + std::to_string(pick(1, 9)), std::string(xsd::integer));
      default: return rdf::typed_literal(text(), "http://example.org/dt#custom");
    }
  }

  std::string text() {
    static const std::vector<std::string> pieces = {"plain", " ", "\"quoted\"", "back\\slash", "line\nbreak", "tab\t",
                                                    "'single'", "\xE2\x82\xAC", "\r", "", "#not-a-comment",
                                                    "\x01"};
    std::string out;
    auto n = pick(0, 4);
    for (int i = 0; i < n; ++i) out += pieces[static_cast<std::size_t>(pick(0, static_cast<int>(pieces.size()) - 1))];
    return out;
  }

  std::mt19937_64 rng_;
  std::string base_;
  int blanks_ = 0;
};

}  // namespace sc::test
