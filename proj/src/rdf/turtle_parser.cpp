#include <cctype>
#include <map>

#include "sc/rdf/iri.hpp"
#include "sc/rdf/turtle.hpp"
#include "sc/rdf/vocab.hpp"

namespace sc::rdf {

TurtleError::TurtleError(std::string message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      message_(std::move(message)),
      line_(line),
      column_(column) {}

namespace {

bool is_pn_chars_base(unsigned char c) { return std::isalpha(c) || c >= 0x80; }
bool is_pn_chars_u(unsigned char c) { return is_pn_chars_base(c) || c == '_'; }
bool is_pn_chars(unsigned char c) { return is_pn_chars_u(c) || c == '-' || std::isdigit(c); }
bool is_hex(unsigned char c) { return std::isxdigit(c) != 0; }

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Parser {
 public:
  Parser(std::string_view text, std::string_view base) : text_(text), base_(base) {
    if (!is_absolute_iri(base)) fail("base IRI is not absolute: " + std::string(base));
  }

  Graph run() {
    skip_ws();
    while (!at_end()) {
      statement();
      skip_ws();
    }
    return std::move(graph_);
  }

 private:
  // --- cursor -----------------------------------------------------------

  bool at_end() const { return pos_ >= text_.size(); }
  unsigned char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? static_cast<unsigned char>(text_[pos_ + ahead]) : 0;
  }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  [[noreturn]] void fail(const std::string& message) const { throw TurtleError(message, line_, column_); }

  void skip_ws() {
    while (!at_end()) {
      auto c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip_ws();
    if (peek() != static_cast<unsigned char>(c)) fail(std::string("expected '") + c + "'");
    advance();
  }

  bool lookahead_keyword(std::string_view word, bool case_insensitive) const {
    if (text_.size() - pos_ < word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i) {
      auto a = static_cast<unsigned char>(text_[pos_ + i]);
      auto b = static_cast<unsigned char>(word[i]);
      if (case_insensitive ? std::tolower(a) != std::tolower(b) : a != b) return false;
    }
    auto after = peek(word.size());
    if (after == '.') return !is_pn_chars(peek(word.size() + 1)) && peek(word.size() + 1) != ':';
    return !(is_pn_chars(after) || after == ':');
  }

  void consume(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) advance();
  }

  // --- grammar ----------------------------------------------------------

  void statement() {
    if (peek() == '@') {
      if (lookahead_keyword("@prefix", false)) {
        consume(7);
        prefix_decl();
        expect('.');
      } else if (lookahead_keyword("@base", false)) {
        consume(5);
        base_decl();
        expect('.');
      } else {
        fail("unknown directive");
      }
      return;
    }
    if (lookahead_keyword("PREFIX", true)) {
      consume(6);
      prefix_decl();
      return;
    }
    if (lookahead_keyword("BASE", true)) {
      consume(4);
      base_decl();
      return;
    }
    triples();
    expect('.');
  }

  void prefix_decl() {
    skip_ws();
    std::string prefix;
    if (peek() != ':') prefix = pn_prefix();
    if (peek() != ':') fail("expected ':' after prefix name");
    advance();
    skip_ws();
    prefixes_[prefix] = iri_ref();
  }

  void base_decl() {
    skip_ws();
    base_ = iri_ref();
  }

  void triples() {
    skip_ws();
    if (peek() == '[') {
      Term subject = blank_node_property_list();
      skip_ws();
      if (peek() != '.') predicate_object_list(subject);
      return;
    }
    Term subject = subject_term();
    predicate_object_list(subject);
  }

  Term subject_term() {
    skip_ws();
    auto c = peek();
    if (c == '<') return iri(iri_ref());
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '(') fail("collections are not supported");
    if (c == '"' || c == '\'' || std::isdigit(c) || c == '+' || c == '-') fail("literal in subject position");
    return iri(prefixed_name());
  }

  void predicate_object_list(const Term& subject) {
    verb_object_list(subject);
    for (;;) {
      skip_ws();
      if (peek() != ';') return;
      while (peek() == ';') {
        advance();
        skip_ws();
      }
      auto c = peek();
      if (c == '.' || c == ']' || at_end()) return;
      verb_object_list(subject);
    }
  }

  void verb_object_list(const Term& subject) {
    skip_ws();
    Term predicate;
    if (peek() == 'a' && lookahead_keyword("a", false)) {
      advance();
      predicate = iri(std::string(vocab::rdf::type));
    } else if (peek() == '<') {
      predicate = iri(iri_ref());
    } else if (peek() == '_' && peek(1) == ':') {
      fail("blank node in predicate position");
    } else {
      predicate = iri(prefixed_name());
    }
    for (;;) {
      Term obj = object();
      graph_.insert(subject, predicate, std::move(obj));
      skip_ws();
      if (peek() != ',') return;
      advance();
    }
  }

  Term object() {
    skip_ws();
    auto c = peek();
    if (c == '<') return iri(iri_ref());
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '[') return blank_node_property_list();
    if (c == '(') fail("collections are not supported");
    if (c == '"' || c == '\'') return rdf_literal();
    if (std::isdigit(c) || ((c == '+' || c == '-' || c == '.') && (std::isdigit(peek(1)) || peek(1) == '.'))) {
      return numeric_literal();
    }
    if (lookahead_keyword("true", false) || lookahead_keyword("false", false)) {
      std::string value = peek() == 't' ? "true" : "false";
      consume(value.size());
      return typed_literal(value, std::string(vocab::xsd::boolean));
    }
    if (at_end()) fail("unexpected end of input, expected an object");
    return iri(prefixed_name());
  }

  Term blank_node_property_list() {
    expect('[');
    Term node = fresh_blank();
    skip_ws();
    if (peek() != ']') predicate_object_list(node);
    expect(']');
    return node;
  }

  Term fresh_blank() { return blank("b" + std::to_string(next_blank_++)); }

  Term blank_label() {
    consume(2);
    auto first = peek();
    if (!(is_pn_chars_u(first) || std::isdigit(first))) fail("malformed blank node label");
    std::string label;
    while (!at_end() && (is_pn_chars(peek()) || peek() == '.')) label += advance();
    while (!label.empty() && label.back() == '.') {
      // A trailing '.' terminates the statement rather than the label.
      label.pop_back();
      --pos_;
      --column_;
    }
    auto [it, inserted] = labels_.try_emplace(label);
    if (inserted) it->second = fresh_blank();
    return it->second;
  }

  std::string iri_ref() {
    skip_ws();
    if (peek() != '<') fail("expected IRI");
    advance();
    std::string raw;
    for (;;) {
      if (at_end()) fail("unterminated IRI");
      char c = advance();
      if (c == '>') break;
      if (c == '\\') {
        char e = at_end() ? '\0' : advance();
        if (e == 'u' || e == 'U') {
          append_utf8(raw, hex_escape(e == 'u' ? 4 : 8));
        } else {
          fail("invalid escape in IRI");
        }
        continue;
      }
      auto u = static_cast<unsigned char>(c);
      if (u <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' || c == '`') {
        fail("malformed IRI: illegal character");
      }
      raw += c;
    }
    try {
      return resolve_iri(base_, raw);
    } catch (const IriError& e) {
      fail(std::string("malformed IRI: ") + e.what());
    }
  }

  std::uint32_t hex_escape(int width) {
    std::uint32_t cp = 0;
    for (int i = 0; i < width; ++i) {
      if (at_end() || !is_hex(peek())) fail("malformed unicode escape");
      char h = advance();
      cp = cp * 16 + static_cast<std::uint32_t>(std::isdigit(static_cast<unsigned char>(h))
                                                    ? h - '0'
                                                    : std::tolower(static_cast<unsigned char>(h)) - 'a' + 10);
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail("invalid code point in escape");
    return cp;
  }

  std::string pn_prefix() {
    if (!is_pn_chars_base(peek())) fail("malformed prefix name");
    std::string out;
    while (!at_end() && (is_pn_chars(peek()) || peek() == '.')) out += advance();
    if (out.back() == '.') fail("prefix name may not end with '.'");
    return out;
  }

  std::string prefixed_name() {
    std::string prefix;
    if (peek() != ':') {
      if (!is_pn_chars_base(peek())) fail("unexpected character");
      while (!at_end() && (is_pn_chars(peek()) || peek() == '.')) prefix += advance();
    }
    if (peek() != ':') fail("expected prefixed name");
    if (!prefix.empty() && prefix.back() == '.') fail("prefix name may not end with '.'");
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail("undefined prefix '" + prefix + "'");
    advance();
    std::string local;
    std::size_t trailing_dots = 0;
    auto c = peek();
    if (is_pn_chars_u(c) || c == ':' || std::isdigit(c) || c == '%' || c == '\\') {
      for (;;) {
        c = peek();
        if (at_end()) break;
        if (c == '%') {
          if (!is_hex(peek(1)) || !is_hex(peek(2))) fail("malformed percent escape");
          local += advance();
          local += advance();
          local += advance();
          trailing_dots = 0;
        } else if (c == '\\') {
          advance();
          static constexpr std::string_view escapable = "_~.-!$&'()*+,;=/?#@%";
          if (at_end() || escapable.find(static_cast<char>(peek())) == std::string_view::npos) {
            fail("invalid escape in local name");
          }
          local += advance();
          trailing_dots = 0;
        } else if (is_pn_chars(c) || c == ':' || c == '.') {
          trailing_dots = c == '.' ? trailing_dots + 1 : 0;
          local += advance();
        } else {
          break;
        }
      }
      // A trailing '.' ends the statement, not the name.
      for (; trailing_dots > 0; --trailing_dots) {
        local.pop_back();
        --pos_;
        --column_;
      }
    }
    std::string full = it->second + local;
    if (has_forbidden_iri_chars(full)) fail("malformed IRI from prefixed name");
    return full;
  }

  Term rdf_literal() {
    std::string lexical = string_literal();
    if (peek() == '@') {
      advance();
      std::string lang;
      while (!at_end() && (std::isalnum(peek()) || peek() == '-')) lang += advance();
      if (lang.empty() || !std::isalpha(static_cast<unsigned char>(lang.front()))) fail("malformed language tag");
      return lang_literal(std::move(lexical), std::move(lang));
    }
    if (peek() == '^' && peek(1) == '^') {
      consume(2);
      std::string datatype = peek() == '<' ? iri_ref() : prefixed_name();
      return typed_literal(std::move(lexical), std::move(datatype));
    }
    return literal(std::move(lexical));
  }

  std::string string_literal() {
    char quote = advance();
    bool long_form = peek() == static_cast<unsigned char>(quote) && peek(1) == static_cast<unsigned char>(quote);
    if (long_form) consume(2);
    std::string out;
    for (;;) {
      if (at_end()) fail("unterminated string literal");
      char c = advance();
      if (c == quote) {
        if (!long_form) break;
        if (peek() == static_cast<unsigned char>(quote) && peek(1) == static_cast<unsigned char>(quote)) {
          consume(2);
          // """a"""" ends with a quote character inside the literal.
          while (peek() == static_cast<unsigned char>(quote)) out += advance();
          break;
        }
        out += c;
        continue;
      }
      if (c == '\\') {
        if (at_end()) fail("unterminated escape");
        char e = advance();
        switch (e) {
          case 't': out += '\t'; break;
          case 'b': out += '\b'; break;
          case 'n': out += '\n'; break;
          case 'r': out += '\r'; break;
          case 'f': out += '\f'; break;
          case '"': out += '"'; break;
          case '\'': out += '\''; break;
          case '\\': out += '\\'; break;
          case 'u': append_utf8(out, hex_escape(4)); break;
          case 'U': append_utf8(out, hex_escape(8)); break;
          default: fail(std::string("invalid escape '\\") + e + "'");
        }
        continue;
      }
      if (!long_form && (c == '\n' || c == '\r')) fail("newline in short string literal");
      out += c;
    }
    return out;
  }

  Term numeric_literal() {
    std::string lexical;
    if (peek() == '+' || peek() == '-') lexical += advance();
    while (std::isdigit(peek())) lexical += advance();
    bool decimal = false;
    bool exponent = false;
    if (peek() == '.' && std::isdigit(peek(1))) {
      decimal = true;
      lexical += advance();
      while (std::isdigit(peek())) lexical += advance();
    }
    if (peek() == 'e' || peek() == 'E') {
      exponent = true;
      lexical += advance();
      if (peek() == '+' || peek() == '-') lexical += advance();
      if (!std::isdigit(peek())) fail("malformed exponent");
      while (std::isdigit(peek())) lexical += advance();
    }
    auto digits = lexical.find_first_of("0123456789");
    if (digits == std::string::npos) fail("malformed number");
    if (exponent) return typed_literal(lexical, std::string(vocab::xsd::double_));
    if (decimal) return typed_literal(lexical, std::string(vocab::xsd::decimal));
    return typed_literal(lexical, std::string(vocab::xsd::integer));
  }

  std::string_view text_;
  std::string base_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::map<std::string, std::string> prefixes_;
  std::map<std::string, Term> labels_;
  std::size_t next_blank_ = 0;
  Graph graph_;
};

}  // namespace

Graph parse_turtle(std::string_view text, std::string_view base) { return Parser(text, base).run(); }

}  // namespace sc::rdf
