#include "toml.hpp"

#include <cctype>
#include <string>

#include "pncalc/error.hpp"

namespace pncalc::detail {

namespace {

using nlohmann::json;

class TomlReader {
 public:
  explicit TomlReader(std::string_view text) : text_(text) {}

  json run() {
    json root = json::object();
    json* current = &root;
    for (;;) {
      skip_blank_lines();
      if (at_end()) break;
      if (peek() == '[') {
        current = header(root);
      } else {
        key_value(*current);
      }
      end_of_line();
    }
    return root;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      line_start_ = pos_;
    }
    return c;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, pos_ - line_start_ + 1, what);
  }

  void skip_spaces() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) advance();
  }

  void skip_comment() {
    if (peek() == '#')
      while (!at_end() && peek() != '\n') advance();
  }

  void skip_blank_lines() {
    for (;;) {
      skip_spaces();
      skip_comment();
      if (at_end()) return;
      if (peek() == '\n' || peek() == '\r') {
        advance();
        continue;
      }
      return;
    }
  }

  // Whitespace, comments and newlines, as allowed inside arrays.
  void skip_array_space() {
    for (;;) {
      skip_spaces();
      skip_comment();
      if (!at_end() && (peek() == '\n' || peek() == '\r')) {
        advance();
        continue;
      }
      return;
    }
  }

  void end_of_line() {
    skip_spaces();
    skip_comment();
    if (at_end()) return;
    if (peek() == '\r') advance();
    if (peek() != '\n') fail("expected end of line");
    advance();
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string key() {
    skip_spaces();
    if (peek() == '"' || peek() == '\'') return string_value();
    std::string out;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-'))
      out += advance();
    if (out.empty()) fail("expected a key");
    skip_spaces();
    if (peek() == '.') fail("dotted keys are not supported");
    return out;
  }

  json* header(json& root) {
    advance();
    const bool array = peek() == '[';
    if (array) advance();
    const std::string name = key();
    skip_spaces();
    expect(']');
    if (array) expect(']');
    json& slot = root[name];
    if (array) {
      if (slot.is_null()) slot = json::array();
      if (!slot.is_array()) fail("'" + name + "' is not an array of tables");
      slot.push_back(json::object());
      return &slot.back();
    }
    if (!slot.is_null()) fail("table '" + name + "' defined twice");
    slot = json::object();
    return &slot;
  }

  void key_value(json& table) {
    const std::size_t key_line = line_;
    const std::size_t key_col = pos_ - line_start_ + 1;
    const std::string k = key();
    skip_spaces();
    expect('=');
    skip_spaces();
    if (table.contains(k)) throw ParseError(key_line, key_col, "duplicate key '" + k + "'");
    table[k] = value();
  }

  json value() {
    const char c = peek();
    if (c == '"' || c == '\'') return string_value();
    if (c == '[') return array_value();
    if (c == '{') return inline_table();
    if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) return integer_value();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) word += advance();
      if (word == "true") return true;
      if (word == "false") return false;
      fail("unsupported value '" + word + "'");
    }
    fail("expected a value");
  }

  std::string string_value() {
    const char quote = advance();
    if (peek() == quote && pos_ + 1 < text_.size() && text_[pos_ + 1] == quote)
      fail("multi-line strings are not supported");
    std::string out;
    for (;;) {
      if (at_end() || peek() == '\n') fail("unterminated string");
      const char c = advance();
      if (c == quote) return out;
      if (c == '\\' && quote == '"') {
        if (at_end()) fail("unterminated string");
        const char e = advance();
        switch (e) {
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          default: fail(std::string("unsupported escape '\\") + e + "'");
        }
        continue;
      }
      out += c;
    }
  }

  json integer_value() {
    std::string digits;
    if (peek() == '+' || peek() == '-') digits += advance();
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')) {
      const char c = advance();
      if (c != '_') digits += c;
    }
    if (peek() == '.' || peek() == 'e' || peek() == 'E') fail("floating-point values are not supported");
    if (digits.empty() || digits == "+" || digits == "-") fail("expected an integer");
    try {
      return std::stoll(digits);
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }

  json array_value() {
    advance();
    json out = json::array();
    for (;;) {
      skip_array_space();
      if (peek() == ']') {
        advance();
        return out;
      }
      out.push_back(value());
      skip_array_space();
      if (peek() == ',') {
        advance();
        continue;
      }
      skip_array_space();
      expect(']');
      return out;
    }
  }

  json inline_table() {
    advance();
    json out = json::object();
    skip_spaces();
    if (peek() == '}') {
      advance();
      return out;
    }
    for (;;) {
      key_value(out);
      skip_spaces();
      if (peek() == ',') {
        advance();
        continue;
      }
      expect('}');
      return out;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
};

}  // namespace

nlohmann::json parse_toml(std::string_view text) { return TomlReader(text).run(); }

}  // namespace pncalc::detail
