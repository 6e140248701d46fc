#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "adtrace/diagnostics.hpp"

namespace adtrace {

enum class TokenKind : std::uint8_t { Ident, Int, String, Punct, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;  // decoded value for strings
  SourcePos pos;

  bool is_punct(std::string_view p) const {
    return kind == TokenKind::Punct && text == p;
  }
  bool is_word(std::string_view w) const {
    return kind == TokenKind::Ident && text == w;
  }
  std::string describe() const;
};

/// Tokenizes the shared `.adt` surface syntax: identifiers, unsigned
/// integers, double-quoted strings, punctuation and `#` line comments.
std::vector<Token> tokenize(std::string_view source, const std::string& file);

bool is_identifier(std::string_view s);

/// Quotes and escapes a string for the `.adt` syntax.
std::string quote_string(std::string_view s);

/// Forward-only cursor used by the recursive-descent parsers.
class TokenCursor {
 public:
  explicit TokenCursor(std::vector<Token> tokens);

  const Token& peek(std::size_t ahead = 0) const;
  Token next();
  bool at_end() const { return peek().kind == TokenKind::End; }

  bool accept_punct(std::string_view p);
  bool accept_word(std::string_view w);

  Token expect_punct(std::string_view p);
  Token expect_word(std::string_view w);
  Token expect_ident(std::string_view what = "identifier");
  Token expect_int(std::string_view what = "integer");
  Token expect_string(std::string_view what = "string");

  [[noreturn]] void fail(std::string expected) const;

 private:
  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace adtrace
