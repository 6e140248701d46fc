#include "adtrace/lexer.hpp"

#include <cctype>
#include <limits>

namespace adtrace {

namespace {

bool ident_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool ident_char(char c) {
  return ident_start(c) || (c >= '0' && c <= '9') || c == '_';
}

bool digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::string Token::describe() const {
  switch (kind) {
    case TokenKind::End:
      return "end of input";
    case TokenKind::String:
      return "string " + quote_string(text);
    case TokenKind::Int:
      return "integer '" + text + "'";
    case TokenKind::Ident:
      return "'" + text + "'";
    case TokenKind::Punct:
      return "'" + text + "'";
  }
  return "?";
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !ident_start(s.front())) return false;
  for (char c : s)
    if (!ident_char(c)) return false;
  return true;
}

std::string quote_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out += c;
    }
  }
  out += '"';
  return out;
}

std::vector<Token> tokenize(std::string_view src, const std::string& file) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  int col = 1;

  auto here = [&] { return SourcePos{file, line, col}; };
  auto advance = [&](std::size_t n = 1) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };

  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }

    Token tok;
    tok.pos = here();
    if (ident_start(c)) {
      std::size_t start = i;
      while (i < src.size() && ident_char(src[i])) advance();
      tok.kind = TokenKind::Ident;
      tok.text = std::string(src.substr(start, i - start));
    } else if (digit(c)) {
      std::size_t start = i;
      while (i < src.size() && digit(src[i])) advance();
      tok.kind = TokenKind::Int;
      tok.text = std::string(src.substr(start, i - start));
      if (tok.text.size() > 9)
        throw ParseError(tok.pos, "integer below 10^9", tok.text);
    } else if (c == '"') {
      tok.kind = TokenKind::String;
      advance();
      bool closed = false;
      while (i < src.size()) {
        char d = src[i];
        if (d == '"') {
          advance();
          closed = true;
          break;
        }
        if (d == '\n') break;
        if (d == '\\') {
          if (i + 1 >= src.size()) break;
          char e = src[i + 1];
          switch (e) {
            case '"':
              tok.text += '"';
              break;
            case '\\':
              tok.text += '\\';
              break;
            case 'n':
              tok.text += '\n';
              break;
            case 't':
              tok.text += '\t';
              break;
            default:
              throw ParseError(here(), "escape sequence",
                               std::string("'\\") + e + "'");
          }
          advance(2);
          continue;
        }
        tok.text += d;
        advance();
      }
      if (!closed) throw ParseError(tok.pos, "closing '\"'", "end of line");
    } else {
      static constexpr std::string_view two[] = {"->", "=>", ".."};
      static constexpr std::string_view one = "{}:,().[]*=";
      tok.kind = TokenKind::Punct;
      bool matched = false;
      for (auto p : two) {
        if (src.substr(i, 2) == p) {
          tok.text = std::string(p);
          advance(2);
          matched = true;
          break;
        }
      }
      if (!matched) {
        if (one.find(c) == std::string_view::npos) {
          std::string shown = (static_cast<unsigned char>(c) < 0x80)
                                  ? std::string("'") + c + "'"
                                  : std::string("non-ASCII byte");
          throw ParseError(tok.pos, "token", shown);
        }
        tok.text = std::string(1, c);
        advance();
      }
    }
    out.push_back(std::move(tok));
  }

  Token end;
  end.kind = TokenKind::End;
  end.pos = here();
  out.push_back(std::move(end));
  return out;
}

TokenCursor::TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty() || tokens_.back().kind != TokenKind::End)
    tokens_.push_back(Token{});
}

const Token& TokenCursor::peek(std::size_t ahead) const {
  std::size_t at = index_ + ahead;
  if (at >= tokens_.size()) return tokens_.back();
  return tokens_[at];
}

Token TokenCursor::next() {
  Token t = peek();
  if (index_ + 1 < tokens_.size()) ++index_;
  return t;
}

bool TokenCursor::accept_punct(std::string_view p) {
  if (!peek().is_punct(p)) return false;
  next();
  return true;
}

bool TokenCursor::accept_word(std::string_view w) {
  if (!peek().is_word(w)) return false;
  next();
  return true;
}

Token TokenCursor::expect_punct(std::string_view p) {
  if (!peek().is_punct(p)) fail("'" + std::string(p) + "'");
  return next();
}

Token TokenCursor::expect_word(std::string_view w) {
  if (!peek().is_word(w)) fail("'" + std::string(w) + "'");
  return next();
}

Token TokenCursor::expect_ident(std::string_view what) {
  if (peek().kind != TokenKind::Ident) fail(std::string(what));
  return next();
}

Token TokenCursor::expect_int(std::string_view what) {
  if (peek().kind != TokenKind::Int) fail(std::string(what));
  return next();
}

Token TokenCursor::expect_string(std::string_view what) {
  if (peek().kind != TokenKind::String) fail(std::string(what));
  return next();
}

void TokenCursor::fail(std::string expected) const {
  throw ParseError(peek().pos, std::move(expected), peek().describe());
}

}  // namespace adtrace
