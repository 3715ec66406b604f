#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "t2/errors.hpp"
#include "t2/io.hpp"

namespace t2 {
namespace {

struct Token {
  enum Kind { word, number, lparen, rparen, comma, semicolon, end };
  Kind kind = end;
  std::string text;
  int value = 0;
  int line = 1;
  int column = 1;
};

const char* token_label(Token::Kind kind) {
  switch (kind) {
    case Token::word: return "a name";
    case Token::number: return "a number";
    case Token::lparen: return "'('";
    case Token::rparen: return "')'";
    case Token::comma: return "','";
    case Token::semicolon: return "';'";
    case Token::end: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  size_t i = 0;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(text[i++]);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(c);
      ++i;
      continue;
    }
    Token token;
    token.line = line;
    token.column = column;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      token.kind = Token::number;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        token.text += text[i];
        advance(text[i++]);
      }
      if (token.text.size() > 6) throw ParseError(token.line, token.column, "a smaller number");
      token.value = std::stoi(token.text);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      token.kind = Token::word;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        token.text += text[i];
        advance(text[i++]);
      }
    } else {
      switch (c) {
        case '(': token.kind = Token::lparen; break;
        case ')': token.kind = Token::rparen; break;
        case ',': token.kind = Token::comma; break;
        case ';': token.kind = Token::semicolon; break;
        default: throw ParseError(line, column, "a term");
      }
      token.text = c;
      advance(c);
      ++i;
    }
    out.push_back(std::move(token));
  }
  Token stop;
  stop.kind = Token::end;
  stop.line = line;
  stop.column = column;
  out.push_back(std::move(stop));
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ParsedTerm parse() {
    ParsedTerm term = expression();
    expect(Token::end);
    return term;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }

  Token take() { return tokens_[at_++]; }

  [[noreturn]] void fail(const std::string& expected) {
    const Token& t = peek();
    throw ParseError(t.line, t.column, expected);
  }

  Token expect(Token::Kind kind) {
    if (peek().kind != kind) fail(token_label(kind));
    return take();
  }

  int number() { return expect(Token::number).value; }

  // A full term: an atom, then `; g` chains when the atom is a morphism.
  ParsedTerm expression() {
    ParsedTerm first = atom();
    if (peek().kind != Token::semicolon) return first;
    if (!std::holds_alternative<MorTerm>(first))
      fail("v(a,b) to stack 2-morphisms (';' joins morphisms)");
    MorTerm chain = std::get<MorTerm>(first);
    while (peek().kind == Token::semicolon) {
      take();
      chain = chain.then(morphism());
    }
    return chain;
  }

  MorTerm morphism() {
    const Token& t = peek();
    ParsedTerm term = expression();
    if (!std::holds_alternative<MorTerm>(term))
      throw ParseError(t.line, t.column, "a morphism");
    return std::get<MorTerm>(term);
  }

  TwoTerm two_morphism() {
    const Token& t = peek();
    ParsedTerm term = expression();
    if (!std::holds_alternative<TwoTerm>(term))
      throw ParseError(t.line, t.column, "a 2-morphism");
    return std::get<TwoTerm>(term);
  }

  ParsedTerm atom() {
    if (peek().kind != Token::word) fail("a term");
    Token head = take();
    const std::string& name = head.text;
    if (name == "cap") return MorTerm::generator(MorGen::cap);
    if (name == "cup") return MorTerm::generator(MorGen::cup);
    if (name == "pos") return MorTerm::generator(MorGen::pos);
    if (name == "neg") return MorTerm::generator(MorGen::neg);
    if (name == "T") return TwoTerm::triangulator();
    if (name == "W") return TwoTerm::writhing();
    if (name == "id") {
      expect(Token::lparen);
      int width = number();
      expect(Token::rparen);
      return MorTerm::identity(width);
    }
    if (name == "w") {
      expect(Token::lparen);
      int left = number();
      expect(Token::comma);
      MorTerm body = morphism();
      expect(Token::comma);
      int right = number();
      expect(Token::rparen);
      return MorTerm::whisker(left, body, right);
    }
    if (name == "id2") return TwoTerm::identity(unary_morphism());
    if (name == "rzf") return TwoTerm::braid_zf(unary_morphism());
    if (name == "rfz") return TwoTerm::braid_fz(unary_morphism());
    if (name == "i") return TwoTerm::unit(unary_morphism());
    if (name == "e") return counit(unary_morphism());
    if (name == "tens") {
      expect(Token::lparen);
      MorTerm f = morphism();
      expect(Token::comma);
      MorTerm g = morphism();
      expect(Token::rparen);
      return TwoTerm::tensorator(f, g);
    }
    if (name == "dual") {
      expect(Token::lparen);
      ParsedTerm body = expression();
      expect(Token::rparen);
      if (std::holds_alternative<MorTerm>(body)) return dual(std::get<MorTerm>(body));
      return TwoTerm::dual(std::get<TwoTerm>(body));
    }
    if (name == "adj") {
      expect(Token::lparen);
      TwoTerm body = two_morphism();
      expect(Token::rparen);
      return adjoint(body);
    }
    if (name == "v" || name == "h") {
      expect(Token::lparen);
      TwoTerm first = two_morphism();
      expect(Token::comma);
      TwoTerm second = two_morphism();
      expect(Token::rparen);
      return name == "v" ? TwoTerm::vertical(first, second)
                         : TwoTerm::horizontal(first, second);
    }
    if (name == "w2") {
      expect(Token::lparen);
      int left = number();
      expect(Token::comma);
      TwoTerm body = two_morphism();
      expect(Token::comma);
      int right = number();
      expect(Token::rparen);
      return TwoTerm::whisker(left, body, right);
    }
    throw ParseError(head.line, head.column, "a term");
  }

  MorTerm unary_morphism() {
    expect(Token::lparen);
    MorTerm body = morphism();
    expect(Token::rparen);
    return body;
  }

  std::vector<Token> tokens_;
  size_t at_ = 0;
};

}  // namespace

ParsedTerm parse_term(const std::string& text) { return Parser(lex(text)).parse(); }

}  // namespace t2
