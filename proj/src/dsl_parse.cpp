#include "ninf/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <set>

namespace ninf::dsl {

Expr bit(Index k) { return Expr{BitAt{k}}; }
Expr bit(std::string var) { return Expr{BitAt{std::move(var)}}; }
Expr constant(bool value) { return value ? Expr{ConstTrue{}} : Expr{ConstFalse{}}; }
Expr negate(Expr e) { return Expr{Not{std::move(e)}}; }
Expr conj(Expr lhs, Expr rhs) { return Expr{And{std::move(lhs), std::move(rhs)}}; }
Expr disj(Expr lhs, Expr rhs) { return Expr{Or{std::move(lhs), std::move(rhs)}}; }
Expr implies(Expr lhs, Expr rhs) { return Expr{Implies{std::move(lhs), std::move(rhs)}}; }
Expr all_below(Index bound, std::string var, Expr body) {
  return Expr{AllBelow{bound, std::move(var), std::move(body)}};
}
Expr at_least(Index n) { return Expr{IsAtLeast{n}}; }

namespace {

std::string describe(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0)
      out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

} // namespace

ParseError::ParseError(Kind kind, std::size_t offset, std::vector<std::string> expected, const std::string& message)
    : std::runtime_error(message + " at offset " + std::to_string(offset) +
                         (expected.empty() ? std::string{} : ": expected " + describe(expected))),
      kind_(kind), offset_(offset), expected_(std::move(expected)) {}

namespace {

enum class Tok { LParen, RParen, Bang, Amp, Pipe, Arrow, Less, Dot, Number, Ident, End, Invalid };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_keyword(std::string_view s) {
  return s == "true" || s == "false" || s == "bit" || s == "atleast" || s == "all";
}

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    const std::size_t start = pos_;
    if (pos_ == text_.size())
      return {Tok::End, start, {}};
    const char c = text_[pos_];
    auto single = [&](Tok k) {
      ++pos_;
      return Token{k, start, text_.substr(start, 1)};
    };
    switch (c) {
    case '(': return single(Tok::LParen);
    case ')': return single(Tok::RParen);
    case '!': return single(Tok::Bang);
    case '&': return single(Tok::Amp);
    case '|': return single(Tok::Pipe);
    case '<': return single(Tok::Less);
    case '.': return single(Tok::Dot);
    case '=':
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        pos_ += 2;
        return {Tok::Arrow, start, text_.substr(start, 2)};
      }
      return single(Tok::Invalid);
    default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      return {Tok::Number, start, text_.substr(start, pos_ - start)};
    }
    if (is_ident_start(c)) {
      while (pos_ < text_.size() && is_ident_char(text_[pos_]))
        ++pos_;
      return {Tok::Ident, start, text_.substr(start, pos_ - start)};
    }
    return single(Tok::Invalid);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

const char* token_name(Tok k) {
  switch (k) {
  case Tok::LParen: return "'('";
  case Tok::RParen: return "')'";
  case Tok::Bang: return "'!'";
  case Tok::Amp: return "'&'";
  case Tok::Pipe: return "'|'";
  case Tok::Arrow: return "'=>'";
  case Tok::Less: return "'<'";
  case Tok::Dot: return "'.'";
  case Tok::Number: return "natural";
  case Tok::Ident: return "identifier";
  case Tok::End: return "end of input";
  case Tok::Invalid: return "invalid character";
  }
  return "?";
}

// Recursive descent with one token of lookahead. Every failed `accept`
// records what it was looking for, so an error at the current token reports
// exactly the set of tokens that would have been valid there.
class Parser {
public:
  Parser(std::string_view text, const ParseOptions& options) : lexer_(text), options_(options) {
    current_ = lexer_.next();
  }

  Expr parse_all() {
    Expr e = parse_imp();
    expect(Tok::End);
    return e;
  }

private:
  Expr parse_imp() {
    Expr lhs = parse_or();
    if (accept(Tok::Arrow)) {
      Depth guard(*this);
      Expr rhs = parse_imp();
      return implies(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Expr parse_or() {
    Expr lhs = parse_and();
    while (accept(Tok::Pipe))
      lhs = disj(std::move(lhs), parse_and());
    return lhs;
  }

  Expr parse_and() {
    Expr lhs = parse_unary();
    while (accept(Tok::Amp))
      lhs = conj(std::move(lhs), parse_unary());
    return lhs;
  }

  Expr parse_unary() {
    Depth guard(*this);
    if (accept(Tok::Bang))
      return negate(parse_unary());
    return parse_atom();
  }

  Expr parse_atom() {
    if (accept_keyword("true"))
      return constant(true);
    if (accept_keyword("false"))
      return constant(false);
    if (accept_keyword("bit")) {
      expect(Tok::LParen);
      Expr e = parse_bit_index();
      expect(Tok::RParen);
      return e;
    }
    if (accept_keyword("atleast")) {
      expect(Tok::LParen);
      const Token num = expect(Tok::Number);
      const Index n = to_natural(num);
      // atleast(n) reads bit n - 1.
      if (n > 0 && n - 1 > options_.max_index)
        index_too_large(num, n - 1);
      expect(Tok::RParen);
      return at_least(n);
    }
    if (accept_keyword("all")) {
      const Token name = expect_identifier();
      expect(Tok::Less);
      const Token num = expect(Tok::Number);
      const Index bound = to_natural(num);
      if (bound > 0 && bound - 1 > options_.max_index)
        index_too_large(num, bound - 1);
      expect(Tok::Dot);
      scope_.emplace_back(name.text);
      Expr body = parse_imp();
      scope_.pop_back();
      return all_below(bound, std::string(name.text), std::move(body));
    }
    if (accept(Tok::LParen)) {
      Expr e = parse_imp();
      expect(Tok::RParen);
      return e;
    }
    fail();
  }

  Expr parse_bit_index() {
    if (current_.kind == Tok::Number) {
      const Token num = advance();
      const Index k = to_natural(num);
      if (k > options_.max_index)
        index_too_large(num, k);
      return bit(k);
    }
    const Token name = expect_identifier({token_name(Tok::Number)});
    if (std::find(scope_.rbegin(), scope_.rend(), name.text) == scope_.rend())
      throw ParseError(ParseError::Kind::Syntax, name.offset, {},
                       "unbound variable '" + std::string(name.text) + "'");
    return bit(std::string(name.text));
  }

  // Token plumbing
  //----------------------------------------------------------------------------

  Token advance() {
    Token t = current_;
    current_ = lexer_.next();
    expected_.clear();
    return t;
  }

  bool accept(Tok kind) {
    if (current_.kind == kind) {
      advance();
      return true;
    }
    expected_.insert(token_name(kind));
    return false;
  }

  bool accept_keyword(std::string_view word) {
    if (current_.kind == Tok::Ident && current_.text == word) {
      advance();
      return true;
    }
    expected_.insert("'" + std::string(word) + "'");
    return false;
  }

  Token expect(Tok kind) {
    if (current_.kind != kind) {
      expected_.insert(token_name(kind));
      fail();
    }
    return advance();
  }

  Token expect_identifier(std::initializer_list<std::string> also = {}) {
    if (current_.kind != Tok::Ident || is_keyword(current_.text)) {
      expected_.insert(token_name(Tok::Ident));
      expected_.insert(also.begin(), also.end());
      fail();
    }
    return advance();
  }

  [[noreturn]] void fail() const {
    throw ParseError(ParseError::Kind::Syntax, current_.offset,
                     std::vector<std::string>(expected_.begin(), expected_.end()), "syntax error");
  }

  [[noreturn]] void index_too_large(const Token& at, Index index) const {
    throw ParseError(ParseError::Kind::IndexTooLarge, at.offset, {},
                     "bit index " + std::to_string(index) + " exceeds maximum " +
                         std::to_string(options_.max_index));
  }

  Index to_natural(const Token& t) const {
    Index value = 0;
    for (char c : t.text) {
      const Index digit = static_cast<Index>(c - '0');
      if (value > (std::numeric_limits<Index>::max() - digit) / 10)
        throw ParseError(ParseError::Kind::IndexTooLarge, t.offset, {},
                         "natural '" + std::string(t.text) + "' is out of range");
      value = value * 10 + digit;
    }
    return value;
  }

  struct Depth {
    explicit Depth(Parser& p) : parser(p) {
      if (++parser.depth_ > parser.options_.max_depth)
        throw ParseError(ParseError::Kind::Syntax, parser.current_.offset, {},
                         "nesting deeper than " + std::to_string(parser.options_.max_depth));
    }
    ~Depth() { --parser.depth_; }
    Parser& parser;
  };

  Lexer lexer_;
  const ParseOptions& options_;
  Token current_;
  std::set<std::string> expected_;
  std::vector<std::string_view> scope_;
  std::size_t depth_ = 0;
};

} // namespace

Expr parse(std::string_view text, const ParseOptions& options) { return Parser(text, options).parse_all(); }

} // namespace ninf::dsl
