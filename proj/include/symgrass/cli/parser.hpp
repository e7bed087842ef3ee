#ifndef SYMGRASS_CLI_PARSER_HPP
#define SYMGRASS_CLI_PARSER_HPP

#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "symgrass/errors.hpp"
#include "symgrass/rational.hpp"

// Grammar:
//   expr   := ("+"|"-")? term (("+"|"-") term)*
//   term   := factor ("*"? factor)*
//   factor := atom ("^" NAT)?
//   atom   := VAR | RATIONAL | "(" expr ")" | "[" expr "," expr "]" | NAME ("(" args ")")?
//   VAR    := "x" DIGIT
//   NAME   := f | sigma1..sigma3 | nu<k> | e1 | e2

namespace symgrass::cli {

struct Expr {
  enum class Kind { Variable, Number, Sum, Product, Power, Commutator, FSymbol, Sigma, Nu, Elementary2 };

  Kind kind = Kind::Number;
  int index = 0;                 // Variable (0-based), Sigma / Nu / Elementary2 (k)
  Rational value;                // Number
  unsigned exponent = 0;         // Power
  std::vector<unsigned> args;    // FSymbol (a, b, c)
  std::vector<Expr> children;    // Sum, Product, Power (1), Commutator (2)
  std::vector<bool> negated;     // Sum: sign of each child

  static Expr number(Rational v) {
    Expr e;
    e.kind = Kind::Number;
    e.value = std::move(v);
    return e;
  }
};

/// Syntax error with a 1-based position and the tokens that would have been
/// accepted there.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& message, int line, int column, std::set<std::string> expected)
      : UsageError(format(message, line, column, expected)), line_(line), column_(column), expected_(std::move(expected)) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  static std::string format(const std::string& message, int line, int column, const std::set<std::string>& expected) {
    std::string out = "parse error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
    if (!expected.empty()) {
      out += " (expected one of:";
      for (const auto& e : expected) out += ' ' + e;
      out += ')';
    }
    return out;
  }

  int line_;
  int column_;
  std::set<std::string> expected_;
};

namespace detail {

struct Token {
  enum class Type { Var, Number, Name, Plus, Minus, Star, Caret, LParen, RParen, LBracket, RBracket, Comma, End };
  Type type = Type::End;
  std::string text;
  int line = 1;
  int column = 1;
};

inline std::string describe(Token::Type t) {
  using T = Token::Type;
  switch (t) {
    case T::Var: return "variable";
    case T::Number: return "number";
    case T::Name: return "name";
    case T::Plus: return "'+'";
    case T::Minus: return "'-'";
    case T::Star: return "'*'";
    case T::Caret: return "'^'";
    case T::LParen: return "'('";
    case T::RParen: return "')'";
    case T::LBracket: return "'['";
    case T::RBracket: return "']'";
    case T::Comma: return "','";
    case T::End: return "end of input";
  }
  return "?";
}

inline std::vector<Token> tokenize(std::string_view text) {
  using T = Token::Type;
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = column;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j + 1 < text.size() && text[j] == '/' && std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
        ++j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      }
      tok.type = T::Number;
      tok.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (ch == 'x' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      // VAR is exactly "x" DIGIT, so "x3x2x1" reads as three variables
      tok.type = T::Var;
      tok.text = std::string(text.substr(i, 2));
      advance(2);
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      tok.text = std::string(text.substr(i, j - i));
      tok.type = T::Name;
      advance(j - i);
    } else {
      switch (ch) {
        case '+': tok.type = T::Plus; break;
        case '-': tok.type = T::Minus; break;
        case '*': tok.type = T::Star; break;
        case '^': tok.type = T::Caret; break;
        case '(': tok.type = T::LParen; break;
        case ')': tok.type = T::RParen; break;
        case '[': tok.type = T::LBracket; break;
        case ']': tok.type = T::RBracket; break;
        case ',': tok.type = T::Comma; break;
        default:
          throw ParseError(std::string("unexpected character '") + ch + "'", line, column, {});
      }
      tok.text = std::string(1, ch);
      advance(1);
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.type = T::End;
  end.line = line;
  end.column = column;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Expr parse() {
    Expr e = expr();
    expect(Token::Type::End, {"'+'", "'-'", "'*'", "'^'", "variable", "number", "name", "'('", "'['", "end of input"});
    return e;
  }

 private:
  using T = Token::Type;

  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& message, std::set<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(message, t.line, t.column, std::move(expected));
  }

  const Token& expect(T type, std::set<std::string> expected) {
    if (peek().type != type) fail("unexpected " + describe(peek().type), std::move(expected));
    return take();
  }

  static bool starts_factor(T t) {
    return t == T::Var || t == T::Number || t == T::Name || t == T::LParen || t == T::LBracket;
  }

  static std::set<std::string> factor_starts() { return {"variable", "number", "name", "'('", "'['"}; }

  Expr expr() {
    Expr sum;
    sum.kind = Expr::Kind::Sum;
    bool negate = false;
    if (peek().type == T::Plus || peek().type == T::Minus) negate = take().type == T::Minus;
    sum.children.push_back(term());
    sum.negated.push_back(negate);
    while (peek().type == T::Plus || peek().type == T::Minus) {
      negate = take().type == T::Minus;
      sum.children.push_back(term());
      sum.negated.push_back(negate);
    }
    if (sum.children.size() == 1 && !sum.negated[0]) return std::move(sum.children[0]);
    return sum;
  }

  Expr term() {
    Expr prod;
    prod.kind = Expr::Kind::Product;
    prod.children.push_back(factor());
    while (true) {
      if (peek().type == T::Star) {
        take();
        prod.children.push_back(factor());
      } else if (starts_factor(peek().type)) {
        prod.children.push_back(factor());
      } else {
        break;
      }
    }
    if (prod.children.size() == 1) return std::move(prod.children[0]);
    return prod;
  }

  Expr factor() {
    Expr base = atom();
    if (peek().type != T::Caret) return base;
    take();
    const Token& n = peek();
    if (n.type != T::Number || n.text.find('/') != std::string::npos) fail("exponent must be a nonnegative integer", {"number"});
    take();
    Expr pow;
    pow.kind = Expr::Kind::Power;
    pow.exponent = parse_nat(n);
    pow.children.push_back(std::move(base));
    return pow;
  }

  unsigned parse_nat(const Token& t) const {
    if (t.text.size() > 9) throw ParseError("integer too large: " + t.text, t.line, t.column, {});
    return static_cast<unsigned>(std::stoul(t.text));
  }

  Expr atom() {
    const Token& t = peek();
    switch (t.type) {
      case T::Var: {
        take();
        int k = std::stoi(t.text.substr(1));
        if (k < 1 || k > 4) throw ParseError("unknown variable '" + t.text + "' (variables are x1..x4)", t.line, t.column, {});
        Expr e;
        e.kind = Expr::Kind::Variable;
        e.index = k - 1;
        return e;
      }
      case T::Number: {
        take();
        return Expr::number(parse_rational(t.text));
      }
      case T::LParen: {
        take();
        Expr e = expr();
        expect(T::RParen, {"')'", "'+'", "'-'"});
        return e;
      }
      case T::LBracket: {
        take();
        Expr e;
        e.kind = Expr::Kind::Commutator;
        e.children.push_back(expr());
        expect(T::Comma, {"','", "'+'", "'-'"});
        e.children.push_back(expr());
        expect(T::RBracket, {"']'", "'+'", "'-'"});
        return e;
      }
      case T::Name:
        return named();
      default:
        fail("unexpected " + describe(t.type), factor_starts());
    }
  }

  Expr named() {
    const Token& t = take();
    const std::string& name = t.text;
    Expr e;
    auto suffix_index = [&](std::size_t prefix) -> int {
      std::string digits = name.substr(prefix);
      if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string::npos) return -1;
      return std::stoi(digits);
    };
    if (name == "f") {
      e.kind = Expr::Kind::FSymbol;
      expect(T::LParen, {"'('"});
      for (int k = 0; k < 3; ++k) {
        if (k > 0) expect(T::Comma, {"','"});
        const Token& n = peek();
        if (n.type != T::Number || n.text.find('/') != std::string::npos) fail("f(a,b,c) takes nonnegative integers", {"number"});
        take();
        e.args.push_back(parse_nat(n));
      }
      expect(T::RParen, {"')'"});
      return e;
    }
    if (name.rfind("sigma", 0) == 0) {
      int k = suffix_index(5);
      if (k < 1 || k > 3) throw ParseError("unknown identifier '" + name + "' (sigma1..sigma3)", t.line, t.column, {});
      e.kind = Expr::Kind::Sigma;
      e.index = k;
      return e;
    }
    if (name.rfind("nu", 0) == 0) {
      int k = suffix_index(2);
      if (k < 1) throw ParseError("unknown identifier '" + name + "' (nu1, nu2, ...)", t.line, t.column, {});
      e.kind = Expr::Kind::Nu;
      e.index = k;
      return e;
    }
    if (name == "e1" || name == "e2") {
      e.kind = Expr::Kind::Elementary2;
      e.index = name[1] - '0';
      return e;
    }
    throw ParseError("unknown identifier '" + name + "'", t.line, t.column, {"f", "sigma1", "sigma2", "sigma3", "nu<k>", "e1", "e2"});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse(std::string_view text) { return detail::Parser(text).parse(); }

}  // namespace symgrass::cli

#endif  // SYMGRASS_CLI_PARSER_HPP
