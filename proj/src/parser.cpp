#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "diored/polyring.hpp"
#include "diored/rational.hpp"

namespace diored {

namespace {

enum class TokKind { Number, Name, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t pos;
};

constexpr int kMaxExponent = 100000;

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) return {TokKind::End, "", start};
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits = read_digits();
      // rational literal: digits '/' digits, no intervening whitespace
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail_at(pos_, "expected digits after '/'");
        digits += "/" + read_digits();
      }
      return {TokKind::Number, digits, start};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        name.push_back(text_[pos_++]);
      return {TokKind::Name, name, start};
    }
    ++pos_;
    switch (c) {
      case '+': return {TokKind::Plus, "+", start};
      case '-': return {TokKind::Minus, "-", start};
      case '*': return {TokKind::Star, "*", start};
      case '^': return {TokKind::Caret, "^", start};
      case '(': return {TokKind::LParen, "(", start};
      case ')': return {TokKind::RParen, ")", start};
      default: break;
    }
    fail_at(start, std::string("unexpected character '") + c + "'");
  }

  [[noreturn]] static void fail_at(std::size_t pos, const std::string& message) {
    std::ostringstream os;
    os << "at position " << pos << ": " << message;
    fail(ErrorKind::ParseError, os.str());
  }

private:
  std::string read_digits() {
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      out.push_back(text_[pos_++]);
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
public:
  Parser(std::string_view text, const VarRegistry& registry)
      : lexer_(text), registry_(registry), current_(lexer_.next()) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (current_.kind != TokKind::End)
      Lexer::fail_at(current_.pos, "unexpected trailing input '" + current_.text + "'");
    return p;
  }

private:
  void advance() { current_ = lexer_.next(); }

  Polynomial expr() {
    bool negate = false;
    if (current_.kind == TokKind::Plus || current_.kind == TokKind::Minus) {
      negate = current_.kind == TokKind::Minus;
      advance();
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (current_.kind == TokKind::Plus || current_.kind == TokKind::Minus) {
      const bool minus = current_.kind == TokKind::Minus;
      advance();
      Polynomial rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (current_.kind == TokKind::Star) {
      advance();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (current_.kind == TokKind::Caret) {
      advance();
      if (current_.kind != TokKind::Number || current_.text.find('/') != std::string::npos)
        Lexer::fail_at(current_.pos, "expected a nonnegative integer exponent");
      long exp = 0;
      try {
        exp = std::stol(current_.text);
      } catch (const std::exception&) {
        Lexer::fail_at(current_.pos, "exponent out of range");
      }
      if (exp > kMaxExponent) Lexer::fail_at(current_.pos, "exponent out of range");
      advance();
      return base.pow(static_cast<unsigned>(exp));
    }
    return base;
  }

  Polynomial atom() {
    if (current_.kind == TokKind::Number) {
      mpq_class value = rational_from_string(current_.text);
      advance();
      return Polynomial::constant(registry_, value);
    }
    if (current_.kind == TokKind::Name) {
      auto idx = registry_.index_of(current_.text);
      if (!idx)
        fail(ErrorKind::UnknownVariable,
             "variable '" + current_.text + "' not in registry (position " +
                 std::to_string(current_.pos) + ")");
      advance();
      return Polynomial::variable(registry_, *idx);
    }
    if (current_.kind == TokKind::LParen) {
      advance();
      Polynomial inner = expr();
      if (current_.kind != TokKind::RParen)
        Lexer::fail_at(current_.pos, "expected ')'");
      advance();
      return inner;
    }
    Lexer::fail_at(current_.pos, current_.kind == TokKind::End
                                     ? std::string("unexpected end of input")
                                     : "unexpected token '" + current_.text + "'");
  }

  Lexer lexer_;
  const VarRegistry& registry_;
  Token current_;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const VarRegistry& registry) {
  return Parser(text, registry).parse();
}

std::vector<std::string> scan_variables(std::string_view text) {
  std::vector<std::string> names;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        name.push_back(text[pos++]);
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
    } else {
      ++pos;
    }
  }
  return names;
}

std::string render_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending grevlex so the leading term comes first
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Monomial& m = it->first;
    const mpq_class& c = it->second;
    const bool negative = c < 0;
    mpq_class mag = negative ? mpq_class(-c) : c;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    std::vector<std::string> factors;
    if (m.is_one() || mag != 1) factors.push_back(rational_to_string(mag));
    for (std::size_t i = 0; i < m.arity(); ++i) {
      const int e = m.exponent(i);
      if (e == 0) continue;
      std::string f = p.registry().name(i);
      if (e > 1) f += "^" + std::to_string(e);
      factors.push_back(f);
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

}  // namespace diored
