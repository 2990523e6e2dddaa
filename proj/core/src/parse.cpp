#include "wblowup/parse.hpp"

#include "wblowup/errors.hpp"

#include <cctype>

namespace wblowup {

namespace {

class Parser {
public:
  Parser(std::string_view text, const Variables& vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse polynomial \"" + std::string(text_) + "\" at offset " +
                     std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(vars_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial first = term();
    acc = negate ? -first : first;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      const std::string digits = integer_digits();
      if (digits.empty()) fail("exponent must be a positive integer");
      const BigInt e(digits);
      if (e <= 0) fail("exponent must be a positive integer");
      if (e > 1000000) fail("exponent too large");
      return base.pow(e.get_ui());
    }
    return base;
  }

  std::string integer_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string num = integer_digits();
      BigInt den = 1;
      // A '/' directly following an integer literal forms a rational literal.
      const std::size_t save = pos_;
      if (accept('/')) {
        skip_ws();
        const std::string d = integer_digits();
        if (d.empty()) {
          pos_ = save;
          fail("expected integer denominator");
        }
        den = BigInt(d);
        if (den == 0) fail("zero denominator");
      }
      return Polynomial::constant(vars_, Rational(BigInt(num), den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\'')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      const std::size_t idx = vars_->index_of(name);
      if (idx == vars_->size()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(vars_, idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Variables& vars_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Variables& vars) { return Parser(text, vars).parse(); }

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',' || text[i] == ';') {
      std::string item = trim(text.substr(start, i - start));
      if (!item.empty()) out.push_back(std::move(item));
      start = i + 1;
    }
  }
  return out;
}

std::vector<Rational> parse_point(std::string_view text) {
  std::vector<Rational> point;
  for (const auto& item : split_list(text)) point.push_back(Rational::parse(item));
  return point;
}

}  // namespace wblowup
