#include "macdual/parse.hpp"

#include <cctype>
#include <string>

#include "macdual/error.hpp"

namespace macdual {

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text, Polynomial::Notation notation,
         std::size_t line)
      : ring_(ring), text_(text), notation_(notation), line_(line) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse,
                std::to_string(line_) + ":" + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_space();
    Polynomial acc(ring_);
    bool first = true;
    while (true) {
      bool negate = false;
      if (accept('-')) {
        negate = true;
      } else if (!first && !accept('+')) {
        break;
      } else if (first) {
        accept('+');
      }
      Polynomial t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (accept('*')) acc *= power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      base = base.pow(static_cast<unsigned>(unsigned_literal().get_ui()));
    }
    return base;
  }

  mpz_class unsigned_literal() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = unsigned_literal();
      mpz_class den = 1;
      const auto save = pos_;
      if (accept('/')) {
        skip_space();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          den = unsigned_literal();
          if (den == 0) fail("zero denominator");
        } else {
          pos_ = save;
        }
      }
      return Polynomial::constant(ring_, Scalar::from_fraction(ring_->field(), num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const auto start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      const auto idx = notation_ == Polynomial::Notation::Dual ? ring_->dual_index_of(name)
                                                                : ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const RingPtr& ring_;
  std::string_view text_;
  Polynomial::Notation notation_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text,
                            Polynomial::Notation notation, std::size_t line) {
  return Parser(ring, text, notation, line).parse();
}

}  // namespace macdual
