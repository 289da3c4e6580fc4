#include "qs/parse.hpp"

#include <cctype>

#include "qs/error.hpp"

namespace qs {

namespace {

// Recursive-descent parser; see the grammar in parse.hpp.
class Parser {
 public:
  Parser(VarContextPtr ctx, const std::string& text)
      : ctx_(std::move(ctx)), text_(text) {}

  MultiPoly run() {
    MultiPoly result = expr();
    skip_ws();
    if (pos_ != text_.size())
      fail(ErrorKind::ParseError, "trailing input at offset " + std::to_string(pos_));
    return result;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek_is(c)) return false;
    ++pos_;
    return true;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  MultiPoly factor() {
    // Unary minus binds looser than '^', so -x^2 means -(x^2).
    if (accept('-')) return -factor();
    MultiPoly b = base();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start)
        fail(ErrorKind::ParseError, "expected exponent at offset " + std::to_string(pos_));
      unsigned long e = std::stoul(text_.substr(start, pos_ - start));
      if (e > 100000u) fail(ErrorKind::ParseError, "exponent too large");
      return b.pow(static_cast<std::uint32_t>(e));
    }
    return b;
  }

  MultiPoly base() {
    skip_ws();
    if (pos_ >= text_.size())
      fail(ErrorKind::ParseError, "unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')'))
        fail(ErrorKind::ParseError, "expected ')' at offset " + std::to_string(pos_));
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail(ErrorKind::ParseError,
         std::string("unexpected character '") + c + "' at offset " + std::to_string(pos_));
  }

  MultiPoly number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string lit = text_.substr(start, pos_ - start);
    // Optional "/q" makes a rational literal, but only when followed by
    // digits (so "1/(…)" is rejected rather than misparsed).
    std::size_t save = pos_;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      std::size_t slash = pos_++;
      skip_ws();
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ > dstart) {
        lit += "/" + text_.substr(dstart, pos_ - dstart);
      } else {
        pos_ = slash;  // not a rational literal; leave '/' for the caller
        (void)save;
        fail(ErrorKind::ParseError, "expected digits after '/' at offset " +
                                        std::to_string(slash + 1));
      }
    }
    return MultiPoly(ctx_, rational_from_string(lit));
  }

  MultiPoly identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    return MultiPoly::variable(ctx_, ctx_->index_of(name));
  }

  VarContextPtr ctx_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const VarContextPtr& ctx, const std::string& text) {
  return Parser(ctx, text).run();
}

}  // namespace qs
