#include "qs/rational.hpp"

#include <cctype>

#include "qs/error.hpp"

namespace qs {

Rational rational_from_string(const std::string& text) {
  if (text.empty()) fail(ErrorKind::ParseError, "empty rational literal");
  // Validate shape before handing to GMP: optional sign, digits, optional
  // "/digits".  mpq_class would accept bases and whitespace we do not want.
  std::size_t i = 0;
  auto digits = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return pos > start;
  };
  if (text[i] == '+' || text[i] == '-') ++i;
  if (!digits(i)) fail(ErrorKind::ParseError, "bad rational literal '" + text + "'");
  if (i < text.size()) {
    if (text[i] != '/') fail(ErrorKind::ParseError, "bad rational literal '" + text + "'");
    ++i;
    std::size_t den_start = i;
    if (!digits(i) || i != text.size())
      fail(ErrorKind::ParseError, "bad rational literal '" + text + "'");
    if (text.compare(den_start, std::string::npos, "0") == 0 ||
        mpz_class(text.substr(den_start)) == 0)
      fail(ErrorKind::ParseError, "zero denominator in '" + text + "'");
  }
  // GMP rejects a leading '+'; the shape above already validated it.
  Rational r(text[0] == '+' ? text.substr(1) : text);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& value) {
  return value.get_str();  // canonical p or p/q
}

}  // namespace qs
