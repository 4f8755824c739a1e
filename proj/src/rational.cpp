#include "diored/rational.hpp"

#include <cctype>

#include "diored/errors.hpp"

namespace diored {

std::string rational_to_string(const mpq_class& value) {
  mpq_class canon(value);
  canon.canonicalize();
  if (canon.get_den() == 1) return canon.get_num().get_str();
  return canon.get_num().get_str() + "/" + canon.get_den().get_str();
}

mpq_class rational_from_string(std::string_view text) {
  if (text.empty()) fail(ErrorKind::ParseError, "empty rational literal");
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '-' || text[pos] == '+') {
    negative = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&](std::string& out) {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail(ErrorKind::ParseError, "expected digits in rational literal '" + std::string(text) + "'");
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      out.push_back(text[pos++]);
  };
  std::string num, den;
  read_digits(num);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    read_digits(den);
  }
  if (pos != text.size())
    fail(ErrorKind::ParseError, "trailing characters in rational literal '" + std::string(text) + "'");
  mpq_class value;
  if (den.empty()) {
    value = mpq_class(mpz_class(num));
  } else {
    mpz_class d(den);
    if (d == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    value = mpq_class(mpz_class(num), d);
    value.canonicalize();
  }
  if (negative) value = -value;
  return value;
}

bool is_integer(const mpq_class& value) {
  mpq_class canon(value);
  canon.canonicalize();
  return canon.get_den() == 1;
}

}  // namespace diored
