#include "nonarch/rational.hpp"

#include <cctype>

#include "nonarch/errors.hpp"

namespace nonarch {

std::string rational_to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal", 0);
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = (text[i] == '-');
    ++i;
  }
  std::size_t digits_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == digits_start) throw ParseError("expected digits in rational literal", i);
  mpz_class num(std::string(text.substr(digits_start, i - digits_start)), 10);
  mpz_class den(1);
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::size_t den_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start) throw ParseError("expected denominator digits", i);
    den = mpz_class(std::string(text.substr(den_start, i - den_start)), 10);
    if (den == 0) throw ParseError("zero denominator", den_start);
  }
  if (i != text.size()) throw ParseError("trailing characters after rational", i);
  if (negative) num = -num;
  return make_rational(num, den);
}

mpz_class floor_rational(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

}  // namespace nonarch
