#include "fba/rational.hpp"

#include <stdexcept>

#include "fba/error.hpp"

namespace fba {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    return j;
  };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t end_num = digits(i);
  if (end_num == i) throw ParseError("rational: expected digits", i);
  std::string num(text.substr(0, end_num));
  if (num.front() == '+') num.erase(0, 1);
  std::string den = "1";
  if (end_num < text.size()) {
    if (text[end_num] != '/') throw ParseError("rational: unexpected character", end_num);
    std::size_t end_den = digits(end_num + 1);
    if (end_den == end_num + 1) throw ParseError("rational: expected denominator digits", end_num + 1);
    if (end_den != text.size()) throw ParseError("rational: trailing characters", end_den);
    den = std::string(text.substr(end_num + 1, end_den - end_num - 1));
  }
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw ParseError("rational: zero denominator", end_num + 1);
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw std::domain_error("rational: zero to a negative power");
    return Rational(1) / pow(-exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

}  // namespace fba
