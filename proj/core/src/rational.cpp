#include "infoloss/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace infoloss {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(mpz_class(num), mpz_class(den));
  value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  if (text[pos] == '+' || text[pos] == '-') ++pos;
  std::size_t digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
    ++digits;
  }
  if (digits == 0) return std::nullopt;

  std::string num(text.substr(0, pos));
  if (num.front() == '+') num.erase(0, 1);  // mpz rejects a leading '+'
  std::string den = "1";
  if (pos < text.size()) {
    if (text[pos] != '/') return std::nullopt;
    ++pos;
    std::size_t den_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_start || pos != text.size()) return std::nullopt;
    den.assign(text.substr(den_start));
  }

  mpz_class n(num), d(den);
  if (d == 0) return std::nullopt;
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace infoloss
