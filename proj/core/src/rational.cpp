#include "trigpatch/rational.hpp"

#include <cctype>

#include "trigpatch/error.hpp"

namespace trigpatch {

Rational::Rational(long num, long den) {
  if (den == 0) throw validation_error("DivisionByZero", "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw validation_error("DivisionByZero", "division by zero rational");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return validation_error("ParseError", "malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  auto integer_ok = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!integer_ok(num) || !integer_ok(den) || den[0] == '-' || den[0] == '+') throw bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw validation_error("DivisionByZero", "zero denominator in '" + s + "'");
  return Rational(mpq_class(n, d));
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

}  // namespace trigpatch
