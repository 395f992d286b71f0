#include "tradenet/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace tradenet {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool valid_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return all_digits(s);
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  value_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  value_ = mpq_class(num) / mpq_class(den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw std::domain_error("rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::abs() const {
  return is_negative() ? -*this : *this;
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("rational: cannot parse \"" + std::string(text) + "\""); };

  auto space = text.find(' ');
  if (space != std::string_view::npos) {
    // mixed form: w r/q
    std::string_view whole = text.substr(0, space);
    std::string_view frac = text.substr(space + 1);
    auto slash = frac.find('/');
    if (slash == std::string_view::npos) fail();
    std::string_view num = frac.substr(0, slash);
    std::string_view den = frac.substr(slash + 1);
    if (!valid_integer(whole) || !all_digits(num) || !all_digits(den)) fail();
    mpz_class w{std::string(whole)};
    mpz_class r{std::string(num)};
    mpz_class q{std::string(den)};
    if (q == 0) throw std::invalid_argument("rational: zero denominator");
    Rational magnitude(mpz_class(::abs(w) * q + r), q);
    return whole.front() == '-' ? -magnitude : magnitude;
  }

  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer(text)) fail();
    mpz_class n{std::string(text)};
    return Rational(n);
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (!valid_integer(num) || !all_digits(den)) fail();
  mpz_class p{std::string(num)};
  mpz_class q{std::string(den)};
  if (q == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(p, q);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::mixed_str() const {
  if (is_integer()) return str();
  mpz_class num = value_.get_num(), den = value_.get_den();
  mpz_class a = ::abs(num);
  if (a < den) return str();
  mpz_class whole = a / den, rem = a % den;
  std::string s = whole.get_str() + " " + rem.get_str() + "/" + den.get_str();
  return num < 0 ? "-" + s : s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace tradenet
