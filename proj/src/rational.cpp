#include "ratset/rational.hpp"

#include <charconv>
#include <ostream>

#include "ratset/error.hpp"

namespace ratset {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  if (num_ < 0 || den_ < 0)
    throw Error(ErrorCode::InvalidArgument, "negative rationals are not supported");
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

namespace {

BigInt parse_natural(std::string_view s, std::string_view whole) {
  if (s.empty()) throw Error(ErrorCode::InvalidArgument, "malformed rational '" + std::string(whole) + "'");
  BigInt v = 0;
  for (char c : s) {
    if (c < '0' || c > '9')
      throw Error(ErrorCode::InvalidArgument, "malformed rational '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_natural(text, text), 1);
  BigInt den = parse_natural(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_natural(text.substr(0, slash), text), den);
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational operator+(const Rational& x, const Rational& y) {
  return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) {
  BigInt n = x.num_ * y.den_ - y.num_ * x.den_;
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative difference " + x.to_string() + " - " + y.to_string());
  return Rational(std::move(n), x.den_ * y.den_);
}

Rational operator*(const Rational& x, const Rational& y) {
  return Rational(x.num_ * y.num_, x.den_ * y.den_);
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.num_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  return Rational(x.num_ * y.den_, x.den_ * y.num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  BigInt l = x.num_ * y.den_;
  BigInt r = y.num_ * x.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace ratset
