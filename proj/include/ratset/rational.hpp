#ifndef RATSET_RATIONAL_HPP
#define RATSET_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ratset {

using BigInt = boost::multiprecision::cpp_int;

/// Exact non-negative rational number, always kept in lowest terms with a
/// positive denominator.
///
/// This is the value type of quotient sets. Unreduced (numerator,
/// denominator) pairs only ever appear as digit streams inside pair words.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : Rational(BigInt(n), BigInt(1)) {}  // NOLINT
  Rational(BigInt num, BigInt den);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  /// Parses "p/q" or "p" (decimal, non-negative).
  static Rational parse(std::string_view text);

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  friend Rational operator+(const Rational& x, const Rational& y);
  /// Throws InvalidArgument when the result would be negative.
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x,
                                          const Rational& y);

 private:
  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ratset

#endif  // RATSET_RATIONAL_HPP
