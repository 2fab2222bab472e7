#ifndef RATSET_CORE_HPP
#define RATSET_CORE_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ratset/error.hpp"
#include "ratset/rational.hpp"

namespace ratset {

/// Numeration base k >= 2.
class Base {
 public:
  explicit Base(int k);
  int value() const noexcept { return k_; }
  friend bool operator==(Base, Base) = default;

 private:
  int k_;
};

/// Significance order of a digit stream. Every word and automaton carries
/// one explicitly; conversion is always an explicit reversal.
enum class Order { Msb, Lsb };

Order flip(Order o);
const char* to_string(Order o);

using Digit = std::uint8_t;

struct PairDigit {
  Digit a = 0;  // numerator digit
  Digit b = 0;  // denominator digit
  friend bool operator==(PairDigit, PairDigit) = default;
  friend auto operator<=>(PairDigit, PairDigit) = default;
};

/// Word over Sigma_k.
class Word {
 public:
  Word(Base base, Order order, std::vector<Digit> digits = {});
  /// Parses a digit string such as "101011"; digits must be < k (k <= 10).
  static Word from_string(Base base, std::string_view digits,
                          Order order = Order::Msb);

  Base base() const noexcept { return base_; }
  Order order() const noexcept { return order_; }
  const std::vector<Digit>& digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }

  /// Same word read in the opposite significance order.
  Word reversed() const;
  /// Digits in MSB-first order, as a string.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Base base_;
  Order order_;
  std::vector<Digit> digits_;
};

/// Word over Sigma_k x Sigma_k carrying a (numerator, denominator) pair.
class PairWord {
 public:
  PairWord(Base base, Order order, std::vector<PairDigit> digits = {});

  Base base() const noexcept { return base_; }
  Order order() const noexcept { return order_; }
  const std::vector<PairDigit>& digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }

  PairWord reversed() const;
  /// "[a,b][a,b]..." in stored order.
  std::string to_string() const;

  friend bool operator==(const PairWord&, const PairWord&) = default;

 private:
  Base base_;
  Order order_;
  std::vector<PairDigit> digits_;
};

/// Integer value of a word (LSB-first words are read accordingly); the empty
/// word evaluates to 0.
BigInt eval(const Word& w);

/// Canonical MSB-first representation of n: no leading zeros, 0 -> empty.
Word canonical(const BigInt& n, Base base);

/// Componentwise projection; `which` is 1 (numerator) or 2 (denominator).
Word project(const PairWord& w, int which);

/// Joins two equal-length words of the same base and order.
PairWord pair(const Word& x, const Word& y);

/// eval(project(w,1)) / eval(project(w,2)); throws UndefinedQuotient when the
/// denominator evaluates to 0.
Rational quo(const PairWord& w);

/// Largest e with k^e | n; n must be positive.
int nu_k(const BigInt& n, Base base);

using PrimeSet = std::set<BigInt>;

/// Trial-division bound used by prime_divisors.
inline constexpr std::uint64_t kDefaultFactorBound = 1'000'000'000'000ULL;

/// Set of prime divisors of n >= 1. Throws InvalidArgument when n exceeds
/// `bound`.
PrimeSet prime_divisors(const BigInt& n,
                        std::uint64_t bound = kDefaultFactorBound);

/// True iff every prime divisor of n lies in d.
bool in_pi_d(const BigInt& n, const PrimeSet& d);

BigInt pow_big(int base, std::size_t exponent);

}  // namespace ratset

#endif  // RATSET_CORE_HPP
