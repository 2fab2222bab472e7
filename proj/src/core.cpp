#include "ratset/core.hpp"

#include <algorithm>

namespace ratset {

Base::Base(int k) : k_(k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "base must be >= 2, got " + std::to_string(k));
}

Order flip(Order o) { return o == Order::Msb ? Order::Lsb : Order::Msb; }

const char* to_string(Order o) { return o == Order::Msb ? "msb" : "lsb"; }

Word::Word(Base base, Order order, std::vector<Digit> digits)
    : base_(base), order_(order), digits_(std::move(digits)) {
  for (Digit d : digits_)
    if (d >= base_.value())
      throw Error(ErrorCode::InvalidArgument, "digit " + std::to_string(d) + " out of range for base " +
                                                  std::to_string(base_.value()));
}

Word Word::from_string(Base base, std::string_view digits, Order order) {
  std::vector<Digit> out;
  out.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw Error(ErrorCode::InvalidArgument, "bad digit character");
    out.push_back(static_cast<Digit>(c - '0'));
  }
  return Word(base, order, std::move(out));
}

Word Word::reversed() const {
  std::vector<Digit> d(digits_.rbegin(), digits_.rend());
  return Word(base_, flip(order_), std::move(d));
}

std::string Word::to_string() const {
  std::string s;
  auto emit = [&](Digit d) {
    if (base_.value() <= 10)
      s.push_back(static_cast<char>('0' + d));
    else
      s += "(" + std::to_string(d) + ")";
  };
  if (order_ == Order::Msb)
    std::for_each(digits_.begin(), digits_.end(), emit);
  else
    std::for_each(digits_.rbegin(), digits_.rend(), emit);
  return s;
}

PairWord::PairWord(Base base, Order order, std::vector<PairDigit> digits)
    : base_(base), order_(order), digits_(std::move(digits)) {
  for (auto [a, b] : digits_)
    if (a >= base_.value() || b >= base_.value())
      throw Error(ErrorCode::InvalidArgument, "pair digit out of range for base " + std::to_string(base_.value()));
}

PairWord PairWord::reversed() const {
  std::vector<PairDigit> d(digits_.rbegin(), digits_.rend());
  return PairWord(base_, flip(order_), std::move(d));
}

std::string PairWord::to_string() const {
  std::string s;
  for (auto [a, b] : digits_) s += "[" + std::to_string(a) + "," + std::to_string(b) + "]";
  return s.empty() ? "eps" : s;
}

BigInt eval(const Word& w) {
  BigInt v = 0;
  const int k = w.base().value();
  if (w.order() == Order::Msb) {
    for (Digit d : w.digits()) v = v * k + d;
  } else {
    for (auto it = w.digits().rbegin(); it != w.digits().rend(); ++it) v = v * k + *it;
  }
  return v;
}

Word canonical(const BigInt& n, Base base) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "canonical representation of a negative number");
  std::vector<Digit> digits;
  BigInt m = n;
  const int k = base.value();
  while (m > 0) {
    digits.push_back(static_cast<Digit>(static_cast<int>(m % k)));
    m /= k;
  }
  std::reverse(digits.begin(), digits.end());
  return Word(base, Order::Msb, std::move(digits));
}

Word project(const PairWord& w, int which) {
  if (which != 1 && which != 2) throw Error(ErrorCode::InvalidArgument, "projection index must be 1 or 2");
  std::vector<Digit> d;
  d.reserve(w.size());
  for (auto p : w.digits()) d.push_back(which == 1 ? p.a : p.b);
  return Word(w.base(), w.order(), std::move(d));
}

PairWord pair(const Word& x, const Word& y) {
  if (x.size() != y.size())
    throw Error(ErrorCode::InvalidArgument, "pair: length mismatch (" + std::to_string(x.size()) + " vs " +
                                                std::to_string(y.size()) + ")");
  if (x.base() != y.base()) throw Error(ErrorCode::InvalidArgument, "pair: base mismatch");
  if (x.order() != y.order()) throw Error(ErrorCode::InvalidArgument, "pair: order mismatch");
  std::vector<PairDigit> d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = {x.digits()[i], y.digits()[i]};
  return PairWord(x.base(), x.order(), std::move(d));
}

Rational quo(const PairWord& w) {
  BigInt den = eval(project(w, 2));
  if (den == 0) throw Error(ErrorCode::UndefinedQuotient, "quotient undefined: denominator of " + w.to_string() + " is 0");
  return Rational(eval(project(w, 1)), den);
}

int nu_k(const BigInt& n, Base base) {
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "nu_k requires n >= 1");
  int e = 0;
  BigInt m = n;
  while (m % base.value() == 0) {
    m /= base.value();
    ++e;
  }
  return e;
}

PrimeSet prime_divisors(const BigInt& n, std::uint64_t bound) {
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "prime_divisors requires n >= 1");
  if (n > bound)
    throw Error(ErrorCode::InvalidArgument, "prime_divisors: " + n.str() + " exceeds factorization bound");
  auto m = static_cast<std::uint64_t>(n);
  PrimeSet out;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      out.insert(BigInt(p));
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) out.insert(BigInt(m));
  return out;
}

bool in_pi_d(const BigInt& n, const PrimeSet& d) {
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "in_pi_d requires n >= 1");
  BigInt m = n;
  for (const BigInt& p : d)
    while (m % p == 0) m /= p;
  return m == 1;
}

BigInt pow_big(int base, std::size_t exponent) {
  BigInt r = 1;
  for (std::size_t i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace ratset
