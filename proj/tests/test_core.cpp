#include "doctest.h"
#include "ratset/core.hpp"
#include "support.hpp"

using namespace ratset;

namespace {

PairWord word_43_18() {
  return pair(Word::from_string(Base(2), "101011"), Word::from_string(Base(2), "010010"));
}

}  // namespace

TEST_CASE("rational values are reduced") {
  Rational r(BigInt(6), BigInt(4));
  CHECK(r.num() == 3);
  CHECK(r.den() == 2);
  CHECK(Rational(BigInt(0), BigInt(7)).den() == 1);
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational(5, 2).to_string() == "5/2");
  CHECK(Rational(BigInt(8), BigInt(4)).to_string() == "2");
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), Error);
  CHECK_THROWS_AS(Rational::parse("1/x"), Error);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK_THROWS_AS(Rational(1, 3) - Rational(1, 2), Error);

  auto& gen = support::rng();
  for (int i = 0; i < 200; ++i) {
    BigInt p = gen() % 1000, q = gen() % 1000 + 1;
    Rational x(p, q);
    CHECK(gcd(x.num(), x.den()) == 1);
    CHECK(x.num() * q == p * x.den());
  }
}

TEST_CASE("eval and canonical") {
  CHECK(eval(Word::from_string(Base(2), "101011")) == 43);
  CHECK(eval(Word(Base(5), Order::Msb)) == 0);
  CHECK(eval(Word::from_string(Base(2), "0011")) == 3);
  CHECK(eval(Word::from_string(Base(2), "1101", Order::Lsb)) == 11);
  CHECK(canonical(0, Base(2)).empty());
  CHECK(canonical(43, Base(2)).to_string() == "101011");
  CHECK(canonical(6, Base(2)).to_string() == "110");

  auto& gen = support::rng();
  for (int k = 2; k <= 10; ++k) {
    for (int i = 0; i < 50; ++i) {
      BigInt n = gen() % 100000;
      Word w = canonical(n, Base(k));
      CHECK(eval(w) == n);
      if (!w.empty()) CHECK(w.digits().front() != 0);
    }
  }
  // canonical(eval(w)) strips leading zeros
  Word padded = Word::from_string(Base(3), "00121");
  CHECK(canonical(eval(padded), Base(3)).to_string() == "121");
}

TEST_CASE("projection and pairing") {
  PairWord w = word_43_18();
  CHECK(w.to_string() == "[1,0][0,1][1,0][0,0][1,1][1,0]");
  CHECK(project(w, 1).to_string() == "101011");
  CHECK(project(w, 2).to_string() == "010010");
  CHECK(project(PairWord(Base(2), Order::Msb), 1).empty());
  CHECK(pair(Word(Base(2), Order::Msb), Word(Base(2), Order::Msb)).empty());
  CHECK(pair(Word::from_string(Base(2), "1"), Word::from_string(Base(2), "0")).to_string() == "[1,0]");
  CHECK_THROWS_AS(pair(Word::from_string(Base(2), "1"), Word::from_string(Base(2), "10")), Error);
  CHECK_THROWS_AS(pair(Word::from_string(Base(2), "1"), Word::from_string(Base(3), "1")), Error);

  auto& gen = support::rng();
  for (int i = 0; i < 100; ++i) {
    std::size_t len = gen() % 8;
    std::vector<Digit> x(len), y(len);
    for (auto& d : x) d = gen() % 3;
    for (auto& d : y) d = gen() % 3;
    Word wx(Base(3), Order::Msb, x), wy(Base(3), Order::Msb, y);
    PairWord p = pair(wx, wy);
    CHECK(project(p, 1) == wx);
    CHECK(project(p, 2) == wy);
  }
}

TEST_CASE("quotients") {
  CHECK(quo(word_43_18()) == Rational(43, 18));
  CHECK(quo(PairWord(Base(2), Order::Msb, {{1, 1}})) == Rational(1));
  CHECK(quo(PairWord(Base(2), Order::Msb, {{0, 1}, {1, 1}})) == Rational(1, 3));
  CHECK_THROWS_AS(quo(PairWord(Base(2), Order::Msb, {{1, 0}})), Error);
  CHECK_THROWS_AS(quo(PairWord(Base(2), Order::Msb)), Error);
  // LSB-first words are read from the right
  CHECK(quo(PairWord(Base(2), Order::Lsb, {{1, 1}, {0, 1}})) == Rational(1, 3));

  // padding on either side leaves the quotient unchanged
  auto& gen = support::rng();
  for (int i = 0; i < 200; ++i) {
    std::size_t len = 1 + gen() % 6;
    std::vector<PairDigit> d(len);
    for (auto& x : d) x = {static_cast<Digit>(gen() % 3), static_cast<Digit>(gen() % 3)};
    d.back().b = 1 + gen() % 2;
    PairWord w(Base(3), Order::Msb, d);
    auto lead = d, trail = d;
    lead.insert(lead.begin(), PairDigit{0, 0});
    trail.push_back(PairDigit{0, 0});
    CHECK(quo(PairWord(Base(3), Order::Msb, lead)) == quo(w));
    CHECK(quo(PairWord(Base(3), Order::Msb, trail)) == quo(w));
  }
}

TEST_CASE("k-adic valuation and prime sets") {
  CHECK(nu_k(60, Base(2)) == 2);
  CHECK(nu_k(7, Base(2)) == 0);
  CHECK(nu_k(18, Base(3)) == 2);
  CHECK_THROWS_AS(nu_k(0, Base(2)), Error);

  CHECK(prime_divisors(60) == PrimeSet{2, 3, 5});
  CHECK(prime_divisors(1).empty());
  CHECK(prime_divisors(49) == PrimeSet{7});
  CHECK_THROWS_AS(prime_divisors(BigInt(1) << 50, 1000), Error);

  CHECK(in_pi_d(12, {2, 3}));
  CHECK_FALSE(in_pi_d(10, {2, 3}));
  CHECK(in_pi_d(1, {}));
}

TEST_CASE("bases and digits are validated") {
  CHECK_THROWS_AS(Base(1), Error);
  CHECK_THROWS_AS(Word::from_string(Base(2), "102"), Error);
  CHECK_THROWS_AS(PairWord(Base(2), Order::Msb, {{2, 0}}), Error);
  CHECK(Word::from_string(Base(2), "110").reversed().to_string() == "110");
  CHECK(Word::from_string(Base(2), "110").reversed().order() == Order::Lsb);
}
