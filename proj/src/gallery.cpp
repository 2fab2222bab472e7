#include "ratset/gallery.hpp"

#include <functional>

namespace ratset {

namespace {

using Pred = std::function<bool(PairDigit)>;

void edges(Automaton& a, StateId from, StateId to, const Pred& pred) {
  const Alphabet& ab = a.alphabet();
  for (Symbol x = 0; x < ab.size(); ++x)
    if (pred(ab.decode(x))) a.add_transition(from, x, to);
}

Pred digit(int a, int b) {
  return [=](PairDigit d) { return d.a == a && d.b == b; };
}

const Pred any = [](PairDigit) { return true; };

Base base_or(int k, int fallback) { return Base(k == 0 ? fallback : k); }

void require_default(std::string_view name, int k, int fixed) {
  if (k != 0 && k != fixed)
    throw Error(ErrorCode::InvalidArgument, std::string(name) + " is defined for k=" + std::to_string(fixed) + " only");
}

std::vector<GallerySample> samples(std::initializer_list<Rational> xs, const char* provenance) {
  std::vector<GallerySample> out;
  for (const Rational& x : xs) out.push_back({x, provenance});
  return out;
}

// [d,1] for any d, or [d,0][*,0]*[*,1] with d != 0.
Automaton build_l0(Base base) {
  Automaton a(Alphabet(base, 2), Order::Msb);
  StateId s = a.add_state(), mid = a.add_state(), end = a.add_state(true);
  a.add_initial(s);
  edges(a, s, end, [](PairDigit d) { return d.b == 1; });
  edges(a, s, mid, [](PairDigit d) { return d.a != 0 && d.b == 0; });
  edges(a, mid, mid, [](PairDigit d) { return d.b == 0; });
  edges(a, mid, end, [](PairDigit d) { return d.b == 1; });
  return a;
}

Automaton build_l1(Base base) {
  Automaton a(Alphabet(base, 2), Order::Msb);
  StateId s = a.add_state(), t = a.add_state(true);
  a.add_initial(s);
  edges(a, s, s, any);
  edges(a, s, t, [](PairDigit d) { return d.b != 0; });
  edges(a, t, t, any);
  return a;
}

Automaton build_l2(Base base) {
  Automaton a(Alphabet(base, 2), Order::Msb);
  StateId lead = a.add_state(), ones = a.add_state(true), tail = a.add_state(true);
  a.add_initial(lead);
  edges(a, lead, lead, [](PairDigit d) { return d.b == 0; });
  edges(a, lead, ones, [](PairDigit d) { return d.b == 1; });
  edges(a, ones, ones, [](PairDigit d) { return d.b == 1; });
  edges(a, ones, tail, [](PairDigit d) { return d.b == 0; });
  edges(a, tail, tail, [](PairDigit d) { return d.b == 0; });
  return a;
}

// State = (parity of numerator ones, parity of denominator ones).
Automaton build_l3() {
  Automaton a(Alphabet(Base(2), 2), Order::Msb);
  for (int s = 0; s < 4; ++s) a.add_state(s == 1);
  a.add_initial(0);
  for (int s = 0; s < 4; ++s)
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        int pa = (s >> 1) ^ x, pb = (s & 1) ^ y;
        edges(a, s, (pa << 1) | pb, digit(x, y));
      }
  return a;
}

Automaton build_l4() {
  Automaton a(Alphabet(Base(3), 2), Order::Msb);
  StateId s = a.add_state(), t = a.add_state(true);
  a.add_initial(s);
  edges(a, s, t, digit(0, 1));
  edges(a, t, t, [](PairDigit d) { return d.b == 0 && d.a != 1; });
  return a;
}

// [0,1]{[0,0],[0,1]}*{[1,0],[1,1]}, plus [1,1] so that 1 = 1/1 is present.
Automaton build_l5() {
  Automaton a(Alphabet(Base(2), 2), Order::Msb);
  StateId s = a.add_state(), mid = a.add_state(), end = a.add_state(true);
  a.add_initial(s);
  edges(a, s, mid, digit(0, 1));
  edges(a, mid, mid, [](PairDigit d) { return d.a == 0; });
  edges(a, mid, end, [](PairDigit d) { return d.a == 1; });
  edges(a, s, end, digit(1, 1));
  return a;
}

// Base-4 digits read LSB-first with a pending carry c: n is a sum of
// e_i 4^i with e_i in {-1,0,1} iff no position sees d + c = 2 (mod 4).
bool signed_step(int c, int d, int& next) {
  int t = d + c;
  switch (t % 4) {
    case 0: next = t / 4; return true;
    case 1: next = 0; return true;
    case 3: next = 1; return true;
    default: return false;
  }
}

Automaton build_l6() {
  const Alphabet ab(Base(4), 2);
  Automaton lsb(ab, Order::Lsb);
  for (int s = 0; s < 4; ++s) lsb.add_state(true);
  lsb.add_initial(0);
  for (int s = 0; s < 4; ++s)
    for (Symbol x = 0; x < ab.size(); ++x) {
      PairDigit d = ab.decode(x);
      int ca, cb;
      if (signed_step(s >> 1, d.a, ca) && signed_step(s & 1, d.b, cb)) lsb.add_transition(s, x, (ca << 1) | cb);
    }
  Automaton no_lead(ab, Order::Msb);
  StateId s = no_lead.add_state(true), t = no_lead.add_state(true);
  no_lead.add_initial(s);
  edges(no_lead, s, t, [](PairDigit d) { return d.a != 0 || d.b != 0; });
  edges(no_lead, t, t, any);
  return minimize(product(to_order(lsb, Order::Msb), no_lead, BoolOp::And));
}

Automaton build_l7() {
  Automaton a(Alphabet(Base(2), 2), Order::Msb);
  StateId s = a.add_state(), x1 = a.add_state(), x2 = a.add_state(), end = a.add_state(true);
  a.add_initial(s);
  Pred x = [](PairDigit d) { return d.a == 0; };
  edges(a, s, x1, digit(1, 0));
  edges(a, x1, x1, x);
  edges(a, x1, x2, digit(0, 1));
  edges(a, x2, x2, x);
  edges(a, x2, end, digit(1, 1));
  return a;
}

// Numerator 1^i (i >= 3); denominator odd, above 1 and below the numerator.
Automaton build_l8() {
  Automaton a(Alphabet(Base(2), 2), Order::Msb);
  // length 0..3+, saturating
  StateId len[4];
  for (auto& s : len) s = a.add_state(true);
  a.add_initial(len[0]);
  for (int i = 0; i < 3; ++i) edges(a, len[i], len[i + 1], [](PairDigit d) { return d.a == 1; });
  edges(a, len[3], len[3], [](PairDigit d) { return d.a == 1; });
  Automaton lengths = a;
  for (int i = 0; i < 3; ++i) lengths.set_accepting(len[i], false);

  // a 1 before a final 1
  Automaton odd(Alphabet(Base(2), 2), Order::Msb);
  StateId o0 = odd.add_state(), o1 = odd.add_state(), o2 = odd.add_state(true);
  odd.add_initial(o0);
  edges(odd, o0, o0, any);
  edges(odd, o0, o1, [](PairDigit d) { return d.b == 1; });
  edges(odd, o1, o1, any);
  edges(odd, o1, o2, [](PairDigit d) { return d.b == 1; });

  // some denominator digit is 0
  Automaton below(Alphabet(Base(2), 2), Order::Msb);
  StateId b0 = below.add_state(), b1 = below.add_state(true);
  below.add_initial(b0);
  edges(below, b0, b0, any);
  edges(below, b0, b1, [](PairDigit d) { return d.b == 0; });
  edges(below, b1, b1, any);

  return minimize(product(product(lengths, odd, BoolOp::And), below, BoolOp::And));
}

Automaton build_s(Base base, bool reciprocal) {
  Automaton a(Alphabet(base, 2), Order::Msb);
  StateId s = a.add_state(), first = a.add_state(), second = a.add_state(true);
  a.add_initial(s);
  Pred head = reciprocal ? digit(0, 1) : digit(1, 0);
  edges(a, s, first, head);
  edges(a, first, first, head);
  edges(a, first, second, digit(1, 1));
  edges(a, second, second, digit(1, 1));
  return a;
}

}  // namespace

std::vector<std::string> gallery_names() {
  return {"L0", "L1", "L2", "L3", "L4_cantor", "L5_unit_fractions", "L6_lvdp", "L7_fermat", "L8_mersenne",
          "S1_powers", "S3_reciprocal_powers"};
}

GalleryEntry build_gallery(std::string_view name, int k) {
  if (name == "L0") {
    Base b = base_or(k, 2);
    return {"L0", b, build_l0(b), "numerator canonical, denominator value 1; quotient set N",
            samples({0, 1, 2, 5, 50}, "definition"),
            samples({Rational(1, 2), Rational(3, 2)}, "definition")};
  }
  if (name == "L1") {
    Base b = base_or(k, 2);
    return {"L1", b, build_l1(b), "some denominator digit nonzero; quotient set all non-negative rationals",
            samples({0, 1, Rational(1, 2), Rational(7, 3), 12}, "definition"), {}};
  }
  if (name == "L2") {
    Base b = base_or(k, 2);
    return {"L2", b, build_l2(b), "denominator digits 0*1+0*; quotient set all non-negative rationals",
            samples({0, 1, Rational(1, 3), Rational(1, 6), Rational(5, 7), 9}, "repr_in_l2"), {}};
  }
  if (name == "L3") {
    require_default(name, k, 2);
    auto members = samples({Rational(3, 5), 3, Rational(3, 7)}, "oracle");
    return {"L3", Base(2), build_l3(),
            "even count of ones in the numerator, odd in the denominator; misses every power of 2",
            members, samples({1, 2, 4, Rational(1, 2), Rational(1, 4)}, "power of 2")};
  }
  if (name == "L4_cantor") {
    require_default(name, k, 3);
    return {"L4_cantor", Base(3), build_l4(), "numerator digits in {0,2}, denominator a power of 3",
            samples({0, Rational(2, 3), Rational(2, 9), Rational(8, 9), Rational(20, 27)}, "definition"),
            samples({Rational(1, 3), Rational(1, 2), 1}, "definition")};
  }
  if (name == "L5_unit_fractions") {
    require_default(name, k, 2);
    return {"L5_unit_fractions", Base(2), build_l5(), "numerator 1, any positive denominator; quotient set {1/n : n >= 1}",
            samples({1, Rational(1, 2), Rational(1, 3), Rational(1, 64)}, "definition"),
            samples({0, 2, Rational(2, 3)}, "definition")};
  }
  if (name == "L6_lvdp") {
    require_default(name, k, 4);
    return {"L6_lvdp", Base(4), build_l6(),
            "canonical pairs of numbers written with base-4 digits 0, 1, -1",
            samples({1, 3, 5, Rational(1, 3), Rational(4, 5)}, "definition"),
            samples({2, 8}, "odd 2-adic valuation")};
  }
  if (name == "L7_fermat") {
    require_default(name, k, 2);
    return {"L7_fermat", Base(2), build_l7(), "numerator 2^i + 1 (i >= 2), odd denominator strictly between 1 and it",
            samples({Rational(5, 3), Rational(9, 5), Rational(9, 7), 3}, "definition"),
            samples({Rational(5, 2), Rational(5, 4), 1}, "definition")};
  }
  if (name == "L8_mersenne") {
    require_default(name, k, 2);
    return {"L8_mersenne", Base(2), build_l8(), "numerator 2^i - 1 (i >= 3), odd denominator strictly between 1 and it",
            samples({Rational(7, 3), Rational(7, 5), 3, Rational(15, 11)}, "definition"),
            samples({1, Rational(7, 2), Rational(7, 6)}, "definition")};
  }
  if (name == "S1_powers") {
    Base b = base_or(k, 2);
    auto r = [&](int n, int m) {
      BigInt k1 = b.value() - 1;
      return Rational((pow_big(b.value(), n) - 1) / k1, (pow_big(b.value(), m) - 1) / k1);
    };
    return {"S1_powers", b, build_s(b, false), "(k^n - 1)/(k^m - 1) for 1 <= m < n",
            {{r(2, 1), "definition"}, {r(3, 1), "definition"}, {r(4, 2), "definition"}, {r(5, 3), "definition"}},
            samples({1, 0}, "definition")};
  }
  if (name == "S3_reciprocal_powers") {
    Base b = base_or(k, 2);
    auto r = [&](int m, int n) {
      BigInt k1 = b.value() - 1;
      return Rational((pow_big(b.value(), m) - 1) / k1, (pow_big(b.value(), n) - 1) / k1);
    };
    return {"S3_reciprocal_powers", b, build_s(b, true), "(k^m - 1)/(k^n - 1) for 1 <= m < n",
            {{r(1, 2), "definition"}, {r(1, 3), "definition"}, {r(2, 4), "definition"}, {r(3, 5), "definition"}},
            samples({1, 0, 2}, "definition")};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown gallery entry: " + std::string(name));
}

L2Representation repr_in_l2(Base base, const Rational& x) {
  const int k = base.value();
  const BigInt& p = x.num();
  const BigInt& q = x.den();
  L2Representation r;
  BigInt ki = 1;
  while (gcd(ki, q) != gcd(ki * k, q)) {
    ki *= k;
    ++r.i;
  }
  BigInt d = gcd(ki, q);
  BigInt q1 = q / d;
  BigInt mod = (k - 1) * q1;
  BigInt kj = k;
  r.j = 1;
  while (kj % mod != 1 % mod) {
    kj *= k;
    ++r.j;
  }
  BigInt t = (kj - 1) / mod;
  r.numerator = (ki / d) * t * p;
  r.denominator = ki * ((kj - 1) / (k - 1));

  Word num = canonical(r.numerator, base), den = canonical(r.denominator, base);
  std::size_t len = std::max(num.size(), den.size());
  auto padded = [&](const Word& w) {
    std::vector<Digit> digits(len - w.size(), 0);
    digits.insert(digits.end(), w.digits().begin(), w.digits().end());
    return Word(base, Order::Msb, digits);
  };
  r.word = pair(padded(num), padded(den));
  return r;
}

std::vector<std::pair<std::size_t, BigInt>> density_table(const Automaton& a, int which, std::size_t n_max) {
  Automaton dfa = minimize(project_language(a, which));
  std::vector<std::pair<std::size_t, BigInt>> out;
  for (std::size_t n = 0; n <= n_max; ++n) out.emplace_back(n, count_words(dfa, n));
  return out;
}

}  // namespace ratset
