#include "doctest.h"
#include "ratset/compare.hpp"
#include "ratset/decide.hpp"
#include "ratset/gallery.hpp"
#include "machines.hpp"
#include "support.hpp"

using namespace ratset;
using support::families;
using support::Family;
using support::positive_naturals;
using support::threes;

namespace {

Alphabet digits2(Base(2), 1);

// Random accepted words by random walks on the minimal DFA.
std::vector<std::vector<Symbol>> sample_words(const Automaton& a, std::size_t count) {
  Automaton d = minimize(a);
  std::vector<std::vector<Symbol>> out;
  auto& gen = support::rng();
  for (std::size_t attempt = 0; out.size() < count && attempt < 50 * count; ++attempt) {
    std::vector<Symbol> w;
    StateId s = d.initial().front();
    for (std::size_t step = 0; step < 40; ++step) {
      if (d.is_accepting(s) && gen() % 4 == 0) break;
      std::vector<std::pair<Symbol, StateId>> moves;
      for (Symbol x = 0; x < d.alphabet().size(); ++x)
        for (StateId t : d.successors(s, x)) moves.emplace_back(x, t);
      if (moves.empty()) break;
      auto [x, t] = moves[gen() % moves.size()];
      w.push_back(x);
      s = t;
    }
    if (d.accepts(w)) out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("ultimately periodic sets") {
  UltimatelyPeriodic u;
  u.preperiod = 2;
  u.period = 3;
  u.prefix_members = {1};
  u.residues = {0, 2};
  CHECK_FALSE(u.contains(0));
  CHECK(u.contains(1));
  CHECK(u.contains(2));
  CHECK_FALSE(u.contains(3));
  CHECK(u.contains(4));
  CHECK(u.contains(5));
}

TEST_CASE("k-finite analysis") {
  Base b(2);
  Automaton threes_pow = families(b, {{3, 0, 1}});
  for (std::size_t j = 0; j <= 20; ++j) CHECK(threes_pow.accepts(canonical(BigInt(3) << j, b)));
  auto data = k_finite_analysis(threes_pow);
  REQUIRE(data);
  REQUIRE(data->parts.size() == 1);
  REQUIRE(data->parts.count(3));
  for (std::size_t j = 0; j < 40; ++j) CHECK(data->parts.at(3).contains(j));

  auto powers = k_finite_analysis(families(b, {{1, 0, 1}}));
  REQUIRE(powers);
  REQUIRE(powers->parts.count(1));
  for (std::size_t j = 0; j < 40; ++j) CHECK(powers->parts.at(1).contains(j));

  Automaton odd(digits2, Order::Msb);
  StateId s = odd.add_state(), t = odd.add_state(), acc = odd.add_state(true);
  odd.add_initial(s);
  odd.add_transition(s, 1, acc);
  odd.add_transition(t, 0, t);
  odd.add_transition(t, 1, acc);
  odd.add_transition(acc, 0, t);
  odd.add_transition(acc, 1, acc);
  CHECK_FALSE(k_finite_analysis(odd));

  Automaton mixed = families(b, {{5, 0, 2}, {3, 0, 0}, {7, 1, 3}});
  auto m = k_finite_analysis(mixed);
  REQUIRE(m);
  CHECK(m->parts.size() == 3);
  for (std::size_t j = 0; j < 30; ++j) {
    CHECK(m->parts.at(5).contains(j) == (j % 2 == 0));
    CHECK(m->parts.at(3).contains(j) == (j == 0));
    CHECK(m->parts.at(7).contains(j) == (j >= 1 && (j - 1) % 3 == 0));
  }
  CHECK(language_equal(rebuild_k_finite(b, *m), mixed));

  CHECK_THROWS_AS(k_finite_analysis(from_words(digits2, Order::Msb, {std::vector<Symbol>{}})), Error);
  CHECK_THROWS_AS(k_finite_analysis(build_gallery("L0").automaton), Error);
}

TEST_CASE("k-finite round trip on random families") {
  auto& gen = support::rng();
  for (int trial = 0; trial < 10; ++trial) {
    int k = 2 + trial % 2;
    Base b(k);
    std::vector<Family> fs;
    std::set<BigInt> used;
    for (int i = 0; i < 1 + trial % 3; ++i) {
      BigInt f = 1 + gen() % 60;
      if (f % k == 0 || used.count(f)) continue;
      used.insert(f);
      fs.push_back({f, gen() % 3, gen() % 4});
    }
    if (fs.empty()) continue;
    Automaton n = families(b, fs);
    auto data = k_finite_analysis(n);
    REQUIRE(data);
    CHECK(language_equal(rebuild_k_finite(b, *data), n));
  }
}

TEST_CASE("divisibility and fixed denominators") {
  Base b(2);
  Alphabet ab(b, 2);
  CHECK(divisibility_automaton(b, 3).accepts(support::pw(ab, "[1,0][1,0][0,1]")));
  CHECK_FALSE(divisibility_automaton(b, 3).accepts(support::pw(ab, "[1,0][1,0][1,1]")));
  Automaton any = divisibility_automaton(b, 1);
  support::for_each_word(ab, 3, [&](const std::vector<Symbol>& w) { CHECK(any.accepts(w)); });
  CHECK_THROWS_AS(divisibility_automaton(b, 0), Error);

  for (int k : {2, 3}) {
    Alphabet pab(Base(k), 2);
    for (int d = 1; d <= 7; ++d) {
      Automaton div = divisibility_automaton(Base(k), d), den = denominator_equals(Base(k), d);
      support::for_each_word(pab, k == 2 ? 5 : 3, [&](const std::vector<Symbol>& w) {
        auto v = support::components(pab, Order::Msb, w);
        CHECK(div.accepts(w) == (v.num % d == 0));
        CHECK(den.accepts(w) == (v.den == d));
      });
    }
  }
}

TEST_CASE("integrality decisions") {
  Base b(2);
  IntegralityVerdict l0 = is_subset_of_naturals(build_gallery("L0").automaton);
  REQUIRE(l0.yes);
  CHECK(l0.failed_step == 0);
  CHECK(language_equal(*l0.naturals, naturals_automaton(b)));

  for (const char* name : {"L5_unit_fractions", "L1", "S1_powers", "L2", "L3", "L4_cantor", "L7_fermat"}) {
    INFO(name);
    IntegralityVerdict v = is_subset_of_naturals(build_gallery(name).automaton);
    CHECK_FALSE(v.yes);
    REQUIRE(v.witness);
    CHECK_FALSE(quo(*v.witness).is_integer());
  }
  IntegralityVerdict s1 = is_subset_of_naturals(build_gallery("S1_powers").automaton);
  CHECK(quo(*s1.witness) == Rational(7, 3));
  CHECK(is_subset_of_naturals(build_gallery("L5_unit_fractions").automaton).witness->to_string() == "[0,1][1,0]");

  IntegralityVerdict t = is_subset_of_naturals(threes());
  REQUIRE(t.yes);
  CHECK(language_equal(*t.naturals, positive_naturals(b)));

  IntegralityVerdict empty = is_subset_of_naturals(Automaton(Alphabet(b, 2), Order::Msb));
  REQUIRE(empty.yes);
  CHECK(is_empty(*empty.naturals));
}

TEST_CASE("integrality rejections of large-valued sets") {
  Base b(2);
  // all values at least 8, non-integers everywhere
  Automaton halves = product(denominator_equals(b, 2), compare_automaton(b, Rational(8), Relation::Ge), BoolOp::And);
  IntegralityVerdict v2 = is_subset_of_naturals(halves);
  CHECK_FALSE(v2.yes);
  CHECK(v2.failed_step >= 1);
  REQUIRE(v2.witness);
  CHECK_FALSE(quo(*v2.witness).is_integer());


  Automaton thirds = product(denominator_equals(b, 3), compare_automaton(b, Rational(8), Relation::Ge), BoolOp::And);
  IntegralityVerdict v4 = is_subset_of_naturals(thirds);
  CHECK_FALSE(v4.yes);
  CHECK(v4.failed_step >= 1);
  REQUIRE(v4.witness);
  CHECK_FALSE(quo(*v4.witness).is_integer());

  // odd denominators
  Automaton odd_den(Alphabet(b, 2), Order::Msb);
  StateId s = odd_den.add_state(), e = odd_den.add_state(true);
  odd_den.add_initial(s);
  for (Symbol x = 0; x < 4; ++x) {
    PairDigit d = odd_den.alphabet().decode(x);
    odd_den.add_transition(s, x, s);
    if (d.b == 1) odd_den.add_transition(s, x, e);
  }
  Automaton big = product(odd_den, compare_automaton(b, Rational(8), Relation::Ge), BoolOp::And);
  IntegralityVerdict v3 = is_subset_of_naturals(big);
  CHECK_FALSE(v3.yes);
  CHECK(v3.failed_step >= 1);
  REQUIRE(v3.witness);
  CHECK_FALSE(quo(*v3.witness).is_integer());
}

TEST_CASE("decomposition") {
  Base b(2);
  Decomposition l0 = decompose_integer_valued(build_gallery("L0").automaton);
  REQUIRE(l0.denominator_parts.size() == 1);
  CHECK(l0.denominator_parts[0].denominator == 1);
  CHECK(language_equal(assemble_naturals(b, l0), naturals_automaton(b)));
  for (const auto& part : l0.constant_parts)
    CHECK(language_equal(part.denominators, from_words(Alphabet(b, 1), Order::Msb, {std::vector<Symbol>{1}})));

  Decomposition two = decompose_integer_valued(support::words(2, {"[1,1]", "[1,0][0,1]"}));
  CHECK(two.denominator_parts.empty());
  REQUIRE(two.constant_parts.size() == 2);
  std::set<BigInt> qs;
  for (const auto& p : two.constant_parts) qs.insert(p.quotient);
  CHECK(qs == std::set<BigInt>{1, 2});

  Decomposition none = decompose_integer_valued(Automaton(Alphabet(b, 2), Order::Msb));
  CHECK(none.constant_parts.empty());
  CHECK(none.denominator_parts.empty());

  CHECK_THROWS_AS(decompose_integer_valued(build_gallery("L5_unit_fractions").automaton), Error);

  Decomposition t = decompose_integer_valued(threes());
  for (const auto& p : t.denominator_parts) CHECK(p.denominator == 3);
  // every value represented in the source is covered by its part
  Automaton covered = assemble_naturals(b, t);
  for (const auto& [x, n] : support::brute(threes(), 8).count) CHECK(covered.accepts(canonical(x.num(), b)));
}

TEST_CASE("yes verdicts only cover integers") {
  for (Automaton a : {build_gallery("L0").automaton, threes(), build_gallery("L0", 3).automaton}) {
    IntegralityVerdict v = is_subset_of_naturals(a);
    REQUIRE(v.yes);
    auto ws = sample_words(a, 1000);
    CHECK(ws.size() > 100);
    for (const auto& w : ws) {
      auto c = support::components(a.alphabet(), a.order(), w);
      if (c.den == 0) continue;
      CHECK(c.num % c.den == 0);
      CHECK(v.naturals->accepts(canonical(c.num / c.den, a.alphabet().base())));
    }
  }
}

TEST_CASE("comparing with sets of naturals") {
  Base b(2);
  Automaton n = naturals_automaton(b);
  CHECK(quo_equals(build_gallery("L0").automaton, n));
  CHECK(quo_subset_of(support::words(2, {"[1,1]"}), n));
  CHECK_FALSE(quo_equals(support::words(2, {"[1,1]"}), n));
  CHECK_FALSE(quo_subset_of(build_gallery("L5_unit_fractions").automaton, n));
  CHECK(quo_equals(threes(), positive_naturals(b)));
  // padded forms of N are accepted as the same set
  CHECK(quo_equals(build_gallery("L0").automaton, pad_closure(n, Side::Leading)));

  Automaton evens = families(b, {{1, 1, 1}});
  std::vector<Automaton> sets{n, positive_naturals(b), evens};
  for (const auto& name : gallery_names()) {
    GalleryEntry e = build_gallery(name);
    if (e.base != b) continue;
    for (const auto& s : sets)
      if (quo_equals(e.automaton, s)) CHECK(quo_subset_of(e.automaton, s));
  }
  CHECK_THROWS_AS(quo_subset_of(build_gallery("L0").automaton, naturals_automaton(Base(3))), Error);
}

TEST_CASE("naturals automaton") {
  Automaton n = naturals_automaton(Base(3));
  CHECK(n.accepts(Word(Base(3), Order::Msb)));
  CHECK(n.accepts(Word::from_string(Base(3), "21")));
  CHECK_FALSE(n.accepts(Word::from_string(Base(3), "021")));
}
