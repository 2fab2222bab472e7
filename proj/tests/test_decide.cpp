#include "doctest.h"
#include "machines.hpp"
#include "ratset/decide.hpp"
#include "ratset/gallery.hpp"
#include "support.hpp"

using namespace ratset;
using support::words;

namespace {

Automaton gallery(const char* name) { return build_gallery(name).automaton; }

// Gallery entries whose candidate sets fit the default caps.
const char* const kSmall[] = {"L0", "L1", "L2", "L3", "L4_cantor", "L5_unit_fractions",
                              "L7_fermat", "L8_mersenne", "S1_powers", "S3_reciprocal_powers"};

std::size_t oracle_len(const Automaton& a) { return a.alphabet().k() == 2 ? 8 : 5; }

bool candidate_route_infinite(const Automaton& a) { return !subset_finite(a, candidate_set(a)); }

}  // namespace

TEST_CASE("existence of related quotients") {
  Automaton l5 = gallery("L5_unit_fractions");
  Witnessed le = exists_rel(l5, 1, Relation::Le);
  REQUIRE(le.holds);
  REQUIRE(le.witness);
  CHECK(quo(*le.witness) == Rational(1));
  CHECK_FALSE(exists_rel(l5, 1, Relation::Gt).holds);
  CHECK_FALSE(exists_rel(Automaton(Alphabet(Base(2), 2), Order::Msb), 0, Relation::Ge).holds);
}

TEST_CASE("witnesses are the least shortest words") {
  for (const char* name : kSmall) {
    Automaton a = to_order(gallery(name), Order::Msb);
    for (Rational alpha : {Rational(0), Rational(1, 2), Rational(1), Rational(3)}) {
      for (Relation rel : {Relation::Lt, Relation::Eq, Relation::Gt}) {
        Witnessed w = exists_rel(a, alpha, rel);
        std::optional<std::vector<Symbol>> first;
        support::for_each_word(a.alphabet(), 5, [&](const std::vector<Symbol>& x) {
          if (first || !a.accepts(x)) return;
          auto v = support::components(a.alphabet(), Order::Msb, x);
          if (v.den == 0) return;
          if (holds(rel, support::value(v), alpha)) first = x;
        });
        if (first) {
          REQUIRE(w.holds);
          CHECK(to_symbols(a.alphabet(), *w.witness) == *first);
        } else if (w.holds) {
          CHECK(w.witness->size() > 5);
        }
      }
    }
  }
}

TEST_CASE("finite subsets") {
  Automaton l0 = gallery("L0");
  CHECK(finite_subset(l0, {1, 2}));
  CHECK_FALSE(subset_finite(l0, {1, 2}));
  Automaton one = words(2, {"[1,1]"});
  CHECK(finite_subset(one, {1}));
  CHECK(subset_finite(one, {1}));
  CHECK_FALSE(finite_subset(one, {1, 2}));
  CHECK(subset_finite(words(2, {"[1,0]"}), {}));  // undefined quotients are ignored
}

TEST_CASE("candidate sets") {
  CHECK(candidate_set(gallery("L5_unit_fractions")).count(0));
  CHECK(candidate_set(words(2, {"[1,1]"})) == std::set<Rational>{1});
  CHECK(candidate_route_infinite(gallery("L0")));
  CHECK(candidate_set(Automaton(Alphabet(Base(2), 2), Order::Msb)).empty());
}

TEST_CASE("infinitude") {
  for (const char* name : {"L0", "L1", "L2", "L3", "L5_unit_fractions", "S1_powers", "L6_lvdp"})
    CHECK(is_quoset_infinite(gallery(name)).infinite);
  Finiteness f = is_quoset_infinite(words(2, {"[1,1]", "[1,0][0,1]"}));
  CHECK_FALSE(f.infinite);
  CHECK(f.values == std::set<Rational>{1, 2});

  for (const auto& m : support::finite_machines()) {
    INFO(m.name);
    Finiteness r = is_quoset_infinite(m.automaton);
    CHECK_FALSE(r.infinite);
    CHECK(r.values == m.values);
    CHECK_FALSE(candidate_route_infinite(m.automaton));
    // values found by enumeration are all reported
    for (const auto& [x, n] : support::brute(m.automaton, 6).count) CHECK(r.values.count(x));
  }
}

TEST_CASE("structural infinitude test matches the candidate-set route") {
  for (const char* name : kSmall) CHECK(is_quoset_infinite(gallery(name)).infinite == candidate_route_infinite(gallery(name)));

  Alphabet ab(Base(2), 2);
  auto& gen = support::rng();
  int finite = 0;
  for (int trial = 0; trial < 150; ++trial) {
    Automaton a(ab, Order::Msb);
    const int n = 2 + trial % 3;
    for (int s = 0; s < n; ++s) a.add_state(gen() % 3 == 0);
    a.add_initial(0);
    for (StateId s = 0; s < static_cast<StateId>(n); ++s)
      for (Symbol x = 0; x < ab.size(); ++x)
        if (gen() % 4 == 0) a.add_transition(s, x, gen() % n);
    Finiteness f = is_quoset_infinite(a);
    CHECK(f.infinite == candidate_route_infinite(a));
    if (!f.infinite) {
      ++finite;
      std::set<Rational> members;
      for (const Rational& t : candidate_set(a))
        if (exists_rel(a, t, Relation::Eq).holds) members.insert(t);
      CHECK(f.values == members);
    }
  }
  CHECK(finite > 0);
}

TEST_CASE("supremum and infimum") {
  Automaton l5 = gallery("L5_unit_fractions");
  CHECK(sup_quoset(l5) == Rational(1));
  CHECK(inf_quoset(l5) == Rational(0));
  Automaton one = words(2, {"[1,1]"});
  CHECK(sup_quoset(one) == Rational(1));
  CHECK(inf_quoset(one) == Rational(1));
  CHECK_FALSE(sup_quoset(gallery("L0")).has_value());
  CHECK(inf_quoset(gallery("L0")) == Rational(0));
  CHECK(sup_quoset(gallery("S3_reciprocal_powers")) == Rational(1, 2));
  CHECK(inf_quoset(gallery("S1_powers")) == Rational(2));
  CHECK_THROWS_AS(sup_quoset(Automaton(Alphabet(Base(2), 2), Order::Msb)), Error);

  for (const char* name : kSmall) {
    Automaton a = gallery(name);
    auto b = support::brute(a, oracle_len(a));
    REQUIRE_FALSE(b.count.empty());
    Rational lo = b.count.begin()->first, hi = b.count.rbegin()->first;
    auto s = sup_quoset(a);
    if (s) CHECK(hi <= *s);
    CHECK(inf_quoset(a) <= lo);
  }
}

TEST_CASE("accumulation points") {
  Automaton l5 = gallery("L5_unit_fractions");
  CHECK(is_accumulation_point(l5, 0));
  CHECK_FALSE(is_accumulation_point(l5, Rational(1, 2)));
  CHECK_FALSE(is_accumulation_point(l5, 1));
  CHECK_FALSE(is_accumulation_point(words(2, {"[1,1]"}), 1));
  CHECK(is_accumulation_point(gallery("S3_reciprocal_powers"), Rational(1, 2)));
  CHECK_FALSE(is_accumulation_point(gallery("L0"), 3));
}

TEST_CASE("small representations") {
  Automaton l1 = gallery("L1");
  auto w = find_small_representation(l1, Rational(1, 3));
  REQUIRE(w);
  CHECK(w->to_string() == "[0,1][1,1]");
  CHECK_FALSE(find_small_representation(words(2, {"[1,1]"}), 2));
  auto five = find_small_representation(gallery("L0"), 5);
  REQUIRE(five);
  CHECK(five->size() == 3);
  CHECK(project(*five, 1).to_string() == "101");
  CHECK(project(*five, 2).to_string() == "001");

  CHECK(small_representation_bound(Rational(2, 3), 4) == 24);
  CHECK(small_representation_bound(0, 4) == 7);

  for (const char* name : kSmall) {
    Automaton a = gallery(name);
    const std::size_t n = minimize(to_order(a, Order::Msb)).num_states();
    auto b = support::brute(a, oracle_len(a));
    std::size_t i = 0, stride = 1 + b.shortest.size() / 100;
    for (const auto& [x, len] : b.shortest) {
      if (i++ % stride) continue;
      auto r = find_small_representation(a, x);
      REQUIRE(r);
      CHECK(r->size() == len);
      CHECK(quo(*r) == x);
      CHECK(BigInt(r->size()) <= small_representation_bound(x, n));
    }
  }
}

TEST_CASE("membership facts from enumeration hold") {
  for (const char* name : kSmall) {
    Automaton a = gallery(name);
    Automaton c = canonical_form(a);
    auto b = support::brute(a, oracle_len(a) - 1);
    std::size_t i = 0, stride = 1 + b.count.size() / 150;
    for (const auto& [x, n] : b.count) {
      if (i++ % stride) continue;
      CHECK(exists_rel(a, x, Relation::Eq).holds);
      CHECK(exists_rel(c, x, Relation::Eq).holds);
    }
  }
}

TEST_CASE("canonical form") {
  Automaton c = canonical_form(gallery("L2"));
  CHECK(c.order() == Order::Msb);
  Alphabet ab(Base(2), 2);
  CHECK_FALSE(c.accepts(support::pw(ab, "[0,0][1,1]")));
  CHECK(c.accepts(support::pw(ab, "[1,1]")));
  CHECK_FALSE(c.accepts(support::pw(ab, "[1,0]")));
  CHECK(language_equal(canonical_form(c), c));
}
