#ifndef RATSET_TESTS_MACHINES_HPP
#define RATSET_TESTS_MACHINES_HPP

// Hand-built machines with finite quotient sets; expected sets worked out by
// hand from the expressions.

#include <set>
#include <string>
#include <vector>

#include "ratset/compare.hpp"
#include "ratset/decide.hpp"
#include "support.hpp"

namespace support {

struct FiniteMachine {
  std::string name;
  ratset::Automaton automaton;
  std::set<ratset::Rational> values;
};

// Automaton for stem (loop)* over one state chain: words = stem loop^i.
inline ratset::Automaton stem_loop(int k, const std::vector<std::string>& stems, const std::string& loop) {
  Alphabet ab(Base(k), 2);
  Automaton a(ab, Order::Msb);
  StateId start = a.add_state();
  StateId end = a.add_state(true);
  a.add_initial(start);
  for (const auto& stem : stems) {
    auto w = pw(ab, stem);
    StateId s = start;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      StateId next = a.add_state();
      a.add_transition(s, w[i], next);
      s = next;
    }
    a.add_transition(s, w.back(), end);
  }
  if (!loop.empty()) {
    auto w = pw(ab, loop);
    StateId s = end;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      StateId next = a.add_state();
      a.add_transition(s, w[i], next);
      s = next;
    }
    a.add_transition(s, w.back(), end);
  }
  return a;
}

inline std::vector<FiniteMachine> finite_machines() {
  using ratset::BoolOp;
  using ratset::Relation;
  using ratset::compare_automaton;
  std::vector<FiniteMachine> out;
  out.push_back({"single [1,1]", words(2, {"[1,1]"}), {1}});
  out.push_back({"two words", words(2, {"[1,1]", "[1,0][0,1]"}), {1, 2}});
  {
    Automaton a(Alphabet(Base(2), 2), Order::Msb);
    StateId s = a.add_state(), t = a.add_state(true);
    a.add_initial(s);
    a.add_transition(s, 0, s);
    a.add_transition(s, a.alphabet().encode({1, 1}), t);
    out.push_back({"leading padding", a, {1}});
  }
  out.push_back({"trailing padding", stem_loop(2, {"[1,1]"}, "[0,0]"), {1}});
  out.push_back({"repeated [1,1]", stem_loop(2, {"[1,1]"}, "[1,1]"), {1}});
  out.push_back({"two stems, shared loop", stem_loop(3, {"[1,1]", "[2,1]"}, "[0,0]"), {1, 2}});
  out.push_back({"zero numerator", stem_loop(2, {"[0,1]"}, "[0,0]"), {0}});
  out.push_back({"equal to 2/3", compare_automaton(Base(2), Rational(2, 3), Relation::Eq), {Rational(2, 3)}});
  out.push_back({"equal to 1 or 3",
                 ratset::product(compare_automaton(Base(2), 1, Relation::Eq),
                                 compare_automaton(Base(2), 3, Relation::Eq), BoolOp::Or),
                 {1, 3}});
  out.push_back({"base 3 constant 2", stem_loop(3, {"[2,1]"}, "[0,0]"), {2}});
  {
    Automaton a = stem_loop(2, {"[1,1]"}, "[1,1]");
    a.add_transition(1, 0, 1);
    out.push_back({"equal digits", a, {1}});
  }
  out.push_back({"empty", Automaton(Alphabet(Base(2), 2), Order::Msb), {}});
  out.push_back({"pumped 3/9 forms", stem_loop(3, {"[0,1][1,0]"}, "[0,0]"), {Rational(1, 3)}});
  return out;
}

// Canonical representations of { f * k^j : j in js } for the given cores,
// written directly as an NFA: canonical(f) 0^a (0^p)*.
struct Family {
  ratset::BigInt f;
  std::size_t offset, period;  // period 0: only j = offset
};

inline Automaton families(Base base, const std::vector<Family>& fs) {
  using namespace ratset;
  Alphabet ab(base, 1);
  Automaton a(ab, Order::Msb);
  StateId start = a.add_state();
  a.add_initial(start);
  for (const auto& fam : fs) {
    auto w = to_symbols(ab, canonical(fam.f, base));
    w.insert(w.end(), fam.offset, 0);
    StateId s = start;
    for (Symbol x : w) {
      StateId next = a.add_state();
      a.add_transition(s, x, next);
      s = next;
    }
    a.set_accepting(s);
    if (fam.period > 0) {
      StateId loop = s;
      for (std::size_t i = 0; i + 1 < fam.period; ++i) {
        StateId next = a.add_state();
        a.add_transition(s, 0, next);
        s = next;
      }
      a.add_transition(s, 0, loop);
    }
  }
  return a;
}

inline Automaton positive_naturals(Base b) {
  using namespace ratset;
  return product(naturals_automaton(b), from_words(Alphabet(b, 1), Order::Msb, {std::vector<Symbol>{}}), BoolOp::Diff);
}

// Multiples of three with denominator exactly 3, canonical pairs.
inline Automaton threes() {
  using namespace ratset;
  Base b(2);
  Automaton a = product(divisibility_automaton(b, 3), denominator_equals(b, 3), BoolOp::And);
  a = product(a, compare_automaton(b, Rational(1), Relation::Ge), BoolOp::And);
  return strip_padding(a, Side::Leading);
}

}  // namespace support

#endif  // RATSET_TESTS_MACHINES_HPP
