#ifndef RATSET_COMPARE_HPP
#define RATSET_COMPARE_HPP

#include <string_view>

#include "ratset/automaton.hpp"

namespace ratset {

enum class Relation { Lt, Le, Eq, Ge, Gt, Ne };

/// "lt", "le", "eq", "ge", "gt", "ne".
const char* to_string(Relation r);
Relation parse_relation(std::string_view text);
bool holds(Relation r, const Rational& x, const Rational& beta);
/// sign is -1, 0 or +1 for x - beta.
bool holds_sign(Relation r, int sign);

/// Deterministic MSB-first automaton over Sigma_k^2 accepting every word x
/// with quo_k(x) defined and quo_k(x) `rel` p/q. p/q need not be reduced.
Automaton compare_automaton(Base base, const BigInt& p, const BigInt& q,
                            Relation rel);
Automaton compare_automaton(Base base, const Rational& beta, Relation rel);

/// Words whose denominator component has a nonzero digit. Order-independent;
/// built with the requested order flag.
Automaton defined_language(Base base, Order order = Order::Msb);

}  // namespace ratset

#endif  // RATSET_COMPARE_HPP
