#ifndef RATSET_ARITH_HPP
#define RATSET_ARITH_HPP

#include <array>
#include <string_view>

#include "ratset/automaton.hpp"

namespace ratset {

/// Inclusive carry ranges of the digit-serial linear map
/// (num, den) -> (c00*num + c01*den, c10*num + c11*den).
struct CarryState {
  std::int64_t num_lo = 0, num_hi = 0;
  std::int64_t den_lo = 0, den_hi = 0;
};

struct LinearMap {
  std::array<std::int64_t, 4> coef{1, 0, 0, 1};
  CarryState carry_bounds() const;
};

/// Image of the representations of L(a) under a linear map, computed
/// LSB-first with bounded carries. The result carries a's order flag.
/// Words whose mapped numerator would be negative are dropped.
Automaton linear_image(const Automaton& a, const LinearMap& map);

/// S + alpha.
Automaton shift_add(const Automaton& a, const Rational& alpha);
/// S -. alpha = { max(x - alpha, 0) }.
Automaton shift_sub(const Automaton& a, const Rational& alpha);
/// alpha -. S = { max(alpha - x, 0) }.
Automaton sub_from(const Rational& alpha, const Automaton& a);
/// alpha * S.
Automaton scale(const Automaton& a, const Rational& alpha);
/// { 1/x : x in S, x != 0 }.
Automaton reciprocal(const Automaton& a);
/// S u T.
Automaton set_union(const Automaton& a, const Automaton& b);

enum class ArithOp { Add, Sub, SubFrom, Scale, Recip, Union };
ArithOp parse_arith_op(std::string_view text);

}  // namespace ratset

#endif  // RATSET_ARITH_HPP
