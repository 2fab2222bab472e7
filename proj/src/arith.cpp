#include "ratset/arith.hpp"

#include <deque>
#include <map>
#include <tuple>

#include "ratset/compare.hpp"

namespace ratset {

CarryState LinearMap::carry_bounds() const {
  // With carry c in [-neg, pos], t = x*a + y*b + c stays in [-neg*k, pos*k],
  // so floor(t/k) stays in [-neg, pos].
  auto range = [](std::int64_t x, std::int64_t y, std::int64_t& lo, std::int64_t& hi) {
    hi = std::max<std::int64_t>(x, 0) + std::max<std::int64_t>(y, 0);
    lo = -(std::max<std::int64_t>(-x, 0) + std::max<std::int64_t>(-y, 0));
  };
  CarryState c;
  range(coef[0], coef[1], c.num_lo, c.num_hi);
  range(coef[2], coef[3], c.den_lo, c.den_hi);
  return c;
}

namespace {

std::int64_t floor_div(std::int64_t t, std::int64_t k) {
  std::int64_t q = t / k;
  if ((t % k != 0) && ((t < 0) != (k < 0))) --q;
  return q;
}

void require_pairs(const Automaton& a) {
  if (a.alphabet().arity() != 2) throw Error(ErrorCode::InvalidArgument, "arithmetic needs a pair automaton");
}

std::int64_t small(const BigInt& v) {
  if (v > 1'000'000) throw Error(ErrorCode::ResourceCap, "constant " + v.str() + " too large for carry tracking");
  return static_cast<std::int64_t>(v);
}

bool some_value(const Automaton& a, const Rational& alpha, Relation rel) {
  Automaton msb = to_order(a, Order::Msb);
  return !is_empty(product(msb, compare_automaton(msb.alphabet().base(), alpha, rel), BoolOp::And));
}

Automaton zero_representations(Base base, Order order) {
  return to_order(compare_automaton(base, Rational(0), Relation::Eq), order);
}

}  // namespace

Automaton linear_image(const Automaton& a, const LinearMap& map) {
  require_pairs(a);
  const Base base = a.alphabet().base();
  const int k = base.value();
  const Alphabet& alphabet = a.alphabet();
  const CarryState bounds = map.carry_bounds();

  Automaton lsb = to_order(a, Order::Lsb);
  Automaton defined = product(lsb, defined_language(base, Order::Lsb), BoolOp::And);
  // Extra high-order [0,0] inputs give the carries room to flush.
  Automaton src = determinize(pad_closure(defined, Side::Trailing));

  Automaton out(alphabet, Order::Lsb);
  using Key = std::tuple<StateId, std::int64_t, std::int64_t>;
  std::map<Key, StateId> ids;
  std::deque<Key> work;
  auto intern = [&](Key key) {
    auto [it, fresh] = ids.emplace(key, 0);
    if (fresh) {
      auto [s, cn, cd] = key;
      it->second = out.add_state(src.is_accepting(s) && cn == 0 && cd == 0);
      work.push_back(key);
    }
    return it->second;
  };
  out.add_initial(intern({src.initial().front(), 0, 0}));
  while (!work.empty()) {
    Key key = work.front();
    work.pop_front();
    auto [s, cn, cd] = key;
    StateId from = ids.at(key);
    for (Symbol x = 0; x < alphabet.size(); ++x) {
      const auto& succ = src.successors(s, x);
      if (succ.empty()) continue;
      PairDigit in = alphabet.decode(x);
      std::int64_t tn = map.coef[0] * in.a + map.coef[1] * in.b + cn;
      std::int64_t td = map.coef[2] * in.a + map.coef[3] * in.b + cd;
      std::int64_t dn = tn - k * floor_div(tn, k);
      std::int64_t dd = td - k * floor_div(td, k);
      std::int64_t ncn = floor_div(tn, k);
      std::int64_t ncd = floor_div(td, k);
      if (ncn < bounds.num_lo || ncn > bounds.num_hi || ncd < bounds.den_lo || ncd > bounds.den_hi)
        throw std::logic_error("carry left its precomputed range");
      Symbol y = alphabet.encode({static_cast<Digit>(dn), static_cast<Digit>(dd)});
      out.add_transition(from, y, intern({succ.front(), ncn, ncd}));
    }
  }
  return minimize(to_order(minimize(out), a.order()));
}

Automaton shift_add(const Automaton& a, const Rational& alpha) {
  const std::int64_t p = small(alpha.num()), q = small(alpha.den());
  return linear_image(a, LinearMap{{q, p, 0, q}});
}

Automaton shift_sub(const Automaton& a, const Rational& alpha) {
  require_pairs(a);
  const std::int64_t p = small(alpha.num()), q = small(alpha.den());
  Automaton image = linear_image(a, LinearMap{{q, -p, 0, q}});
  if (some_value(a, alpha, Relation::Lt))
    image = minimize(product(image, zero_representations(a.alphabet().base(), a.order()), BoolOp::Or));
  return image;
}

Automaton sub_from(const Rational& alpha, const Automaton& a) {
  require_pairs(a);
  const std::int64_t p = small(alpha.num()), q = small(alpha.den());
  Automaton image = linear_image(a, LinearMap{{-q, p, 0, q}});
  if (some_value(a, alpha, Relation::Gt))
    image = minimize(product(image, zero_representations(a.alphabet().base(), a.order()), BoolOp::Or));
  return image;
}

Automaton scale(const Automaton& a, const Rational& alpha) {
  const std::int64_t p = small(alpha.num()), q = small(alpha.den());
  return linear_image(a, LinearMap{{p, 0, 0, q}});
}

Automaton reciprocal(const Automaton& a) {
  require_pairs(a);
  const Alphabet& alphabet = a.alphabet();
  Automaton defined = product(a, defined_language(alphabet.base(), a.order()), BoolOp::And);
  Automaton swapped(alphabet, a.order());
  for (StateId s = 0; s < defined.num_states(); ++s) swapped.add_state(defined.is_accepting(s));
  for (StateId s : defined.initial()) swapped.add_initial(s);
  for (StateId s = 0; s < defined.num_states(); ++s)
    for (Symbol x = 0; x < alphabet.size(); ++x) {
      PairDigit d = alphabet.decode(x);
      for (StateId t : defined.successors(s, x)) swapped.add_transition(s, alphabet.encode({d.b, d.a}), t);
    }
  // The old numerator is the new denominator; drop x = 0.
  return minimize(product(swapped, defined_language(alphabet.base(), a.order()), BoolOp::And));
}

Automaton set_union(const Automaton& a, const Automaton& b) {
  require_pairs(a);
  require_pairs(b);
  return minimize(product(a, to_order(b, a.order()), BoolOp::Or));
}

ArithOp parse_arith_op(std::string_view text) {
  if (text == "add") return ArithOp::Add;
  if (text == "sub") return ArithOp::Sub;
  if (text == "subfrom") return ArithOp::SubFrom;
  if (text == "scale") return ArithOp::Scale;
  if (text == "recip") return ArithOp::Recip;
  if (text == "union") return ArithOp::Union;
  throw Error(ErrorCode::InvalidArgument, "unknown arithmetic operation '" + std::string(text) + "'");
}

}  // namespace ratset
