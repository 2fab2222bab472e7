#include "ratset/compare.hpp"

#include <deque>
#include <map>

namespace ratset {

const char* to_string(Relation r) {
  switch (r) {
    case Relation::Lt: return "lt";
    case Relation::Le: return "le";
    case Relation::Eq: return "eq";
    case Relation::Ge: return "ge";
    case Relation::Gt: return "gt";
    case Relation::Ne: return "ne";
  }
  return "?";
}

Relation parse_relation(std::string_view text) {
  if (text == "lt" || text == "<") return Relation::Lt;
  if (text == "le" || text == "<=") return Relation::Le;
  if (text == "eq" || text == "=") return Relation::Eq;
  if (text == "ge" || text == ">=") return Relation::Ge;
  if (text == "gt" || text == ">") return Relation::Gt;
  if (text == "ne" || text == "!=") return Relation::Ne;
  throw Error(ErrorCode::InvalidArgument, "unknown relation '" + std::string(text) + "'");
}

bool holds_sign(Relation r, int sign) {
  switch (r) {
    case Relation::Lt: return sign < 0;
    case Relation::Le: return sign <= 0;
    case Relation::Eq: return sign == 0;
    case Relation::Ge: return sign >= 0;
    case Relation::Gt: return sign > 0;
    case Relation::Ne: return sign != 0;
  }
  return false;
}

bool holds(Relation r, const Rational& x, const Rational& beta) {
  auto c = x <=> beta;
  return holds_sign(r, c < 0 ? -1 : (c > 0 ? 1 : 0));
}

namespace {

constexpr std::int64_t kMaxBand = 50'000'000;

}  // namespace

// States track D = [pi_1(prefix)]*q - [pi_2(prefix)]*p inside the band
// (-q, max(p,1)). Leaving the band is decisive: with m digits left, the
// suffix contributes a value in [-p(k^m-1), q(k^m-1)], so D >= max(p,1)
// keeps the final D positive and D <= -q keeps it negative.
Automaton compare_automaton(Base base, const BigInt& p, const BigInt& q, Relation rel) {
  if (q <= 0 || p < 0) throw Error(ErrorCode::InvalidArgument, "comparison constant must be p/q with p >= 0, q >= 1");
  if (p > kMaxBand || q > kMaxBand)
    throw Error(ErrorCode::ResourceCap, "comparison constant " + p.str() + "/" + q.str() + " too large");
  const auto pp = static_cast<std::int64_t>(p);
  const auto qq = static_cast<std::int64_t>(q);
  const std::int64_t hi = std::max<std::int64_t>(pp, 1);
  const std::int64_t lo = -qq;
  constexpr std::int64_t kGreater = INT64_MAX;
  constexpr std::int64_t kLess = INT64_MIN;
  const int k = base.value();

  Alphabet alphabet(base, 2);
  Automaton out(alphabet, Order::Msb);
  using Key = std::pair<std::int64_t, bool>;
  std::map<Key, StateId> ids;
  std::deque<Key> work;
  auto sign_of = [](std::int64_t d) { return d == kGreater ? 1 : d == kLess ? -1 : (d > 0) - (d < 0); };
  auto intern = [&](Key key) {
    auto [it, fresh] = ids.emplace(key, 0);
    if (fresh) {
      it->second = out.add_state(key.second && holds_sign(rel, sign_of(key.first)));
      work.push_back(key);
    }
    return it->second;
  };
  out.add_initial(intern({0, false}));
  while (!work.empty()) {
    Key key = work.front();
    work.pop_front();
    StateId from = ids.at(key);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        std::int64_t d = key.first;
        if (d != kGreater && d != kLess) {
          d = k * d + a * qq - b * pp;
          if (d >= hi)
            d = kGreater;
          else if (d <= lo)
            d = kLess;
        }
        Symbol x = alphabet.encode({static_cast<Digit>(a), static_cast<Digit>(b)});
        out.add_transition(from, x, intern({d, key.second || b != 0}));
      }
  }
  return minimize(out);
}

Automaton compare_automaton(Base base, const Rational& beta, Relation rel) {
  return compare_automaton(base, beta.num(), beta.den(), rel);
}

Automaton defined_language(Base base, Order order) {
  Alphabet alphabet(base, 2);
  Automaton out(alphabet, order);
  StateId zero = out.add_state(false);
  StateId seen = out.add_state(true);
  out.add_initial(zero);
  for (Symbol x = 0; x < alphabet.size(); ++x) {
    out.add_transition(zero, x, alphabet.decode(x).b != 0 ? seen : zero);
    out.add_transition(seen, x, seen);
  }
  return out;
}

}  // namespace ratset
