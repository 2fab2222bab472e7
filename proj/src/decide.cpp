#include "ratset/decide.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace ratset {

namespace {

void require_pairs(const Automaton& a) {
  if (a.alphabet().arity() != 2) throw Error(ErrorCode::InvalidArgument, "quotient procedures need a pair automaton");
}

Automaton defined_msb(const Automaton& a) {
  require_pairs(a);
  return product(to_order(a, Order::Msb), defined_language(a.alphabet().base(), Order::Msb), BoolOp::And);
}

// Value of pi_which over a symbol string read MSB-first.
BigInt eval_symbols(const Alphabet& alphabet, const std::vector<Symbol>& w, int which) {
  BigInt v = 0;
  for (Symbol x : w) {
    PairDigit d = alphabet.decode(x);
    v = v * alphabet.k() + (which == 1 ? d.a : d.b);
  }
  return v;
}


// Span of integer vectors, kept in echelon form.
template <std::size_t N>
class Span {
 public:
  using Vec = std::array<BigInt, N>;

  // Adds v; returns the reduced vector when it enlarged the span.
  std::optional<Vec> insert(Vec v) {
    for (const Vec& b : basis_) {
      std::size_t p = pivot(b);
      if (v[p] == 0) continue;
      BigInt f = v[p], g = b[p];
      for (std::size_t i = 0; i < N; ++i) v[i] = v[i] * g - b[i] * f;
    }
    BigInt d = 0;
    for (const BigInt& x : v) d = gcd(d, x);
    if (d == 0) return std::nullopt;
    for (BigInt& x : v) x /= d;
    basis_.push_back(v);
    std::sort(basis_.begin(), basis_.end(), [](const Vec& a, const Vec& b) { return pivot(a) < pivot(b); });
    return v;
  }
  const std::vector<Vec>& basis() const { return basis_; }

 private:
  static std::size_t pivot(const Vec& v) {
    std::size_t i = 0;
    while (v[i] == 0) ++i;
    return i;
  }
  std::vector<Vec> basis_;
};

// Decides whether some pumped family u v^i z of the canonical DFA takes more
// than one value, i.e. quo(uz) != quo(uvz). With row vectors (P, Q, 1) and
// the affine digit maps M_x, the pair (uz, uvz) is tracked as the tensor
// T = v_1^T v_2: both factors advance on u and z, only the second on v.
// The family is constant iff P_1 Q_2 - Q_1 P_2 vanishes, a linear functional
// of T, so it suffices to propagate spans.
bool has_nonconstant_pump(const Automaton& c, const Limits& limits) {
  using Vec = Span<9>::Vec;
  const Alphabet& ab = c.alphabet();
  const std::size_t n = c.num_states();
  const BigInt k = ab.k();
  // nodes: phase 0 (q), phase 1 (s, q), phase 2 (q)
  const std::size_t phase1 = n, phase2 = n + n * n;
  std::vector<Span<9>> spans(phase2 + n);
  std::vector<std::pair<std::size_t, Vec>> work;

  auto both = [&](const Vec& t, PairDigit d) {
    // M^T T M with M = [[k,0,0],[0,k,0],[a,b,1]]
    Vec row{};
    const BigInt m[3][3] = {{k, 0, 0}, {0, k, 0}, {d.a, d.b, 1}};
    Vec tm{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) tm[i * 3 + j] += t[i * 3 + l] * m[l][j];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) row[i * 3 + j] += m[l][i] * tm[l * 3 + j];
    return row;
  };
  auto second = [&](const Vec& t, PairDigit d) {
    const BigInt m[3][3] = {{k, 0, 0}, {0, k, 0}, {d.a, d.b, 1}};
    Vec tm{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) tm[i * 3 + j] += t[i * 3 + l] * m[l][j];
    return tm;
  };

  Vec start{};
  start[8] = 1;
  work.emplace_back(c.initial().front(), start);
  while (!work.empty()) {
    limits.check_cancel();
    auto [node, v] = std::move(work.back());
    work.pop_back();
    auto added = spans[node].insert(std::move(v));
    if (!added) continue;
    const Vec& t = *added;
    if (node < phase1) {
      StateId q = static_cast<StateId>(node);
      for (Symbol x = 0; x < ab.size(); ++x)
        for (StateId r : c.successors(q, x)) {
          work.emplace_back(r, both(t, ab.decode(x)));
          work.emplace_back(phase1 + q * n + r, second(t, ab.decode(x)));
        }
    } else if (node < phase2) {
      std::size_t s = (node - phase1) / n;
      StateId q = static_cast<StateId>((node - phase1) % n);
      if (q == s) work.emplace_back(phase2 + s, t);
      for (Symbol x = 0; x < ab.size(); ++x)
        for (StateId r : c.successors(q, x)) work.emplace_back(phase1 + s * n + r, second(t, ab.decode(x)));
    } else {
      StateId q = static_cast<StateId>(node - phase2);
      if (c.is_accepting(q) && t[1] != t[3]) return true;
      for (Symbol x = 0; x < ab.size(); ++x)
        for (StateId r : c.successors(q, x)) work.emplace_back(phase2 + r, both(t, ab.decode(x)));
    }
  }
  return false;
}

}  // namespace

Automaton canonical_form(const Automaton& a) {
  require_pairs(a);
  Automaton stripped = strip_padding(to_order(a, Order::Msb), Side::Leading);
  return minimize(product(stripped, defined_language(a.alphabet().base(), Order::Msb), BoolOp::And));
}

Witnessed exists_rel(const Automaton& a, const Rational& alpha, Relation rel) {
  require_pairs(a);
  Automaton msb = to_order(a, Order::Msb);
  Automaton both = product(msb, compare_automaton(msb.alphabet().base(), alpha, rel), BoolOp::And);
  auto word = shortest_accepted(both);
  if (!word) return {};
  return {true, to_pair_word(msb.alphabet(), Order::Msb, *word)};
}

bool finite_subset(const Automaton& a, const std::set<Rational>& f) {
  return std::all_of(f.begin(), f.end(), [&](const Rational& x) { return exists_rel(a, x, Relation::Eq).holds; });
}

bool subset_finite(const Automaton& a, const std::set<Rational>& f) {
  Automaton rest = minimize(defined_msb(a));
  const Base base = a.alphabet().base();
  while (auto w = shortest_accepted(rest)) {
    Rational x(eval_symbols(rest.alphabet(), *w, 1), eval_symbols(rest.alphabet(), *w, 2));
    if (!f.count(x)) return false;
    rest = minimize(product(rest, compare_automaton(base, x, Relation::Eq), BoolOp::Diff));
  }
  return true;
}

std::set<Rational> candidate_set(const Automaton& a, const Limits& limits) {
  Automaton c = canonical_form(a);
  std::set<Rational> out;
  if (is_empty(c)) return out;
  const std::size_t n = c.num_states();
  const Alphabet& alphabet = c.alphabet();

  enumerate_words(
      c, n - 1,
      [&](const std::vector<Symbol>& w) {
        out.insert(Rational(eval_symbols(alphabet, w, 1), eval_symbols(alphabet, w, 2)));
      },
      limits);

  enumerate_pumping_candidates(
      c,
      [&](const PumpingCandidate& cand) {
        std::vector<Symbol> uv = cand.stem;
        uv.insert(uv.end(), cand.cycle.begin(), cand.cycle.end());
        BigInt dq = eval_symbols(alphabet, uv, 2) - eval_symbols(alphabet, cand.stem, 2);
        // Zero denominator difference: the pumped family is unbounded or
        // constant, never a finite limit outside the short-word quotients.
        if (dq == 0) return true;
        BigInt dp = eval_symbols(alphabet, uv, 1) - eval_symbols(alphabet, cand.stem, 1);
        out.insert(Rational(dp, dq));
        return true;
      },
      limits);
  return out;
}

// A finite quotient set is exactly the set of quotients of words shorter
// than n: removing a cycle from a word does not change its value once every
// pumped family is constant.
Finiteness is_quoset_infinite(const Automaton& a, const Limits& limits) {
  Automaton c = canonical_form(a);
  Finiteness result;
  if (is_empty(c)) return result;
  if (has_nonconstant_pump(c, limits)) {
    result.infinite = true;
    return result;
  }
  const Alphabet& alphabet = c.alphabet();
  enumerate_words(
      c, c.num_states() - 1,
      [&](const std::vector<Symbol>& w) {
        result.values.insert(Rational(eval_symbols(alphabet, w, 1), eval_symbols(alphabet, w, 2)));
      },
      limits);
  return result;
}

// The supremum of a nonempty quotient set is +infinity or lies in the
// candidate set: every long word sits on a pumped family that either
// increases toward its gamma limit or decreases from a shorter word.
std::optional<Rational> sup_quoset(const Automaton& a, const Limits& limits) {
  Automaton c = canonical_form(a);
  if (is_empty(c)) throw Error(ErrorCode::Precondition, "supremum of an empty quotient set");
  auto cands = candidate_set(c, limits);
  std::vector<Rational> t(cands.begin(), cands.end());
  // nothing above x is monotone in x
  auto it = std::partition_point(t.begin(), t.end(),
                                 [&](const Rational& x) { return exists_rel(c, x, Relation::Gt).holds; });
  if (it == t.end()) return std::nullopt;
  return *it;
}

Rational inf_quoset(const Automaton& a, const Limits& limits) {
  Automaton c = canonical_form(a);
  if (is_empty(c)) throw Error(ErrorCode::Precondition, "infimum of an empty quotient set");
  auto cands = candidate_set(c, limits);
  std::vector<Rational> t(cands.begin(), cands.end());
  auto it = std::partition_point(t.begin(), t.end(),
                                 [&](const Rational& x) { return !exists_rel(c, x, Relation::Lt).holds; });
  if (it == t.begin()) throw std::logic_error("candidate set does not contain the infimum");
  return *std::prev(it);
}

bool is_accumulation_point(const Automaton& a, const Rational& alpha, const Limits& limits) {
  Automaton c = canonical_form(a);
  const Base base = c.alphabet().base();
  Automaton below = minimize(product(c, compare_automaton(base, alpha, Relation::Lt), BoolOp::And));
  if (!is_empty(below)) {
    auto s = sup_quoset(below, limits);
    if (s && *s == alpha) return true;
  }
  Automaton above = minimize(product(c, compare_automaton(base, alpha, Relation::Gt), BoolOp::And));
  if (!is_empty(above) && inf_quoset(above, limits) == alpha) return true;
  return false;
}

BigInt small_representation_bound(const Rational& x, std::size_t n) {
  if (x.is_zero()) return BigInt(2 * n - 1);
  return x.num() * x.den() * n;
}

std::optional<PairWord> find_small_representation(const Automaton& a, const Rational& x) {
  auto w = exists_rel(a, x, Relation::Eq).witness;
  if (!w) return std::nullopt;
#ifndef NDEBUG
  if (!x.is_zero()) {
    // p', q' < k^(pqn) for the shortest representation.
    const std::size_t n = minimize(to_order(a, Order::Msb)).num_states();
    BigInt cap = pow_big(a.alphabet().k(), static_cast<std::size_t>(x.num() * x.den() * n));
    assert(eval(project(*w, 1)) < cap && eval(project(*w, 2)) < cap);
  }
#endif
  return w;
}

}  // namespace ratset
