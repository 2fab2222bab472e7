#include <map>

#include "ratset/decide.hpp"

namespace ratset {

bool UltimatelyPeriodic::contains(std::size_t j) const {
  if (j < preperiod) return prefix_members.count(j) > 0;
  return residues.count((j - preperiod) % period) > 0;
}

namespace {

constexpr std::uint64_t kMaxModulus = 10'000'000;

std::uint64_t small_modulus(const BigInt& d, const char* what) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be positive");
  if (d > kMaxModulus) throw Error(ErrorCode::ResourceCap, std::string(what) + " too large");
  return static_cast<std::uint64_t>(d);
}

Automaton strip_canonical(const Automaton& a) {
  return minimize(strip_padding(to_order(a, Order::Msb), Side::Leading));
}

// Runs a complete DFA from its initial state.
StateId run(const Automaton& dfa, StateId s, const std::vector<Symbol>& w) {
  for (Symbol x : w) s = dfa.successors(s, x).front();
  return s;
}

// Words whose denominator digit stream ends in 0.
Automaton denominator_ends_in_zero(Base base) {
  Alphabet ab(base, 2);
  Automaton a(ab, Order::Msb);
  StateId other = a.add_state(false);
  StateId zero = a.add_state(true);
  a.add_initial(other);
  for (Symbol x = 0; x < ab.size(); ++x) {
    StateId to = ab.decode(x).b == 0 ? zero : other;
    a.add_transition(other, x, to);
    a.add_transition(zero, x, to);
  }
  return a;
}

// Words with at least (or fewer than) m leading denominator digits 0. On
// words without leading [0,0] a gap of g gives k^(g-1) < quo < k^(g+1).
Automaton denominator_gap(Base base, std::size_t m, bool at_least) {
  Alphabet ab(base, 2);
  Automaton a(ab, Order::Msb);
  for (std::size_t i = 0; i <= m; ++i) a.add_state(at_least ? i == m : i < m);
  StateId done = a.add_state(!at_least);
  a.add_initial(0);
  for (std::size_t i = 0; i <= m; ++i)
    for (Symbol x = 0; x < ab.size(); ++x) {
      bool zero = ab.decode(x).b == 0;
      if (i == m) a.add_transition(i, x, i);
      else a.add_transition(i, x, zero ? static_cast<StateId>(i + 1) : done);
    }
  for (Symbol x = 0; x < ab.size(); ++x) a.add_transition(done, x, done);
  return a;
}

// Canonical representations of { eval(pi_1(w)) / d : w in L(part) }, where
// every numerator in `part` is divisible by d. Long division MSB-first.
Automaton divide_numerators(const Automaton& part, std::uint64_t d) {
  Automaton dfa = minimize(part);
  const Alphabet& pair_ab = dfa.alphabet();
  const int k = pair_ab.k();
  Alphabet digits(pair_ab.base(), 1);
  Automaton out(digits, Order::Msb);
  std::map<std::pair<StateId, std::uint64_t>, StateId> ids;
  std::vector<std::pair<StateId, std::uint64_t>> queue;
  auto id_of = [&](StateId s, std::uint64_t r) {
    auto [it, fresh] = ids.try_emplace({s, r}, 0);
    if (fresh) {
      it->second = out.add_state(dfa.is_accepting(s) && r == 0);
      queue.emplace_back(s, r);
    }
    return it->second;
  };
  out.add_initial(id_of(dfa.initial().front(), 0));
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [s, r] = queue[i];
    StateId from = ids.at({s, r});
    for (Symbol x = 0; x < pair_ab.size(); ++x) {
      const auto& next = dfa.successors(s, x);
      if (next.empty()) continue;
      std::uint64_t t = r * k + pair_ab.decode(x).a;
      out.add_transition(from, static_cast<Symbol>(t / d), id_of(next.front(), t % d));
    }
  }
  return minimize(strip_padding(out, Side::Leading));
}

struct Analysis {
  IntegralityVerdict verdict;
  Decomposition parts;
};

std::optional<PairWord> shortest_pair(const Automaton& a) {
  auto w = shortest_accepted(a);
  if (!w) return std::nullopt;
  return to_pair_word(a.alphabet(), a.order(), *w);
}

Analysis analyze(const Automaton& input, const Limits& limits) {
  Analysis out;
  auto reject = [&](int step, std::optional<PairWord> witness) {
    out.verdict.failed_step = step;
    out.verdict.witness = std::move(witness);
    return out;
  };

  const Base base = input.alphabet().base();
  Automaton a = minimize(strip_padding(canonical_form(input), Side::Trailing));
  const std::size_t n = a.num_states();
  const std::size_t gap = n + 2;

  // Step 1: a gap below n+2 keeps values under k^(n+2); these must all be
  // integers, so there are finitely many of them. Larger gaps put every
  // value above k^(n+1).
  Automaton rest = minimize(product(a, denominator_gap(base, gap, false), BoolOp::And));
  while (auto w = shortest_pair(rest)) {
    limits.check_cancel();
    if (out.parts.constant_parts.size() >= limits.max_candidates)
      throw Error(ErrorCode::ResourceCap, "too many small values");
    Rational x = quo(*w);
    if (!x.is_integer()) return reject(1, w);
    Automaton eq = compare_automaton(base, x, Relation::Eq);
    Automaton part = product(a, eq, BoolOp::And);
    out.parts.constant_parts.push_back({x.num(), strip_canonical(project_language(part, 2))});
    rest = minimize(product(rest, eq, BoolOp::Diff));
  }

  Automaton large = minimize(product(a, denominator_gap(base, gap, true), BoolOp::And));
  if (is_empty(large)) {
    out.verdict.yes = true;
    return out;
  }

  // Step 2: with trailing [0,0] stripped, a denominator ending in 0 pairs
  // with a numerator not divisible by k.
  if (auto w = shortest_pair(product(large, denominator_ends_in_zero(base), BoolOp::And))) return reject(2, w);

  // Step 3: the denominators must form a k-finite set.
  auto kf = k_finite_analysis(strip_canonical(project_language(large, 2)));
  if (!kf) {
    std::optional<PairWord> witness;
    Limits probe = limits;
    probe.max_nodes = std::min<std::uint64_t>(limits.max_nodes, 200'000);
    try {
      enumerate_words(
          large, 2 * n + 8,
          [&](const std::vector<Symbol>& w) {
            if (witness) return;
            PairWord pw = to_pair_word(large.alphabet(), Order::Msb, w);
            if (!quo(pw).is_integer()) witness = pw;
          },
          probe);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ResourceCap) throw;
    }
    return reject(3, witness);
  }

  // Step 4: per denominator, every numerator must be a multiple of it.
  for (const auto& entry : kf->parts) {
    const BigInt& b = entry.first;
    limits.check_cancel();
    std::uint64_t d = small_modulus(b, "denominator");
    Automaton part = product(large, denominator_equals(base, b), BoolOp::And);
    if (auto w = shortest_pair(product(part, divisibility_automaton(base, b), BoolOp::Diff))) return reject(4, w);
    out.parts.denominator_parts.push_back({b, divide_numerators(part, d)});
  }
  out.verdict.yes = true;
  return out;
}

}  // namespace

std::optional<KFiniteData> k_finite_analysis(const Automaton& n) {
  if (n.alphabet().arity() != 1) throw Error(ErrorCode::InvalidArgument, "k-finite analysis needs a digit automaton");
  Automaton canon = strip_canonical(n);
  if (canon.accepts(std::vector<Symbol>{})) throw Error(ErrorCode::Precondition, "set contains 0");
  Automaton cores = minimize(strip_padding(canon, Side::Trailing));
  if (!is_finite_language(cores)) return std::nullopt;

  const Alphabet& ab = canon.alphabet();
  Automaton dfa = complete(canon);
  KFiniteData data;
  enumerate_words(cores, cores.num_states(), [&](const std::vector<Symbol>& w) {
    UltimatelyPeriodic u;
    std::map<StateId, std::size_t> seen;
    std::vector<StateId> path;
    StateId s = run(dfa, dfa.initial().front(), w);
    while (!seen.count(s)) {
      seen[s] = path.size();
      path.push_back(s);
      s = dfa.successors(s, ab.zero()).front();
    }
    u.preperiod = seen[s];
    u.period = path.size() - u.preperiod;
    for (std::size_t j = 0; j < path.size(); ++j) {
      if (!dfa.is_accepting(path[j])) continue;
      if (j < u.preperiod)
        u.prefix_members.insert(j);
      else
        u.residues.insert(j - u.preperiod);
    }
    data.parts.emplace(eval(to_word(ab, Order::Msb, w)), std::move(u));
  });
  return data;
}

Automaton rebuild_k_finite(Base base, const KFiniteData& data) {
  Alphabet ab(base, 1);
  Automaton out(ab, Order::Msb);
  StateId start = out.add_state(false);
  out.add_initial(start);
  for (const auto& [f, u] : data.parts) {
    if (f <= 0 || f % base.value() == 0) throw Error(ErrorCode::InvalidArgument, "k-finite core must be positive and not divisible by k");
    std::vector<Symbol> w = to_symbols(ab, canonical(f, base));
    const std::size_t len = u.preperiod + u.period;
    // Chain: w then 0^j; node j records whether k^j f is a member.
    std::vector<StateId> zeros(len);
    for (std::size_t j = 0; j < len; ++j) zeros[j] = out.add_state(u.contains(j));
    StateId s = start;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      StateId next = out.add_state(false);
      out.add_transition(s, w[i], next);
      s = next;
    }
    out.add_transition(s, w.back(), zeros[0]);
    for (std::size_t j = 0; j + 1 < len; ++j) out.add_transition(zeros[j], ab.zero(), zeros[j + 1]);
    out.add_transition(zeros[len - 1], ab.zero(), zeros[u.preperiod]);
  }
  return minimize(out);
}

Automaton divisibility_automaton(Base base, const BigInt& d) {
  const std::uint64_t m = small_modulus(d, "divisor");
  Alphabet ab(base, 2);
  Automaton a(ab, Order::Msb);
  for (std::uint64_t r = 0; r < m; ++r) a.add_state(r == 0);
  a.add_initial(0);
  for (std::uint64_t r = 0; r < m; ++r)
    for (Symbol x = 0; x < ab.size(); ++x)
      a.add_transition(static_cast<StateId>(r), x,
                       static_cast<StateId>((r * base.value() + ab.decode(x).a) % m));
  return a;
}

Automaton denominator_equals(Base base, const BigInt& d) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "denominator must be non-negative");
  Alphabet ab(base, 2);
  std::vector<Digit> digits = canonical(d, base).digits();
  Automaton a(ab, Order::Msb);
  // state i: leading zeros read, then i digits of d matched
  for (std::size_t i = 0; i <= digits.size(); ++i) a.add_state(i == digits.size());
  a.add_initial(0);
  for (Symbol x = 0; x < ab.size(); ++x) {
    Digit b = ab.decode(x).b;
    if (b == 0) a.add_transition(0, x, 0);
    if (!digits.empty() && b == digits[0]) a.add_transition(0, x, 1);
    for (std::size_t i = 1; i < digits.size(); ++i)
      if (b == digits[i]) a.add_transition(static_cast<StateId>(i), x, static_cast<StateId>(i + 1));
  }
  return minimize(a);
}

Decomposition decompose_integer_valued(const Automaton& a, const Limits& limits) {
  Analysis result = analyze(a, limits);
  if (!result.verdict.yes) {
    std::string msg = "quotient set is not contained in N";
    if (result.verdict.witness) msg += ": " + result.verdict.witness->to_string();
    throw Error(ErrorCode::Precondition, msg);
  }
  return std::move(result.parts);
}

Automaton assemble_naturals(Base base, const Decomposition& d) {
  Alphabet ab(base, 1);
  std::vector<std::vector<Symbol>> constants;
  for (const auto& part : d.constant_parts) constants.push_back(to_symbols(ab, canonical(part.quotient, base)));
  Automaton out = from_words(ab, Order::Msb, constants);
  for (const auto& part : d.denominator_parts) out = product(out, to_order(part.quotients, Order::Msb), BoolOp::Or);
  return minimize(out);
}

IntegralityVerdict is_subset_of_naturals(const Automaton& a, const Limits& limits) {
  Analysis result = analyze(a, limits);
  if (result.verdict.yes) result.verdict.naturals = assemble_naturals(a.alphabet().base(), result.parts);
  return result.verdict;
}

bool quo_subset_of(const Automaton& a, const Automaton& n, const Limits& limits) {
  if (n.alphabet().arity() != 1 || n.alphabet().base() != a.alphabet().base())
    throw Error(ErrorCode::AlphabetMismatch, "expected a digit automaton over the same base");
  IntegralityVerdict v = is_subset_of_naturals(a, limits);
  if (!v.yes) return false;
  return is_empty(product(*v.naturals, strip_canonical(n), BoolOp::Diff));
}

bool quo_equals(const Automaton& a, const Automaton& n, const Limits& limits) {
  if (n.alphabet().arity() != 1 || n.alphabet().base() != a.alphabet().base())
    throw Error(ErrorCode::AlphabetMismatch, "expected a digit automaton over the same base");
  IntegralityVerdict v = is_subset_of_naturals(a, limits);
  if (!v.yes) return false;
  return language_equal(*v.naturals, strip_canonical(n));
}

Automaton naturals_automaton(Base base) {
  Alphabet ab(base, 1);
  Automaton a(ab, Order::Msb);
  StateId start = a.add_state(true);
  StateId rest = a.add_state(true);
  a.add_initial(start);
  for (Symbol x = 0; x < ab.size(); ++x) {
    if (x != 0) a.add_transition(start, x, rest);
    a.add_transition(rest, x, rest);
  }
  return a;
}

}  // namespace ratset
