#ifndef RATSET_AUTOMATON_HPP
#define RATSET_AUTOMATON_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ratset/core.hpp"

namespace ratset {

using StateId = std::uint32_t;
using Symbol = std::uint32_t;

/// Digit alphabet Sigma_k (arity 1) or pair alphabet Sigma_k^2 (arity 2).
/// Pair symbols are encoded as a*k + b.
class Alphabet {
 public:
  Alphabet(Base base, int arity);

  Base base() const noexcept { return base_; }
  int k() const noexcept { return base_.value(); }
  int arity() const noexcept { return arity_; }
  Symbol size() const noexcept { return size_; }

  Symbol encode(PairDigit d) const;
  PairDigit decode(Symbol s) const;
  /// The padding symbol: 0 for arity 1, [0,0] for arity 2.
  Symbol zero() const noexcept { return 0; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  Base base_;
  int arity_;
  Symbol size_;
};

/// Resource caps and cooperative cancellation for the enumerating
/// procedures.
struct Limits {
  std::uint64_t max_candidates = 1'000'000;
  std::uint64_t max_nodes = 10'000'000;
  const std::atomic<bool>* cancel = nullptr;

  void check_cancel() const;
};

/// Finite automaton over a digit or pair-digit alphabet; serves both as NFA
/// and as DFA. Determinism is a property of the transition structure and is
/// never established implicitly.
class Automaton {
 public:
  Automaton(Alphabet alphabet, Order order);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  Order order() const noexcept { return order_; }
  std::size_t num_states() const noexcept { return accepting_.size(); }

  StateId add_state(bool accepting = false);
  void set_accepting(StateId s, bool accepting = true);
  void add_initial(StateId s);
  void add_transition(StateId from, Symbol symbol, StateId to);
  /// Relabels the significance order without touching the transitions.
  void set_order(Order o) { order_ = o; }

  bool is_accepting(StateId s) const { return accepting_.at(s); }
  const std::vector<StateId>& initial() const noexcept { return initial_; }
  /// Successors of (s, symbol), sorted ascending without duplicates.
  const std::vector<StateId>& successors(StateId s, Symbol symbol) const {
    return delta_[index(s, symbol)];
  }

  /// Exactly one initial state and at most one successor per (state, symbol).
  bool is_deterministic() const;
  /// Deterministic and every (state, symbol) has a successor.
  bool is_complete() const;

  /// Acceptance test; `symbols` are read left to right.
  bool accepts(const std::vector<Symbol>& symbols) const;
  bool accepts(const PairWord& w) const;
  bool accepts(const Word& w) const;

  std::size_t num_transitions() const;

 private:
  std::size_t index(StateId s, Symbol a) const {
    return static_cast<std::size_t>(s) * alphabet_.size() + a;
  }
  void check_state(StateId s) const;

  Alphabet alphabet_;
  Order order_;
  std::vector<std::vector<StateId>> delta_;
  std::vector<StateId> initial_;
  std::vector<bool> accepting_;
};

enum class BoolOp { And, Or, Diff, Xor };

/// Throws AlphabetMismatch unless both automata share alphabet and order.
void require_compatible(const Automaton& a, const Automaton& b);

Automaton determinize(const Automaton& a);
/// Deterministic and complete (adds a sink state when needed).
Automaton complete(const Automaton& a);
/// Removes states that are not accessible or not co-accessible. Keeps one
/// (non-accepting) initial state when the language is empty.
Automaton trim(const Automaton& a);
/// Unique minimal trimmed DFA, states numbered in BFS order from the initial
/// state over symbols in ascending order.
Automaton minimize(const Automaton& a);
Automaton complement(const Automaton& a);
Automaton product(const Automaton& a, const Automaton& b, BoolOp op);
Automaton reverse(const Automaton& a);
/// Same language read in MSB-first (resp. LSB-first) order.
Automaton to_order(const Automaton& a, Order o);

bool is_empty(const Automaton& a);
bool is_finite_language(const Automaton& a);
bool language_equal(const Automaton& a, const Automaton& b);

/// Number of accepted words of length n.
BigInt count_words(const Automaton& a, std::size_t n);

/// Lexicographically least among the shortest accepted words.
std::optional<std::vector<Symbol>> shortest_accepted(const Automaton& a);

enum class Side { Leading, Trailing };

/// Removes the maximal run of padding symbols ([0,0], or digit 0 for
/// arity 1) on the given side of every accepted word.
Automaton strip_padding(const Automaton& a, Side side);
/// Closes the language under adding padding on the given side:
/// pad* L (leading) or L pad* (trailing).
Automaton pad_closure(const Automaton& a, Side side);

/// Arity-1 automaton for { pi_which(w) : w in L(a) }; generally an NFA.
Automaton project_language(const Automaton& a, int which);

/// Stem u and cycle v of a pumpable prefix; see enumerate_pumping_candidates.
struct PumpingCandidate {
  std::vector<Symbol> stem;
  std::vector<Symbol> cycle;
};

/// Visits every (u, v) with |uv| <= n, |v| >= 1 such that u leads from the
/// initial state to a state s and v leads from s back to s, where n is the
/// state count. `a` must be a trimmed DFA. The visitor returns false to stop.
/// Throws ResourceCap after `limits.max_candidates` candidates.
void enumerate_pumping_candidates(
    const Automaton& a,
    const std::function<bool(const PumpingCandidate&)>& visit,
    const Limits& limits = {});

/// Visits every accepted word of length <= max_len, depth-first in
/// lexicographic order (a prefix before its extensions). `a` must be
/// deterministic. Counts visited search nodes against `limits.max_nodes`.
void enumerate_words(const Automaton& a, std::size_t max_len,
                     const std::function<void(const std::vector<Symbol>&)>& visit,
                     const Limits& limits = {});

/// Word / symbol conversions.
std::vector<Symbol> to_symbols(const Alphabet& alphabet, const PairWord& w);
std::vector<Symbol> to_symbols(const Alphabet& alphabet, const Word& w);
PairWord to_pair_word(const Alphabet& alphabet, Order order,
                      const std::vector<Symbol>& symbols);
Word to_word(const Alphabet& alphabet, Order order,
             const std::vector<Symbol>& symbols);

/// Automaton accepting exactly the given symbol strings.
Automaton from_words(const Alphabet& alphabet, Order order,
                     const std::vector<std::vector<Symbol>>& words);
/// Automaton accepting every word over the alphabet.
Automaton universal(const Alphabet& alphabet, Order order);

}  // namespace ratset

#endif  // RATSET_AUTOMATON_HPP
