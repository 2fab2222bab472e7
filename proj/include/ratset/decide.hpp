#ifndef RATSET_DECIDE_HPP
#define RATSET_DECIDE_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ratset/automaton.hpp"
#include "ratset/compare.hpp"

namespace ratset {

// Decision procedures over quotient sets. Every procedure first restricts
// its input to words with a defined quotient and works on MSB-first
// automata; LSB-first inputs are reversed.

struct Witnessed {
  bool holds = false;
  /// Lexicographically least shortest witness (MSB-first), when one exists.
  std::optional<PairWord> witness;
};

/// MSB-first DFA for the defined words of `a`, stripped of leading [0,0],
/// minimized and trimmed. Its state count is the `n` of every bound below.
Automaton canonical_form(const Automaton& a);

/// Is there x in quo(L(a)) with x `rel` alpha?
Witnessed exists_rel(const Automaton& a, const Rational& alpha, Relation rel);

/// F subset of quo(L(a))?
bool finite_subset(const Automaton& a, const std::set<Rational>& f);
/// quo(L(a)) subset of F?
bool subset_finite(const Automaton& a, const std::set<Rational>& f);

/// Short-word quotients together with the limits gamma_k(u, v) of pumped
/// families. quo(L(a)) is finite iff it is contained in this set.
std::set<Rational> candidate_set(const Automaton& a, const Limits& limits = {});

struct Finiteness {
  bool infinite = false;
  /// The full quotient set when finite.
  std::set<Rational> values;
};
Finiteness is_quoset_infinite(const Automaton& a, const Limits& limits = {});

/// Supremum of the quotient set; nullopt stands for +infinity. Throws
/// Precondition on an empty quotient set.
std::optional<Rational> sup_quoset(const Automaton& a, const Limits& limits = {});
Rational inf_quoset(const Automaton& a, const Limits& limits = {});

bool is_accumulation_point(const Automaton& a, const Rational& alpha,
                           const Limits& limits = {});

/// Shortest w in L(a) with quo(w) = x, or nullopt when x is not a member.
std::optional<PairWord> find_small_representation(const Automaton& a,
                                                  const Rational& x);
/// Length bound a shortest representation of x must satisfy for an automaton
/// of canonical state count n: p*q*n for p >= 1, 2n - 1 for x = 0.
BigInt small_representation_bound(const Rational& x, std::size_t n);

// ---- integer-valued sets ----

/// Ultimately periodic set of naturals: j belongs iff j is listed in
/// `prefix_members` (j < preperiod) or j >= preperiod and
/// (j - preperiod) mod period is in `residues`.
struct UltimatelyPeriodic {
  std::size_t preperiod = 0;
  std::size_t period = 1;
  std::set<std::size_t> residues;
  std::set<std::size_t> prefix_members;

  bool contains(std::size_t j) const;
};

struct KFiniteData {
  /// f -> U_f = { j : k^j f in S }; no key is divisible by k.
  std::map<BigInt, UltimatelyPeriodic> parts;
};

/// Analyzes an arity-1 MSB automaton of canonical representations (0
/// excluded). nullopt means the set is not k-finite.
std::optional<KFiniteData> k_finite_analysis(const Automaton& n);
/// Canonical representations of the set described by `data`.
Automaton rebuild_k_finite(Base base, const KFiniteData& data);

/// Arity-2 MSB automaton accepting w iff d | eval(pi_1(w)).
Automaton divisibility_automaton(Base base, const BigInt& d);
/// Arity-2 MSB automaton accepting w iff eval(pi_2(w)) = d.
Automaton denominator_equals(Base base, const BigInt& d);

struct Decomposition {
  struct ConstantPart {
    BigInt quotient;  // a_i
    Automaton denominators;  // S_i, canonical arity-1
  };
  struct DenominatorPart {
    BigInt denominator;  // b_j
    Automaton quotients;  // T_j, canonical arity-1
  };
  std::vector<ConstantPart> constant_parts;
  std::vector<DenominatorPart> denominator_parts;
};

/// Splits an integer-valued language into constant-quotient parts (values
/// below k^(n+2)) and constant-denominator parts. Throws Precondition when
/// the quotient set is not contained in N.
Decomposition decompose_integer_valued(const Automaton& a,
                                       const Limits& limits = {});
/// Arity-1 automaton of canonical representations of the values covered by
/// a decomposition.
Automaton assemble_naturals(Base base, const Decomposition& d);

struct IntegralityVerdict {
  bool yes = false;
  /// On yes: [L(naturals)]_k = quo(L(a)), canonical representations.
  std::optional<Automaton> naturals;
  /// On no: a word with non-integer quotient, when one was found.
  std::optional<PairWord> witness;
  /// Which step rejected (1..4), 0 on yes.
  int failed_step = 0;
};

IntegralityVerdict is_subset_of_naturals(const Automaton& a,
                                         const Limits& limits = {});

/// quo(L(a)) subset of [L(n)]_k, for an arity-1 automaton n.
bool quo_subset_of(const Automaton& a, const Automaton& n,
                   const Limits& limits = {});
bool quo_equals(const Automaton& a, const Automaton& n,
                const Limits& limits = {});

/// Canonical representations of N (all of them, including the empty word for 0).
Automaton naturals_automaton(Base base);

}  // namespace ratset

#endif  // RATSET_DECIDE_HPP
