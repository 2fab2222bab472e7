#ifndef RATSET_ORACLE_HPP
#define RATSET_ORACLE_HPP

#include <map>
#include <set>
#include <vector>

#include "ratset/automaton.hpp"

namespace ratset {

// Brute-force ground truth by exhaustive word enumeration.

struct ValueStats {
  std::uint64_t count = 0;  // representations found
  std::size_t shortest = 0;  // length of the shortest one
  bool multiple() const { return count > 1; }
};

struct EnumerationReport {
  std::size_t max_len = 0;
  std::map<Rational, ValueStats> values;
  /// words_per_length[n] = accepted words of length n (defined or not).
  std::vector<std::uint64_t> words_per_length;
  std::uint64_t undefined = 0;

  std::set<Rational> value_set() const;
  /// Values represented by some word of length <= len.
  std::set<Rational> values_up_to(std::size_t len) const;
};

/// Every accepted word of length <= max_len, with exact quotients.
/// Throws ResourceCap when the search exceeds `limits.max_nodes`.
EnumerationReport enumerate_quotients(const Automaton& a, std::size_t max_len,
                                      const Limits& limits = {});

enum class OracleAnswer { Yes, NoUpToBound };

OracleAnswer oracle_member(const Automaton& a, const Rational& x,
                           std::size_t max_len, const Limits& limits = {});

}  // namespace ratset

#endif  // RATSET_ORACLE_HPP
