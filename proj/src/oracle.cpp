#include "ratset/oracle.hpp"

namespace ratset {

std::set<Rational> EnumerationReport::value_set() const {
  std::set<Rational> out;
  for (const auto& [x, stats] : values) out.insert(x);
  return out;
}

std::set<Rational> EnumerationReport::values_up_to(std::size_t len) const {
  std::set<Rational> out;
  for (const auto& [x, stats] : values)
    if (stats.shortest <= len) out.insert(x);
  return out;
}

EnumerationReport enumerate_quotients(const Automaton& a, std::size_t max_len, const Limits& limits) {
  if (a.alphabet().arity() != 2) throw Error(ErrorCode::InvalidArgument, "oracle needs a pair automaton");
  Automaton dfa = minimize(a);
  EnumerationReport report;
  report.max_len = max_len;
  report.words_per_length.assign(max_len + 1, 0);
  enumerate_words(
      dfa, max_len,
      [&](const std::vector<Symbol>& w) {
        ++report.words_per_length[w.size()];
        PairWord pw = to_pair_word(dfa.alphabet(), dfa.order(), w);
        if (eval(project(pw, 2)) == 0) {
          ++report.undefined;
          return;
        }
        auto [it, fresh] = report.values.try_emplace(quo(pw));
        if (fresh || w.size() < it->second.shortest) it->second.shortest = w.size();
        ++it->second.count;
      },
      limits);
  return report;
}

OracleAnswer oracle_member(const Automaton& a, const Rational& x, std::size_t max_len, const Limits& limits) {
  EnumerationReport report = enumerate_quotients(a, max_len, limits);
  return report.values.count(x) ? OracleAnswer::Yes : OracleAnswer::NoUpToBound;
}

}  // namespace ratset
