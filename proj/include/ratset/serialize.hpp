#ifndef RATSET_SERIALIZE_HPP
#define RATSET_SERIALIZE_HPP

#include <string>
#include <string_view>

#include "ratset/automaton.hpp"

namespace ratset {

// Line-based text format:
//
//   k=<int> arity=<1|2> states=<int> start=<int> order=<msb|lsb>
//   accept: <state ids>
//   <src> <symbol> <dst>            symbol is <d> or <a>,<b>
//
// Automata with several initial states are written with a fresh start state.

std::string to_text(const Automaton& a);
/// Throws Error(Parse) with a "line N: ..." message on malformed input.
Automaton parse_text(std::string_view text);

Automaton load_automaton(const std::string& path);
void save_automaton(const Automaton& a, const std::string& path);

/// Graphviz rendering; accepting states are drawn as double circles.
std::string to_dot(const Automaton& a, std::string_view name = "A");

}  // namespace ratset

#endif  // RATSET_SERIALIZE_HPP
