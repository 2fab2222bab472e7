#ifndef RATSET_TESTS_SUPPORT_HPP
#define RATSET_TESTS_SUPPORT_HPP

// Independent ground truth for the tests: raw enumeration of every word over
// the alphabet (no DFA walk) and Horner evaluation written here.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "ratset/automaton.hpp"

namespace support {

using ratset::Alphabet;
using ratset::Automaton;
using ratset::Base;
using ratset::BigInt;
using ratset::Order;
using ratset::Rational;
using ratset::StateId;
using ratset::Symbol;

// Calls f(word) for every word of length 0..max_len, shorter words first.
template <class F>
void for_each_word(const Alphabet& ab, std::size_t max_len, F&& f) {
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<Symbol> w(len, 0);
    while (true) {
      f(w);
      std::size_t i = len;
      while (i > 0 && w[i - 1] + 1 == ab.size()) w[--i] = 0;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
}

struct PairValue {
  BigInt num, den;
};

// Components of a word read in the given significance order.
inline PairValue components(const Alphabet& ab, Order order, const std::vector<Symbol>& w) {
  PairValue v{0, 0};
  auto step = [&](Symbol x) {
    ratset::PairDigit d = ab.decode(x);
    v.num = v.num * ab.k() + d.a;
    v.den = v.den * ab.k() + d.b;
  };
  if (order == Order::Msb)
    for (Symbol x : w) step(x);
  else
    for (auto it = w.rbegin(); it != w.rend(); ++it) step(*it);
  return v;
}

inline Rational value(const PairValue& v) { return Rational(v.num, v.den); }

struct Brute {
  std::map<Rational, std::size_t> shortest;  // value -> shortest length
  std::map<Rational, std::size_t> count;
  std::vector<std::uint64_t> per_length;
  std::vector<std::vector<Symbol>> words;
};

inline Brute brute(const Automaton& a, std::size_t max_len, bool keep_words = false) {
  Brute b;
  b.per_length.assign(max_len + 1, 0);
  for_each_word(a.alphabet(), max_len, [&](const std::vector<Symbol>& w) {
    if (!a.accepts(w)) return;
    ++b.per_length[w.size()];
    if (keep_words) b.words.push_back(w);
    if (a.alphabet().arity() != 2) return;
    PairValue v = components(a.alphabet(), a.order(), w);
    if (v.den == 0) return;
    Rational x = value(v);
    b.shortest.try_emplace(x, w.size());
    ++b.count[x];
  });
  return b;
}

inline std::vector<Rational> keys(const std::map<Rational, std::size_t>& m) {
  std::vector<Rational> out;
  for (const auto& [x, n] : m) out.push_back(x);
  return out;
}

// "[a,b][a,b]..." -> symbols (as written, left to right).
inline std::vector<Symbol> pw(const Alphabet& ab, const std::string& text) {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < text.size();) {
    std::size_t close = text.find(']', i);
    std::string body = text.substr(i + 1, close - i - 1);
    std::size_t comma = body.find(',');
    out.push_back(ab.encode({static_cast<ratset::Digit>(std::stoi(body.substr(0, comma))),
                             static_cast<ratset::Digit>(std::stoi(body.substr(comma + 1)))}));
    i = close + 1;
  }
  return out;
}

// Automaton for a finite list of pair words written as above.
inline Automaton words(int k, std::initializer_list<std::string> ws, Order order = Order::Msb) {
  Alphabet ab(Base(k), 2);
  std::vector<std::vector<Symbol>> list;
  for (const auto& w : ws) list.push_back(pw(ab, w));
  return ratset::from_words(ab, order, list);
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20260415);
  return gen;
}

}  // namespace support

#endif  // RATSET_TESTS_SUPPORT_HPP
