#include "ratset/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace ratset {

Alphabet::Alphabet(Base base, int arity) : base_(base), arity_(arity) {
  if (arity != 1 && arity != 2) throw Error(ErrorCode::InvalidArgument, "arity must be 1 or 2");
  size_ = static_cast<Symbol>(arity == 1 ? base.value() : base.value() * base.value());
}

Symbol Alphabet::encode(PairDigit d) const {
  if (d.a >= k() || (arity_ == 2 && d.b >= k()))
    throw Error(ErrorCode::InvalidArgument, "digit out of range for base " + std::to_string(k()));
  return arity_ == 1 ? d.a : static_cast<Symbol>(d.a * k() + d.b);
}

PairDigit Alphabet::decode(Symbol s) const {
  if (s >= size_) throw Error(ErrorCode::InvalidArgument, "symbol out of range");
  if (arity_ == 1) return {static_cast<Digit>(s), 0};
  return {static_cast<Digit>(s / k()), static_cast<Digit>(s % k())};
}

void Limits::check_cancel() const {
  if (cancel != nullptr && cancel->load(std::memory_order_relaxed))
    throw Error(ErrorCode::Cancelled, "operation cancelled");
}

Automaton::Automaton(Alphabet alphabet, Order order) : alphabet_(alphabet), order_(order) {}

StateId Automaton::add_state(bool accepting) {
  accepting_.push_back(accepting);
  delta_.resize(delta_.size() + alphabet_.size());
  return static_cast<StateId>(accepting_.size() - 1);
}

void Automaton::check_state(StateId s) const {
  if (s >= num_states()) throw Error(ErrorCode::InvalidArgument, "state " + std::to_string(s) + " out of range");
}

void Automaton::set_accepting(StateId s, bool accepting) {
  check_state(s);
  accepting_[s] = accepting;
}

void Automaton::add_initial(StateId s) {
  check_state(s);
  auto it = std::lower_bound(initial_.begin(), initial_.end(), s);
  if (it == initial_.end() || *it != s) initial_.insert(it, s);
}

void Automaton::add_transition(StateId from, Symbol symbol, StateId to) {
  check_state(from);
  check_state(to);
  if (symbol >= alphabet_.size()) throw Error(ErrorCode::InvalidArgument, "symbol out of range");
  auto& cell = delta_[index(from, symbol)];
  auto it = std::lower_bound(cell.begin(), cell.end(), to);
  if (it == cell.end() || *it != to) cell.insert(it, to);
}

bool Automaton::is_deterministic() const {
  if (initial_.size() != 1) return false;
  return std::all_of(delta_.begin(), delta_.end(), [](const auto& c) { return c.size() <= 1; });
}

bool Automaton::is_complete() const {
  if (initial_.size() != 1) return false;
  return std::all_of(delta_.begin(), delta_.end(), [](const auto& c) { return c.size() == 1; });
}

bool Automaton::accepts(const std::vector<Symbol>& symbols) const {
  std::vector<StateId> current = initial_;
  std::vector<bool> mark(num_states());
  for (Symbol a : symbols) {
    if (a >= alphabet_.size()) return false;
    std::vector<StateId> next;
    for (StateId s : current)
      for (StateId t : successors(s, a))
        if (!mark[t]) {
          mark[t] = true;
          next.push_back(t);
        }
    for (StateId t : next) mark[t] = false;
    current = std::move(next);
    if (current.empty()) return false;
  }
  return std::any_of(current.begin(), current.end(), [&](StateId s) { return accepting_[s]; });
}

bool Automaton::accepts(const PairWord& w) const {
  if (alphabet_.arity() != 2 || w.base() != alphabet_.base()) return false;
  const PairWord& v = w.order() == order_ ? w : w.reversed();
  return accepts(to_symbols(alphabet_, v));
}

bool Automaton::accepts(const Word& w) const {
  if (alphabet_.arity() != 1 || w.base() != alphabet_.base()) return false;
  const Word& v = w.order() == order_ ? w : w.reversed();
  return accepts(to_symbols(alphabet_, v));
}

std::size_t Automaton::num_transitions() const {
  std::size_t n = 0;
  for (const auto& c : delta_) n += c.size();
  return n;
}

void require_compatible(const Automaton& a, const Automaton& b) {
  if (!(a.alphabet() == b.alphabet()))
    throw Error(ErrorCode::AlphabetMismatch, "automata have different alphabets");
  if (a.order() != b.order())
    throw Error(ErrorCode::AlphabetMismatch, "automata have different significance orders");
}

Automaton determinize(const Automaton& a) {
  const Symbol sigma = a.alphabet().size();
  Automaton out(a.alphabet(), a.order());
  std::map<std::vector<StateId>, StateId> ids;
  std::deque<std::vector<StateId>> work;
  auto intern = [&](std::vector<StateId> set) {
    auto [it, fresh] = ids.emplace(set, 0);
    if (fresh) {
      bool acc = std::any_of(set.begin(), set.end(), [&](StateId s) { return a.is_accepting(s); });
      it->second = out.add_state(acc);
      work.push_back(std::move(set));
    }
    return it->second;
  };
  out.add_initial(intern(a.initial()));
  std::vector<bool> mark(a.num_states());
  while (!work.empty()) {
    std::vector<StateId> set = std::move(work.front());
    work.pop_front();
    StateId from = ids.at(set);
    for (Symbol x = 0; x < sigma; ++x) {
      std::vector<StateId> next;
      for (StateId s : set)
        for (StateId t : a.successors(s, x))
          if (!mark[t]) {
            mark[t] = true;
            next.push_back(t);
          }
      for (StateId t : next) mark[t] = false;
      if (next.empty()) continue;
      std::sort(next.begin(), next.end());
      StateId to = intern(std::move(next));
      out.add_transition(from, x, to);
    }
  }
  return out;
}

Automaton complete(const Automaton& a) {
  Automaton d = a.is_deterministic() ? a : determinize(a);
  if (d.is_complete()) return d;
  const Symbol sigma = d.alphabet().size();
  const auto n = static_cast<StateId>(d.num_states());
  StateId sink = d.add_state(false);
  for (StateId s = 0; s <= n; ++s)
    for (Symbol x = 0; x < sigma; ++x)
      if (d.successors(s, x).empty()) d.add_transition(s, x, sink);
  return d;
}

namespace {

std::vector<bool> accessible(const Automaton& a) {
  std::vector<bool> seen(a.num_states());
  std::vector<StateId> stack(a.initial());
  for (StateId s : stack) seen[s] = true;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (Symbol x = 0; x < a.alphabet().size(); ++x)
      for (StateId t : a.successors(s, x))
        if (!seen[t]) {
          seen[t] = true;
          stack.push_back(t);
        }
  }
  return seen;
}

std::vector<std::vector<StateId>> predecessors(const Automaton& a) {
  std::vector<std::vector<StateId>> pred(a.num_states());
  for (StateId s = 0; s < a.num_states(); ++s)
    for (Symbol x = 0; x < a.alphabet().size(); ++x)
      for (StateId t : a.successors(s, x)) pred[t].push_back(s);
  return pred;
}

std::vector<bool> coaccessible(const Automaton& a) {
  auto pred = predecessors(a);
  std::vector<bool> seen(a.num_states());
  std::vector<StateId> stack;
  for (StateId s = 0; s < a.num_states(); ++s)
    if (a.is_accepting(s)) {
      seen[s] = true;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (StateId p : pred[s])
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
  }
  return seen;
}

Automaton empty_automaton(const Alphabet& alphabet, Order order) {
  Automaton out(alphabet, order);
  out.add_initial(out.add_state(false));
  return out;
}

// BFS renumbering from the initial state; `a` must be deterministic.
Automaton renumber_bfs(const Automaton& a) {
  const Symbol sigma = a.alphabet().size();
  std::vector<StateId> order_of(a.num_states(), UINT32_MAX);
  std::vector<StateId> order;
  StateId start = a.initial().front();
  order_of[start] = 0;
  order.push_back(start);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Symbol x = 0; x < sigma; ++x)
      for (StateId t : a.successors(order[i], x))
        if (order_of[t] == UINT32_MAX) {
          order_of[t] = static_cast<StateId>(order.size());
          order.push_back(t);
        }
  Automaton out(a.alphabet(), a.order());
  for (StateId s : order) out.add_state(a.is_accepting(s));
  out.add_initial(0);
  for (StateId s : order)
    for (Symbol x = 0; x < sigma; ++x)
      for (StateId t : a.successors(s, x)) out.add_transition(order_of[s], x, order_of[t]);
  return out;
}

}  // namespace

Automaton trim(const Automaton& a) {
  auto acc = accessible(a);
  auto coacc = coaccessible(a);
  std::vector<StateId> id(a.num_states(), UINT32_MAX);
  Automaton out(a.alphabet(), a.order());
  for (StateId s = 0; s < a.num_states(); ++s)
    if (acc[s] && coacc[s]) id[s] = out.add_state(a.is_accepting(s));
  bool any_initial = false;
  for (StateId s : a.initial())
    if (id[s] != UINT32_MAX) {
      out.add_initial(id[s]);
      any_initial = true;
    }
  if (!any_initial) return empty_automaton(a.alphabet(), a.order());
  for (StateId s = 0; s < a.num_states(); ++s) {
    if (id[s] == UINT32_MAX) continue;
    for (Symbol x = 0; x < a.alphabet().size(); ++x)
      for (StateId t : a.successors(s, x))
        if (id[t] != UINT32_MAX) out.add_transition(id[s], x, id[t]);
  }
  return out;
}

Automaton minimize(const Automaton& a) {
  Automaton d = trim(determinize(a));
  if (is_empty(d)) return empty_automaton(a.alphabet(), a.order());
  const Symbol sigma = d.alphabet().size();
  const std::size_t n = d.num_states();

  // Moore refinement; a missing transition goes to the implicit dead class -1.
  std::vector<std::int64_t> cls(n);
  for (StateId s = 0; s < n; ++s) cls[s] = d.is_accepting(s) ? 1 : 0;
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<std::int64_t>, std::int64_t> sig_ids;
    std::vector<std::int64_t> next(n);
    std::vector<std::int64_t> sig(sigma + 1);
    for (StateId s = 0; s < n; ++s) {
      sig[0] = cls[s];
      for (Symbol x = 0; x < sigma; ++x) {
        const auto& succ = d.successors(s, x);
        sig[x + 1] = succ.empty() ? -1 : cls[succ.front()];
      }
      auto [it, fresh] = sig_ids.emplace(sig, static_cast<std::int64_t>(sig_ids.size()));
      next[s] = it->second;
    }
    cls = std::move(next);
    if (sig_ids.size() == classes) break;
    classes = sig_ids.size();
  }

  Automaton q(d.alphabet(), d.order());
  for (std::size_t c = 0; c < classes; ++c) q.add_state(false);
  for (StateId s = 0; s < n; ++s) {
    auto c = static_cast<StateId>(cls[s]);
    if (d.is_accepting(s)) q.set_accepting(c);
    for (Symbol x = 0; x < sigma; ++x)
      for (StateId t : d.successors(s, x)) q.add_transition(c, x, static_cast<StateId>(cls[t]));
  }
  q.add_initial(static_cast<StateId>(cls[d.initial().front()]));
  return renumber_bfs(q);
}

Automaton complement(const Automaton& a) {
  Automaton c = complete(a);
  for (StateId s = 0; s < c.num_states(); ++s) c.set_accepting(s, !c.is_accepting(s));
  return c;
}

Automaton product(const Automaton& a, const Automaton& b, BoolOp op) {
  require_compatible(a, b);
  const Automaton da = a.is_deterministic() ? a : determinize(a);
  const Automaton db = b.is_deterministic() ? b : determinize(b);
  constexpr StateId kDead = UINT32_MAX;
  const Symbol sigma = a.alphabet().size();

  auto accept = [&](StateId x, StateId y) {
    bool ax = x != kDead && da.is_accepting(x);
    bool by = y != kDead && db.is_accepting(y);
    switch (op) {
      case BoolOp::And: return ax && by;
      case BoolOp::Or: return ax || by;
      case BoolOp::Diff: return ax && !by;
      case BoolOp::Xor: return ax != by;
    }
    return false;
  };
  auto viable = [&](StateId x, StateId y) {
    if (x == kDead && y == kDead) return false;
    if (op == BoolOp::And) return x != kDead && y != kDead;
    if (op == BoolOp::Diff) return x != kDead;
    return true;
  };

  Automaton out(a.alphabet(), a.order());
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::deque<std::pair<StateId, StateId>> work;
  auto intern = [&](StateId x, StateId y) {
    auto [it, fresh] = ids.emplace(std::make_pair(x, y), 0);
    if (fresh) {
      it->second = out.add_state(accept(x, y));
      work.emplace_back(x, y);
    }
    return it->second;
  };
  StateId ia = da.initial().front();
  StateId ib = db.initial().front();
  if (!viable(ia, ib)) return empty_automaton(a.alphabet(), a.order());
  out.add_initial(intern(ia, ib));
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    StateId from = ids.at({x, y});
    for (Symbol s = 0; s < sigma; ++s) {
      StateId nx = kDead, ny = kDead;
      if (x != kDead && !da.successors(x, s).empty()) nx = da.successors(x, s).front();
      if (y != kDead && !db.successors(y, s).empty()) ny = db.successors(y, s).front();
      if (!viable(nx, ny)) continue;
      out.add_transition(from, s, intern(nx, ny));
    }
  }
  return trim(out);
}

Automaton reverse(const Automaton& a) {
  Automaton out(a.alphabet(), flip(a.order()));
  for (StateId s = 0; s < a.num_states(); ++s) out.add_state(false);
  for (StateId s : a.initial()) out.set_accepting(s);
  for (StateId s = 0; s < a.num_states(); ++s) {
    if (a.is_accepting(s)) out.add_initial(s);
    for (Symbol x = 0; x < a.alphabet().size(); ++x)
      for (StateId t : a.successors(s, x)) out.add_transition(t, x, s);
  }
  return out;
}

Automaton to_order(const Automaton& a, Order o) { return a.order() == o ? a : reverse(a); }

bool is_empty(const Automaton& a) {
  auto acc = accessible(a);
  for (StateId s = 0; s < a.num_states(); ++s)
    if (acc[s] && a.is_accepting(s)) return false;
  return true;
}

bool is_finite_language(const Automaton& a) {
  Automaton t = trim(a);
  if (is_empty(t)) return true;
  // Any cycle in a trimmed automaton lies on an accepting path.
  const std::size_t n = t.num_states();
  std::vector<std::vector<StateId>> adj(n);
  for (StateId s = 0; s < n; ++s) {
    for (Symbol x = 0; x < t.alphabet().size(); ++x)
      for (StateId u : t.successors(s, x)) adj[s].push_back(u);
    std::sort(adj[s].begin(), adj[s].end());
    adj[s].erase(std::unique(adj[s].begin(), adj[s].end()), adj[s].end());
  }
  enum : std::uint8_t { White, Grey, Black };
  std::vector<std::uint8_t> color(n, White);
  for (StateId root = 0; root < n; ++root) {
    if (color[root] != White) continue;
    std::vector<std::pair<StateId, std::size_t>> stack{{root, 0}};
    color[root] = Grey;
    while (!stack.empty()) {
      auto& [s, pos] = stack.back();
      if (pos == adj[s].size()) {
        color[s] = Black;
        stack.pop_back();
        continue;
      }
      StateId u = adj[s][pos++];
      if (color[u] == Grey) return false;
      if (color[u] == White) {
        color[u] = Grey;
        stack.emplace_back(u, 0);
      }
    }
  }
  return true;
}

bool language_equal(const Automaton& a, const Automaton& b) {
  return is_empty(product(a, b, BoolOp::Xor));
}

BigInt count_words(const Automaton& a, std::size_t n) {
  const Automaton d = a.is_deterministic() ? a : determinize(a);
  std::vector<BigInt> cur(d.num_states(), BigInt(0));
  cur[d.initial().front()] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<BigInt> next(d.num_states(), BigInt(0));
    for (StateId s = 0; s < d.num_states(); ++s) {
      if (cur[s] == 0) continue;
      for (Symbol x = 0; x < d.alphabet().size(); ++x)
        for (StateId t : d.successors(s, x)) next[t] += cur[s];
    }
    cur = std::move(next);
  }
  BigInt total = 0;
  for (StateId s = 0; s < d.num_states(); ++s)
    if (d.is_accepting(s)) total += cur[s];
  return total;
}

namespace {

// Distance (in symbols) from each state of a DFA to acceptance; SIZE_MAX when
// unreachable.
std::vector<std::size_t> distance_to_accept(const Automaton& d) {
  auto pred = predecessors(d);
  std::vector<std::size_t> dist(d.num_states(), SIZE_MAX);
  std::deque<StateId> q;
  for (StateId s = 0; s < d.num_states(); ++s)
    if (d.is_accepting(s)) {
      dist[s] = 0;
      q.push_back(s);
    }
  while (!q.empty()) {
    StateId s = q.front();
    q.pop_front();
    for (StateId p : pred[s])
      if (dist[p] == SIZE_MAX) {
        dist[p] = dist[s] + 1;
        q.push_back(p);
      }
  }
  return dist;
}

}  // namespace

std::optional<std::vector<Symbol>> shortest_accepted(const Automaton& a) {
  const Automaton d = a.is_deterministic() ? a : determinize(a);
  auto dist = distance_to_accept(d);
  StateId s = d.initial().front();
  if (dist[s] == SIZE_MAX) return std::nullopt;
  std::vector<Symbol> word;
  while (dist[s] > 0) {
    for (Symbol x = 0; x < d.alphabet().size(); ++x) {
      const auto& succ = d.successors(s, x);
      if (!succ.empty() && dist[succ.front()] + 1 == dist[s]) {
        word.push_back(x);
        s = succ.front();
        break;
      }
    }
  }
  return word;
}

Automaton strip_padding(const Automaton& a, Side side) {
  if (side == Side::Trailing) return reverse(strip_padding(reverse(a), Side::Leading));
  const Symbol zero = a.alphabet().zero();
  std::vector<bool> in_closure(a.num_states());
  std::vector<StateId> closure(a.initial());
  for (StateId s : closure) in_closure[s] = true;
  for (std::size_t i = 0; i < closure.size(); ++i)
    for (StateId t : a.successors(closure[i], zero))
      if (!in_closure[t]) {
        in_closure[t] = true;
        closure.push_back(t);
      }
  Automaton out(a.alphabet(), a.order());
  for (StateId s = 0; s < a.num_states(); ++s) out.add_state(a.is_accepting(s));
  for (StateId s = 0; s < a.num_states(); ++s)
    for (Symbol x = 0; x < a.alphabet().size(); ++x)
      for (StateId t : a.successors(s, x)) out.add_transition(s, x, t);
  bool start_accepts = std::any_of(closure.begin(), closure.end(), [&](StateId s) { return a.is_accepting(s); });
  StateId start = out.add_state(start_accepts);
  out.add_initial(start);
  for (StateId q : closure)
    for (Symbol x = 0; x < a.alphabet().size(); ++x) {
      if (x == zero) continue;
      for (StateId t : a.successors(q, x)) out.add_transition(start, x, t);
    }
  return trim(out);
}

Automaton pad_closure(const Automaton& a, Side side) {
  if (side == Side::Leading) return reverse(pad_closure(reverse(a), Side::Trailing));
  const Symbol zero = a.alphabet().zero();
  Automaton out = a;
  StateId tail = out.add_state(true);
  out.add_transition(tail, zero, tail);
  for (StateId s = 0; s < a.num_states(); ++s)
    if (a.is_accepting(s)) out.add_transition(s, zero, tail);
  return out;
}

Automaton project_language(const Automaton& a, int which) {
  if (a.alphabet().arity() != 2) throw Error(ErrorCode::InvalidArgument, "projection needs a pair alphabet");
  if (which != 1 && which != 2) throw Error(ErrorCode::InvalidArgument, "projection index must be 1 or 2");
  Alphabet digits(a.alphabet().base(), 1);
  Automaton out(digits, a.order());
  for (StateId s = 0; s < a.num_states(); ++s) out.add_state(a.is_accepting(s));
  for (StateId s : a.initial()) out.add_initial(s);
  for (StateId s = 0; s < a.num_states(); ++s)
    for (Symbol x = 0; x < a.alphabet().size(); ++x) {
      PairDigit p = a.alphabet().decode(x);
      for (StateId t : a.successors(s, x)) out.add_transition(s, which == 1 ? p.a : p.b, t);
    }
  return out;
}

void enumerate_pumping_candidates(const Automaton& a,
                                  const std::function<bool(const PumpingCandidate&)>& visit,
                                  const Limits& limits) {
  if (!a.is_deterministic())
    throw Error(ErrorCode::Precondition, "pumping candidates need a deterministic automaton");
  const std::size_t n = a.num_states();
  const Symbol sigma = a.alphabet().size();
  std::uint64_t produced = 0;
  bool stop = false;
  PumpingCandidate cand;

  // Cycles v from `anchor` with |v| <= budget.
  std::function<void(StateId, StateId, std::size_t)> cycles = [&](StateId anchor, StateId s, std::size_t budget) {
    if (budget == 0 || stop) return;
    for (Symbol x = 0; x < sigma && !stop; ++x) {
      const auto& succ = a.successors(s, x);
      if (succ.empty()) continue;
      cand.cycle.push_back(x);
      if (succ.front() == anchor) {
        if (++produced > limits.max_candidates)
          throw Error(ErrorCode::ResourceCap, "pumping candidate cap exceeded");
        if (!visit(cand)) stop = true;
      }
      cycles(anchor, succ.front(), budget - 1);
      cand.cycle.pop_back();
    }
  };
  std::function<void(StateId)> stems = [&](StateId s) {
    if (stop) return;
    limits.check_cancel();
    cand.cycle.clear();
    cycles(s, s, n - cand.stem.size());
    if (cand.stem.size() + 1 >= n) return;
    for (Symbol x = 0; x < sigma && !stop; ++x) {
      const auto& succ = a.successors(s, x);
      if (succ.empty()) continue;
      cand.stem.push_back(x);
      stems(succ.front());
      cand.stem.pop_back();
    }
  };
  stems(a.initial().front());
}

void enumerate_words(const Automaton& a, std::size_t max_len,
                     const std::function<void(const std::vector<Symbol>&)>& visit, const Limits& limits) {
  if (!a.is_deterministic()) throw Error(ErrorCode::Precondition, "word enumeration needs a deterministic automaton");
  auto dist = distance_to_accept(a);
  std::vector<Symbol> word;
  std::uint64_t nodes = 0;
  const Symbol sigma = a.alphabet().size();
  std::function<void(StateId)> walk = [&](StateId s) {
    if (++nodes > limits.max_nodes) throw Error(ErrorCode::ResourceCap, "enumeration node cap exceeded");
    if ((nodes & 0xfff) == 0) limits.check_cancel();
    if (a.is_accepting(s)) visit(word);
    if (word.size() == max_len) return;
    for (Symbol x = 0; x < sigma; ++x) {
      const auto& succ = a.successors(s, x);
      if (succ.empty() || dist[succ.front()] == SIZE_MAX) continue;
      if (dist[succ.front()] + word.size() + 1 > max_len) continue;
      word.push_back(x);
      walk(succ.front());
      word.pop_back();
    }
  };
  StateId start = a.initial().front();
  if (dist[start] != SIZE_MAX && dist[start] <= max_len) walk(start);
}

std::vector<Symbol> to_symbols(const Alphabet& alphabet, const PairWord& w) {
  std::vector<Symbol> out;
  out.reserve(w.size());
  for (auto p : w.digits()) out.push_back(alphabet.encode(p));
  return out;
}

std::vector<Symbol> to_symbols(const Alphabet& alphabet, const Word& w) {
  std::vector<Symbol> out;
  out.reserve(w.size());
  for (Digit d : w.digits()) out.push_back(alphabet.encode({d, 0}));
  return out;
}

PairWord to_pair_word(const Alphabet& alphabet, Order order, const std::vector<Symbol>& symbols) {
  std::vector<PairDigit> d;
  d.reserve(symbols.size());
  for (Symbol s : symbols) d.push_back(alphabet.decode(s));
  return PairWord(alphabet.base(), order, std::move(d));
}

Word to_word(const Alphabet& alphabet, Order order, const std::vector<Symbol>& symbols) {
  std::vector<Digit> d;
  d.reserve(symbols.size());
  for (Symbol s : symbols) d.push_back(alphabet.decode(s).a);
  return Word(alphabet.base(), order, std::move(d));
}

Automaton from_words(const Alphabet& alphabet, Order order, const std::vector<std::vector<Symbol>>& words) {
  Automaton out(alphabet, order);
  StateId root = out.add_state(false);
  out.add_initial(root);
  std::map<std::pair<StateId, Symbol>, StateId> trie;
  for (const auto& w : words) {
    StateId s = root;
    for (Symbol x : w) {
      auto it = trie.find({s, x});
      if (it == trie.end()) {
        StateId t = out.add_state(false);
        out.add_transition(s, x, t);
        it = trie.emplace(std::make_pair(s, x), t).first;
      }
      s = it->second;
    }
    out.set_accepting(s);
  }
  return out;
}

Automaton universal(const Alphabet& alphabet, Order order) {
  Automaton out(alphabet, order);
  StateId s = out.add_state(true);
  out.add_initial(s);
  for (Symbol x = 0; x < alphabet.size(); ++x) out.add_transition(s, x, s);
  return out;
}

}  // namespace ratset
