#include "ratset/serialize.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace ratset {

namespace {

// Single-start copy of `a`; a fresh start state takes the union of the
// initial states' outgoing transitions.
Automaton single_start(const Automaton& a) {
  if (a.initial().size() == 1) return a;
  Automaton out(a.alphabet(), a.order());
  for (StateId s = 0; s < a.num_states(); ++s) out.add_state(a.is_accepting(s));
  for (StateId s = 0; s < a.num_states(); ++s)
    for (Symbol x = 0; x < a.alphabet().size(); ++x)
      for (StateId t : a.successors(s, x)) out.add_transition(s, x, t);
  bool acc = false;
  for (StateId i : a.initial()) acc = acc || a.is_accepting(i);
  StateId start = out.add_state(acc);
  out.add_initial(start);
  for (StateId i : a.initial())
    for (Symbol x = 0; x < a.alphabet().size(); ++x)
      for (StateId t : a.successors(i, x)) out.add_transition(start, x, t);
  return out;
}

std::string symbol_text(const Alphabet& alphabet, Symbol x) {
  PairDigit p = alphabet.decode(x);
  if (alphabet.arity() == 1) return std::to_string(p.a);
  return std::to_string(p.a) + "," + std::to_string(p.b);
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + msg);
}

long long parse_int(std::string_view s, std::size_t line, const char* what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0)
    fail(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::string to_text(const Automaton& in) {
  Automaton a = in.initial().empty() ? [&] {
    Automaton e = in;
    e.add_initial(e.add_state(false));
    return e;
  }()
                                     : single_start(in);
  std::ostringstream os;
  os << "k=" << a.alphabet().k() << " arity=" << a.alphabet().arity() << " states=" << a.num_states()
     << " start=" << a.initial().front() << " order=" << to_string(a.order()) << "\n";
  os << "accept:";
  for (StateId s = 0; s < a.num_states(); ++s)
    if (a.is_accepting(s)) os << " " << s;
  os << "\n";
  for (StateId s = 0; s < a.num_states(); ++s)
    for (Symbol x = 0; x < a.alphabet().size(); ++x)
      for (StateId t : a.successors(s, x)) os << s << " " << symbol_text(a.alphabet(), x) << " " << t << "\n";
  return os.str();
}

Automaton parse_text(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  while (!lines.empty() && split_ws(lines.back()).empty()) lines.pop_back();
  if (lines.size() < 2) fail(lines.size() + 1, "expected header and accept lines");

  long long k = -1, arity = -1, states = -1, start = -1;
  std::string order;
  for (auto field : split_ws(lines[0])) {
    auto eq = field.find('=');
    if (eq == std::string_view::npos) fail(1, "expected key=value, got '" + std::string(field) + "'");
    auto key = field.substr(0, eq);
    auto val = field.substr(eq + 1);
    if (key == "k")
      k = parse_int(val, 1, "k");
    else if (key == "arity")
      arity = parse_int(val, 1, "arity");
    else if (key == "states")
      states = parse_int(val, 1, "states");
    else if (key == "start")
      start = parse_int(val, 1, "start");
    else if (key == "order")
      order = std::string(val);
    else
      fail(1, "unknown header field '" + std::string(key) + "'");
  }
  if (k < 2 || k > 255) fail(1, "k must be in [2, 255]");
  if (arity != 1 && arity != 2) fail(1, "arity must be 1 or 2");
  if (states < 1) fail(1, "states must be >= 1");
  if (start < 0 || start >= states) fail(1, "start state out of range");
  if (order != "msb" && order != "lsb") fail(1, "order must be msb or lsb");

  Alphabet alphabet(Base(static_cast<int>(k)), static_cast<int>(arity));
  Automaton a(alphabet, order == "msb" ? Order::Msb : Order::Lsb);
  for (long long s = 0; s < states; ++s) a.add_state(false);
  a.add_initial(static_cast<StateId>(start));

  auto acc_fields = split_ws(lines[1]);
  if (acc_fields.empty() || acc_fields[0] != "accept:") fail(2, "expected 'accept:'");
  for (std::size_t i = 1; i < acc_fields.size(); ++i) {
    long long s = parse_int(acc_fields[i], 2, "state id");
    if (s >= states) fail(2, "accepting state out of range");
    a.set_accepting(static_cast<StateId>(s));
  }

  for (std::size_t i = 2; i < lines.size(); ++i) {
    const std::size_t ln = i + 1;
    auto f = split_ws(lines[i]);
    if (f.empty()) continue;
    if (f.size() != 3) fail(ln, "expected '<src> <symbol> <dst>'");
    long long src = parse_int(f[0], ln, "source state");
    long long dst = parse_int(f[2], ln, "target state");
    if (src >= states || dst >= states) fail(ln, "state out of range");
    PairDigit d;
    if (arity == 1) {
      long long v = parse_int(f[1], ln, "digit");
      if (v >= k) fail(ln, "digit out of range");
      d.a = static_cast<Digit>(v);
    } else {
      auto comma = f[1].find(',');
      if (comma == std::string_view::npos) fail(ln, "expected pair symbol '<a>,<b>'");
      long long x = parse_int(f[1].substr(0, comma), ln, "digit");
      long long y = parse_int(f[1].substr(comma + 1), ln, "digit");
      if (x >= k || y >= k) fail(ln, "digit out of range");
      d = {static_cast<Digit>(x), static_cast<Digit>(y)};
    }
    a.add_transition(static_cast<StateId>(src), alphabet.encode(d), static_cast<StateId>(dst));
  }
  return a;
}

Automaton load_automaton(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_text(ss.str());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw Error(ErrorCode::Parse, path + ":" + e.what());
    throw;
  }
}

void save_automaton(const Automaton& a, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  out << to_text(a);
  if (!out) throw Error(ErrorCode::Io, "write failed for '" + path + "'");
}

std::string to_dot(const Automaton& a, std::string_view name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=LR;\n";
  os << "  label=\"k=" << a.alphabet().k() << " arity=" << a.alphabet().arity() << " order=" << to_string(a.order())
     << "\";\n";
  os << "  node [shape=circle];\n";
  for (StateId s = 0; s < a.num_states(); ++s)
    os << "  " << s << " [shape=" << (a.is_accepting(s) ? "doublecircle" : "circle") << "];\n";
  for (StateId s : a.initial()) {
    os << "  init" << s << " [shape=point];\n";
    os << "  init" << s << " -> " << s << ";\n";
  }
  // Parallel edges share one label.
  for (StateId s = 0; s < a.num_states(); ++s) {
    std::map<StateId, std::string> labels;
    for (Symbol x = 0; x < a.alphabet().size(); ++x)
      for (StateId t : a.successors(s, x)) {
        auto& l = labels[t];
        if (!l.empty()) l += " ";
        l += a.alphabet().arity() == 1 ? symbol_text(a.alphabet(), x) : "[" + symbol_text(a.alphabet(), x) + "]";
      }
    for (const auto& [t, l] : labels) os << "  " << s << " -> " << t << " [label=\"" << l << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ratset
