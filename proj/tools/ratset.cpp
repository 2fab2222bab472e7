// ratset command-line front end; talks to the library only through ratset.h.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ratset/ratset.h"

namespace {

enum Exit { kHolds = 0, kNotHolds = 1, kBadInput = 2, kCap = 3 };

struct Failure {
  ratset_status status;
};

void check(ratset_status s) {
  if (s != RATSET_OK) throw Failure{s};
}

struct Handle {
  ratset_automaton* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { ratset_free(p); }
};

struct Text {
  char* p = nullptr;
  Text() = default;
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  ~Text() { ratset_string_free(p); }
};

void load(const std::string& path, Handle& h) { check(ratset_load(path.c_str(), &h.p)); }

void write_dot(const ratset_automaton* a, const std::string& path) {
  if (path.empty() || !a) return;
  Text dot;
  check(ratset_to_dot(a, &dot.p));
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) {
    std::cerr << "error: cannot write " << path << "\n";
    throw Failure{RATSET_IO};
  }
  std::fputs(dot.p, f);
  std::fclose(f);
}

// Writes to `path`, or prints the automaton when no path was given.
void emit(const ratset_automaton* a, const std::string& path) {
  if (path.empty()) {
    Text t;
    check(ratset_to_text(a, &t.p));
    std::cout << t.p;
    return;
  }
  check(ratset_save(a, path.c_str()));
  std::cout << "wrote " << path << "\n";
}

ratset_limits limits_from(std::optional<std::uint64_t> cap) {
  ratset_limits l{0, 0};
  if (cap) l.max_candidates = l.max_nodes = *cap;
  return l;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automatic sets of rationals: build, transform, decide"};
  app.require_subcommand(1);
  std::string dot_path;

  // compare
  auto* compare = app.add_subcommand("compare", "comparison automaton L_{rel beta}");
  int k = 2;
  std::string beta, rel, out;
  compare->add_option("--k", k, "base")->required();
  compare->add_option("--beta", beta, "p/q")->required();
  compare->add_option("--rel", rel, "lt|le|eq|ge|gt|ne")->required();
  compare->add_option("--out", out, "output automaton file");
  compare->add_option("--dot", dot_path, "DOT rendering of the result");

  // arith
  auto* arith = app.add_subcommand("arith", "closure operations on quotient sets");
  std::string op, alpha, in, in2;
  arith->add_option("--op", op, "add|sub|subfrom|scale|recip|union")->required();
  arith->add_option("--alpha", alpha, "p/q");
  arith->add_option("--in", in, "input automaton")->required();
  arith->add_option("--in2", in2, "second automaton (union)");
  arith->add_option("--out", out, "output automaton file");
  arith->add_option("--dot", dot_path, "DOT rendering of the result");

  // decide
  auto* decide = app.add_subcommand("decide", "decision procedures");
  std::string query, x, nat;
  std::optional<std::uint64_t> cap;
  decide->add_option("query", query, "infinite|member|subset-nat|subset|equal|accpoint|sup|inf|smallrep")
      ->required()
      ->check(CLI::IsMember({"infinite", "member", "subset-nat", "subset", "equal", "accpoint", "sup", "inf",
                             "smallrep"}));
  decide->add_option("--in", in, "input automaton")->required();
  decide->add_option("--x", x, "p/q");
  decide->add_option("--nat", nat, "arity-1 automaton of naturals");
  decide->add_option("--cap", cap, "cap on candidates and search nodes");
  decide->add_option("--out", out, "where subset-nat writes M2 (default <in>.m2.aut)");
  decide->add_option("--dot", dot_path, "DOT rendering of the result");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "brute-force quotient enumeration");
  std::size_t max_len = 0;
  std::optional<std::string> value;
  oracle->add_option("--in", in, "input automaton")->required();
  oracle->add_option("--maxlen", max_len, "maximum word length")->required();
  oracle->add_option("--value", value, "p/q");
  oracle->add_option("--cap", cap, "cap on search nodes");
  oracle->add_option("--dot", dot_path, "DOT rendering of the input");

  // gallery
  auto* gallery = app.add_subcommand("gallery", "example languages");
  std::string name;
  bool list = false;
  int gallery_k = 0;
  gallery->add_flag("--list", list, "list entry names");
  gallery->add_option("--name", name, "entry name");
  gallery->add_option("--k", gallery_k, "base override for base-generic entries");
  gallery->add_option("--out", out, "output automaton file");
  gallery->add_option("--dot", dot_path, "DOT rendering of the result");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*compare) {
      Handle result;
      check(ratset_compare(k, beta.c_str(), rel.c_str(), &result.p));
      emit(result.p, out);
      write_dot(result.p, dot_path);
      return kHolds;
    }
    if (*arith) {
      Handle a, b, result;
      load(in, a);
      if (!in2.empty()) load(in2, b);
      check(ratset_arith(op.c_str(), alpha.empty() ? nullptr : alpha.c_str(), a.p, b.p, &result.p));
      emit(result.p, out);
      write_dot(result.p, dot_path);
      return kHolds;
    }
    if (*decide) {
      Handle a, n;
      load(in, a);
      if (!nat.empty()) load(nat, n);
      ratset_limits lim = limits_from(cap);
      ratset_verdict* v = nullptr;
      check(ratset_decide(query.c_str(), a.p, x.empty() ? nullptr : x.c_str(), n.p, &lim, &v));
      std::cout << ratset_verdict_text(v);
      const ratset_automaton* m2 = ratset_verdict_automaton(v);
      int code = ratset_verdict_holds(v) ? kHolds : kNotHolds;
      try {
        if (m2) {
          std::string path = out.empty() ? in + ".m2.aut" : out;
          check(ratset_save(m2, path.c_str()));
          std::cout << "m2: " << path << "\n";
        }
        write_dot(m2 ? m2 : a.p, dot_path);
      } catch (...) {
        ratset_verdict_free(v);
        throw;
      }
      ratset_verdict_free(v);
      return code;
    }
    if (*oracle) {
      Handle a;
      load(in, a);
      ratset_limits lim = limits_from(cap);
      Text report;
      check(ratset_oracle(a.p, max_len, value ? value->c_str() : nullptr, &lim, &report.p));
      std::cout << report.p;
      write_dot(a.p, dot_path);
      if (value) return std::string(report.p).rfind("verdict: yes", 0) == 0 ? kHolds : kNotHolds;
      return kHolds;
    }
    if (*gallery) {
      if (list) {
        Text names;
        check(ratset_gallery_names(&names.p));
        std::cout << names.p;
        return kHolds;
      }
      if (name.empty()) {
        std::cerr << "error: gallery needs --name or --list\n";
        return kBadInput;
      }
      Handle result;
      check(ratset_gallery(name.c_str(), gallery_k, &result.p, nullptr));
      emit(result.p, out);
      write_dot(result.p, dot_path);
      return kHolds;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << ratset_last_error() << "\n";
    return f.status == RATSET_RESOURCE_CAP || f.status == RATSET_CANCELLED ? kCap : kBadInput;
  }
  return kBadInput;
}
