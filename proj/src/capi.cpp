#include "ratset/ratset.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "ratset/arith.hpp"
#include "ratset/compare.hpp"
#include "ratset/decide.hpp"
#include "ratset/gallery.hpp"
#include "ratset/oracle.hpp"
#include "ratset/serialize.hpp"

struct ratset_automaton {
  ratset::Automaton value;
};

struct ratset_verdict {
  bool holds = false;
  std::string text;
  ratset_automaton* automaton = nullptr;
};

namespace {

thread_local std::string last_error;

ratset_status status_of(ratset::ErrorCode code) {
  using ratset::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return RATSET_INVALID_ARGUMENT;
    case ErrorCode::UndefinedQuotient: return RATSET_UNDEFINED_QUOTIENT;
    case ErrorCode::AlphabetMismatch: return RATSET_ALPHABET_MISMATCH;
    case ErrorCode::Parse: return RATSET_PARSE;
    case ErrorCode::Precondition: return RATSET_PRECONDITION;
    case ErrorCode::ResourceCap: return RATSET_RESOURCE_CAP;
    case ErrorCode::Cancelled: return RATSET_CANCELLED;
    case ErrorCode::Io: return RATSET_IO;
  }
  return RATSET_INTERNAL;
}

template <class F>
ratset_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return RATSET_OK;
  } catch (const ratset::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return RATSET_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const char* need(const char* s, const char* what) {
  if (!s) throw ratset::Error(ratset::ErrorCode::InvalidArgument, std::string(what) + " is required");
  return s;
}

const ratset::Automaton& need(const ratset_automaton* a, const char* what) {
  if (!a) throw ratset::Error(ratset::ErrorCode::InvalidArgument, std::string(what) + " is required");
  return a->value;
}

ratset::Limits to_limits(const ratset_limits* l) {
  ratset::Limits out;
  if (l) {
    if (l->max_candidates) out.max_candidates = l->max_candidates;
    if (l->max_nodes) out.max_nodes = l->max_nodes;
  }
  return out;
}

ratset_automaton* wrap(ratset::Automaton a) { return new ratset_automaton{std::move(a)}; }

std::string yes_no(bool b) { return b ? "verdict: yes" : "verdict: no"; }

void describe_witness(std::ostringstream& os, const ratset::PairWord& w) {
  os << "\nwitness: " << w.to_string() << "\nquotient: " << ratset::quo(w);
}

}  // namespace

extern "C" {

const char* ratset_last_error(void) { return last_error.c_str(); }

void ratset_string_free(char* s) { std::free(s); }

ratset_status ratset_parse(const char* text, ratset_automaton** out) {
  return guarded([&] { *out = wrap(ratset::parse_text(need(text, "text"))); });
}

ratset_status ratset_load(const char* path, ratset_automaton** out) {
  return guarded([&] { *out = wrap(ratset::load_automaton(need(path, "path"))); });
}

ratset_status ratset_save(const ratset_automaton* a, const char* path) {
  return guarded([&] { ratset::save_automaton(need(a, "automaton"), need(path, "path")); });
}

ratset_status ratset_to_text(const ratset_automaton* a, char** out) {
  return guarded([&] { *out = dup(ratset::to_text(need(a, "automaton"))); });
}

ratset_status ratset_to_dot(const ratset_automaton* a, char** out) {
  return guarded([&] { *out = dup(ratset::to_dot(need(a, "automaton"))); });
}

void ratset_free(ratset_automaton* a) { delete a; }

int ratset_base(const ratset_automaton* a) { return a ? a->value.alphabet().k() : 0; }
int ratset_arity(const ratset_automaton* a) { return a ? a->value.alphabet().arity() : 0; }
size_t ratset_num_states(const ratset_automaton* a) { return a ? a->value.num_states() : 0; }

int ratset_language_equal(const ratset_automaton* a, const ratset_automaton* b) {
  int result = -1;
  guarded([&] {
    const auto& x = need(a, "automaton");
    result = ratset::language_equal(x, ratset::to_order(need(b, "automaton"), x.order())) ? 1 : 0;
  });
  return result;
}

ratset_status ratset_compare(int k, const char* beta, const char* rel, ratset_automaton** out) {
  return guarded([&] {
    *out = wrap(ratset::compare_automaton(ratset::Base(k), ratset::Rational::parse(need(beta, "beta")),
                                          ratset::parse_relation(need(rel, "relation"))));
  });
}

ratset_status ratset_arith(const char* op, const char* alpha, const ratset_automaton* a,
                           const ratset_automaton* b, ratset_automaton** out) {
  return guarded([&] {
    using ratset::ArithOp;
    const auto& in = need(a, "input automaton");
    ArithOp which = ratset::parse_arith_op(need(op, "op"));
    auto value = [&] { return ratset::Rational::parse(need(alpha, "alpha")); };
    switch (which) {
      case ArithOp::Add: *out = wrap(ratset::shift_add(in, value())); break;
      case ArithOp::Sub: *out = wrap(ratset::shift_sub(in, value())); break;
      case ArithOp::SubFrom: *out = wrap(ratset::sub_from(value(), in)); break;
      case ArithOp::Scale: *out = wrap(ratset::scale(in, value())); break;
      case ArithOp::Recip: *out = wrap(ratset::reciprocal(in)); break;
      case ArithOp::Union: *out = wrap(ratset::set_union(in, need(b, "second automaton"))); break;
    }
  });
}

ratset_status ratset_gallery_names(char** out) {
  return guarded([&] {
    std::string s;
    for (const auto& n : ratset::gallery_names()) s += n + "\n";
    *out = dup(s);
  });
}

ratset_status ratset_gallery(const char* name, int k, ratset_automaton** out, char** description) {
  return guarded([&] {
    ratset::GalleryEntry e = ratset::build_gallery(need(name, "name"), k);
    if (description) *description = dup(e.description);
    *out = wrap(std::move(e.automaton));
  });
}

ratset_status ratset_oracle(const ratset_automaton* a, size_t max_len, const char* value,
                            const ratset_limits* limits, char** out) {
  return guarded([&] {
    const auto& in = need(a, "automaton");
    std::ostringstream os;
    if (value) {
      ratset::Rational x = ratset::Rational::parse(value);
      auto answer = ratset::oracle_member(in, x, max_len, to_limits(limits));
      os << (answer == ratset::OracleAnswer::Yes ? "verdict: yes" : "verdict: no") << "\n";
    } else {
      ratset::EnumerationReport r = ratset::enumerate_quotients(in, max_len, to_limits(limits));
      os << "value\tcount\tshortest\n";
      for (const auto& [x, stats] : r.values) os << x << "\t" << stats.count << "\t" << stats.shortest << "\n";
    }
    *out = dup(os.str());
  });
}

ratset_status ratset_decide(const char* query, const ratset_automaton* a, const char* x,
                            const ratset_automaton* nat, const ratset_limits* limits,
                            ratset_verdict** out) {
  return guarded([&] {
    const ratset::Automaton& in = need(a, "automaton");
    const ratset::Limits lim = to_limits(limits);
    const std::string q = need(query, "query");
    auto value = [&] { return ratset::Rational::parse(need(x, "x")); };
    auto v = std::make_unique<ratset_verdict>();
    std::ostringstream os;

    if (q == "infinite") {
      auto f = ratset::is_quoset_infinite(in, lim);
      v->holds = f.infinite;
      if (f.infinite) {
        os << "verdict: infinite";
      } else {
        os << "verdict: finite\nvalues:";
        for (const auto& y : f.values) os << " " << y;
      }
    } else if (q == "member") {
      auto w = ratset::exists_rel(in, value(), ratset::Relation::Eq);
      v->holds = w.holds;
      os << yes_no(w.holds);
      if (w.witness) os << "\nwitness: " << w.witness->to_string();
    } else if (q == "subset-nat") {
      auto r = ratset::is_subset_of_naturals(in, lim);
      v->holds = r.yes;
      os << yes_no(r.yes);
      if (r.yes) {
        v->automaton = wrap(std::move(*r.naturals));
      } else {
        os << "\nstep: " << r.failed_step;
        if (r.witness) describe_witness(os, *r.witness);
      }
    } else if (q == "subset") {
      v->holds = ratset::quo_subset_of(in, need(nat, "naturals automaton"), lim);
      os << yes_no(v->holds);
    } else if (q == "equal") {
      v->holds = ratset::quo_equals(in, need(nat, "naturals automaton"), lim);
      os << yes_no(v->holds);
    } else if (q == "accpoint") {
      v->holds = ratset::is_accumulation_point(in, value(), lim);
      os << yes_no(v->holds);
    } else if (q == "sup" || q == "inf") {
      if (ratset::is_empty(ratset::canonical_form(in))) {
        v->holds = false;
        os << "verdict: no\nreason: empty quotient set";
      } else {
        v->holds = true;
        if (q == "sup") {
          auto s = ratset::sup_quoset(in, lim);
          os << "verdict: value " << (s ? s->to_string() : "inf");
        } else {
          os << "verdict: value " << ratset::inf_quoset(in, lim);
        }
      }
    } else if (q == "smallrep") {
      ratset::Rational target = value();
      auto w = ratset::find_small_representation(in, target);
      v->holds = w.has_value();
      os << yes_no(v->holds);
      if (w) {
        std::size_t n = ratset::minimize(ratset::to_order(in, ratset::Order::Msb)).num_states();
        os << "\nwitness: " << w->to_string() << "\nlength: " << w->size()
           << "\nbound: " << ratset::small_representation_bound(target, n);
      }
    } else {
      throw ratset::Error(ratset::ErrorCode::InvalidArgument, "unknown query: " + q);
    }
    v->text = os.str() + "\n";
    *out = v.release();
  });
}

int ratset_verdict_holds(const ratset_verdict* v) { return v && v->holds ? 1 : 0; }
const char* ratset_verdict_text(const ratset_verdict* v) { return v ? v->text.c_str() : ""; }
const ratset_automaton* ratset_verdict_automaton(const ratset_verdict* v) { return v ? v->automaton : nullptr; }

void ratset_verdict_free(ratset_verdict* v) {
  if (!v) return;
  delete v->automaton;
  delete v;
}

}  // extern "C"
