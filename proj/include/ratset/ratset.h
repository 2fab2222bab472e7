#ifndef RATSET_RATSET_H
#define RATSET_RATSET_H

#include <stddef.h>
#include <stdint.h>

#if defined(RATSET_BUILDING) && defined(__GNUC__)
#define RATSET_API __attribute__((visibility("default")))
#else
#define RATSET_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ratset_automaton ratset_automaton;
typedef struct ratset_verdict ratset_verdict;

typedef enum {
  RATSET_OK = 0,
  RATSET_INVALID_ARGUMENT,
  RATSET_UNDEFINED_QUOTIENT,
  RATSET_ALPHABET_MISMATCH,
  RATSET_PARSE,
  RATSET_PRECONDITION,
  RATSET_RESOURCE_CAP,
  RATSET_CANCELLED,
  RATSET_IO,
  RATSET_INTERNAL
} ratset_status;

typedef struct {
  uint64_t max_candidates;
  uint64_t max_nodes;
} ratset_limits;

/* Message of the last failed call on this thread; never NULL. */
RATSET_API const char* ratset_last_error(void);

/* Strings returned through char** are owned by the caller. */
RATSET_API void ratset_string_free(char* s);

RATSET_API ratset_status ratset_parse(const char* text, ratset_automaton** out);
RATSET_API ratset_status ratset_load(const char* path, ratset_automaton** out);
RATSET_API ratset_status ratset_save(const ratset_automaton* a, const char* path);
RATSET_API ratset_status ratset_to_text(const ratset_automaton* a, char** out);
RATSET_API ratset_status ratset_to_dot(const ratset_automaton* a, char** out);
RATSET_API void ratset_free(ratset_automaton* a);

RATSET_API int ratset_base(const ratset_automaton* a);
RATSET_API int ratset_arity(const ratset_automaton* a);
RATSET_API size_t ratset_num_states(const ratset_automaton* a);
/* 1 if equal, 0 if not, -1 on error (alphabets differ). */
RATSET_API int ratset_language_equal(const ratset_automaton* a, const ratset_automaton* b);

/* rel: lt le eq ge gt ne; beta: "p/q" or "p". */
RATSET_API ratset_status ratset_compare(int k, const char* beta, const char* rel,
                             ratset_automaton** out);

/* op: add sub subfrom scale recip union. `alpha` is ignored by recip and
   union; `b` is only read by union. */
RATSET_API ratset_status ratset_arith(const char* op, const char* alpha,
                           const ratset_automaton* a,
                           const ratset_automaton* b, ratset_automaton** out);

/* Newline-separated entry names. */
RATSET_API ratset_status ratset_gallery_names(char** out);
/* k = 0 keeps the entry's default base. `description` may be NULL. */
RATSET_API ratset_status ratset_gallery(const char* name, int k, ratset_automaton** out,
                             char** description);

/* Text table "value<TAB>count<TAB>shortest" sorted by value, or a single
   verdict line when `value` is non-NULL. `limits` may be NULL. */
RATSET_API ratset_status ratset_oracle(const ratset_automaton* a, size_t max_len,
                            const char* value, const ratset_limits* limits,
                            char** out);

/* query: infinite member subset-nat subset equal accpoint sup inf smallrep.
   `x` is needed by member, accpoint and smallrep; `nat` by subset and
   equal. `limits` may be NULL. */
RATSET_API ratset_status ratset_decide(const char* query, const ratset_automaton* a,
                            const char* x, const ratset_automaton* nat,
                            const ratset_limits* limits, ratset_verdict** out);
RATSET_API int ratset_verdict_holds(const ratset_verdict* v);
/* Report text; the first line is "verdict: ...". */
RATSET_API const char* ratset_verdict_text(const ratset_verdict* v);
/* Automaton produced by the query (M2 of subset-nat), or NULL. */
RATSET_API const ratset_automaton* ratset_verdict_automaton(const ratset_verdict* v);
RATSET_API void ratset_verdict_free(ratset_verdict* v);

#ifdef __cplusplus
}
#endif

#endif /* RATSET_RATSET_H */
