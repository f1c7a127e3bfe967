#ifndef REVCCS_H
#define REVCCS_H

/* C interface to the revccs library. Every function returns a status code;
   details of the last failure on the calling thread are available through
   revccs_last_error(). Strings handed out by the library are released with
   revccs_string_free(). */

#include <stddef.h>

#if defined(_WIN32)
#define REVCCS_API __declspec(dllexport)
#else
#define REVCCS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum revccs_status {
  REVCCS_OK = 0,
  REVCCS_ERR_SYNTAX,
  REVCCS_ERR_ARITY,
  REVCCS_ERR_INCOHERENT,
  REVCCS_ERR_NOT_A_CONFIGURATION,
  REVCCS_ERR_NO_MATCHING_EVENT,
  REVCCS_ERR_AMBIGUOUS_EVENT,
  REVCCS_ERR_BOUND_EXCEEDED,
  REVCCS_ERR_PRECONDITION,
  REVCCS_ERR_CORRESPONDENCE,
  REVCCS_ERR_CAPACITY,
  REVCCS_ERR_INVALID_ARGUMENT,
  REVCCS_ERR_INTERNAL
} revccs_status;

typedef enum revccs_format { REVCCS_FORMAT_JSON = 0, REVCCS_FORMAT_DOT, REVCCS_FORMAT_TEXT } revccs_format;

typedef enum revccs_check_kind {
  REVCCS_CHECK_HHPB = 0,
  REVCCS_CHECK_BFBARB,
  REVCCS_CHECK_STRONG
} revccs_check_kind;

typedef struct revccs_options {
  int par_collapse;     /* nonzero: collapse merges identical prefixed parallel components */
  size_t max_events;    /* combined event bound for the brute-force cross-check */
  size_t max_context;   /* parallel components in a synthesized context */
} revccs_options;

typedef struct revccs_term revccs_term;
typedef struct revccs_structure revccs_structure;

REVCCS_API void revccs_default_options(revccs_options* options);

REVCCS_API const char* revccs_last_error(void);
REVCCS_API const char* revccs_status_name(revccs_status status);
REVCCS_API void revccs_string_free(char* s);

REVCCS_API revccs_status revccs_parse(const char* text, revccs_term** out);
REVCCS_API void revccs_term_free(revccs_term* term);
REVCCS_API revccs_status revccs_term_print(const revccs_term* term, char** out);
REVCCS_API revccs_status revccs_term_dump(const revccs_term* term, char** out);

/* Validates the encoding preconditions first (REVCCS_ERR_PRECONDITION). */
REVCCS_API revccs_status revccs_encode(const revccs_term* term, const revccs_options* options,
                                       revccs_structure** out);
REVCCS_API void revccs_structure_free(revccs_structure* structure);
REVCCS_API size_t revccs_structure_event_count(const revccs_structure* structure);
REVCCS_API size_t revccs_structure_config_count(const revccs_structure* structure);
REVCCS_API revccs_status revccs_structure_export(const revccs_structure* structure,
                                                 revccs_format format, char** out);

/* Replays a step script from the lifted term; one block per state. */
REVCCS_API revccs_status revccs_step(const revccs_term* term, const char* script,
                                     const revccs_options* options, revccs_format format,
                                     char** out);

/* Reachable forward/backward state graph in DOT. */
REVCCS_API revccs_status revccs_state_graph(const revccs_term* term, char** out);

/* *related receives 1 or 0; *verdict (optional) the verdict JSON. */
REVCCS_API revccs_status revccs_check(revccs_check_kind kind, const revccs_term* p1,
                                      const revccs_term* p2, const revccs_options* options,
                                      int* related, char** verdict);

/* *context receives the printed context, *transcript (optional) the
   verification transcript, one line per candidate. */
REVCCS_API revccs_status revccs_discriminate(const revccs_term* p1, const revccs_term* p2,
                                             const revccs_options* options, char** context,
                                             char** transcript);

/* Congruence probe over the generated family plus `extra_contexts` (one
   context per line, may be NULL). *consistent receives 1 or 0. */
REVCCS_API revccs_status revccs_congruence(const revccs_term* p1, const revccs_term* p2,
                                           const char* extra_contexts, int* consistent,
                                           char** report);

#ifdef __cplusplus
}
#endif

#endif
