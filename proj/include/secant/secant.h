#ifndef SECANT_SECANT_H
#define SECANT_SECANT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define SECANT_API __attribute__((visibility("default")))
#else
#define SECANT_API
#endif

typedef struct secant_problem secant_problem;

typedef enum secant_status {
  SECANT_OK = 0,             /* mathematical success */
  SECANT_NEGATIVE = 1,       /* mathematical failure: not regular, not finite, rejected certificate */
  SECANT_INPUT_ERROR = 2,    /* syntax, unknown ring, bad coefficient, missing role */
  SECANT_INTERNAL_ERROR = 3
} secant_status;

typedef struct secant_options {
  const char* order;               /* "lex", "grevlex" or NULL for the problem's choice */
  const char* const* ideals;       /* base ring elements, one ideal each */
  size_t ideal_count;
  int max_degree;                  /* negative: problem value or 4 */
  int grade;                       /* negative: problem value or sequence length */
} secant_options;

SECANT_API void secant_options_init(secant_options* options);

/* Parses the line-oriented problem format. */
SECANT_API secant_status secant_problem_parse(const char* text, secant_problem** out);
SECANT_API void secant_problem_free(secant_problem* problem);
/* Canonical text; reparses to an equal problem. */
SECANT_API secant_status secant_problem_to_text(const secant_problem* problem, char** out);

/* Runs one of: check-regular, syzygies, koszul, usc, grade, secant,
   annihilators, jacobian, rewrite, inclusion, certify. `json` receives the
   result document (NULL on input errors); `explain` a one line verdict
   followed by details. Either output pointer may be NULL. */
SECANT_API secant_status secant_run(const secant_problem* problem, const char* command,
                                    const secant_options* options, char** json, char** explain);

/* Re-checks a flatcert/1 certificate. */
SECANT_API secant_status secant_verify(const char* certificate_json, char** json, char** explain);

/* Message for the last failing call on this thread. */
SECANT_API const char* secant_last_error(void);
SECANT_API void secant_free_string(char* s);
SECANT_API const char* secant_version(void);

#ifdef __cplusplus
}
#endif

#endif
