/* qopin: a workbench for quasi order augmentations and pinning properties.
 *
 * C interface to the shared library.  Objects are opaque handles created
 * and destroyed through these functions; every fallible call returns a
 * qop_status, with qop_last_error() holding a human-readable message for
 * the most recent failure on the calling thread.  Strings returned through
 * char** are heap-allocated; release them with qop_string_free().
 */
#ifndef QOPIN_H
#define QOPIN_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qop_status {
  QOP_OK = 0,
  QOP_ERR_PARSE = 1,
  QOP_ERR_PRECONDITION = 2,
  QOP_ERR_CARRIER = 3,
  QOP_ERR_GUARD = 4,
  QOP_ERR_RANGE = 5,
  QOP_ERR_UNKNOWN_ID = 6,
  QOP_ERR_BAD_ARGUMENT = 7
} qop_status;

const char* qop_status_name(qop_status status);
const char* qop_last_error(void);
void qop_string_free(char* text);

typedef struct qop_relation qop_relation;
typedef struct qop_family qop_family;
typedef struct qop_upseq qop_upseq;

/* relations ---------------------------------------------------------- */

qop_status qop_relation_parse(const char* text, qop_relation** out);
qop_status qop_relation_make(int carrier, const int* pairs, int pair_count,
                             int reflexive_closure, qop_relation** out);
qop_status qop_relation_serialize(const qop_relation* relation, char** out);
void qop_relation_free(qop_relation* relation);
int qop_relation_size(const qop_relation* relation);
int qop_relation_le(const qop_relation* relation, int p, int q);

typedef struct qop_props {
  int reflexive;
  int transitive;
  int antisymmetric;
  int linear;
  int complete;
  int quasi_order;
  int poset;
} qop_props;

qop_status qop_relation_classify(const qop_relation* relation, qop_props* out);

/* families ------------------------------------------------------------ */

/* carrier < 0 infers the carrier from the text (it must be nonempty). */
qop_status qop_family_parse(const char* text, int carrier, qop_family** out);
qop_status qop_family_serialize(const qop_family* family, char** out);
void qop_family_free(qop_family* family);
int qop_family_size(const qop_family* family);
qop_status qop_family_endomorphisms(const qop_relation* relation, int guard,
                                    qop_family** out);

/* operators ------------------------------------------------------------ */

/* kind: linear, strict-linear, strictive, strictive-transitive,
 * corrective, negative-strictive, plus the parameter-free separative,
 * antisymmetric and transitive.  upsilon/theta may be NULL for the
 * parameter-free kinds and default to empty families otherwise. */
qop_status qop_relation_augment(const qop_relation* relation, const char* kind,
                                const qop_family* upsilon,
                                const qop_family* theta, qop_relation** out);

/* prop: linear, strict-linear, strict, correct, neg-strict. */
qop_status qop_check_property(const qop_relation* relation, const char* prop,
                              const qop_family* upsilon,
                              const qop_family* theta, int* holds,
                              char** certificate);

/* sequences ------------------------------------------------------------ */

qop_status qop_upseq_parse(const char* text, qop_upseq** out);
qop_status qop_upseq_serialize(const qop_upseq* sequence, char** out);
void qop_upseq_free(qop_upseq* sequence);

typedef struct qop_compare_flags {
  int eq;
  int le;
  int lt;
  int ge;
  int gt;
  int le_star;
  int lt_star;
  int ge_star;
  int gt_star;
  int eq_star;
  int ll_star;
  int gg_star;
} qop_compare_flags;

qop_status qop_upseq_compare(const qop_upseq* x, const qop_upseq* y,
                             qop_compare_flags* out);
qop_status qop_closed_form(const char* form, const qop_upseq* x,
                           const qop_upseq* y, int* holds);
qop_status qop_baire_demo(const char* demo, char** out_text);

/* suites ---------------------------------------------------------------- */

qop_status qop_verify(int max_n, uint64_t seed, uint64_t budget, char** report,
                      int64_t* violations);
qop_status qop_search(int max_n, uint64_t seed, uint64_t budget, char** report,
                      int64_t* symbolic_failures);
qop_status qop_figure1(int max_n, uint64_t seed, uint64_t budget, char** dot);

#ifdef __cplusplus
}
#endif

#endif /* QOPIN_H */
