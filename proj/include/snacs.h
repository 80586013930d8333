/* snacs — corpus toolkit and sequence tagger for adposition/case supersense
 * (SNACS) data in CoNLL-U-Lex format.
 *
 * C API: opaque handles plus integer status codes. Every function returns
 * SNACS_OK (0) on success; on failure snacs_last_error() describes the
 * problem for the calling thread. Strings returned through char** out
 * parameters are heap-allocated; release them with snacs_string_free().
 */
#ifndef SNACS_H
#define SNACS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define SNACS_OK 0
#define SNACS_ERR_INPUT 1    /* bad arguments, malformed files, parse errors */
#define SNACS_ERR_INTERNAL 2 /* unexpected internal failure */

typedef struct snacs_inventory snacs_inventory;
typedef struct snacs_corpus snacs_corpus;
typedef struct snacs_split snacs_split;
typedef struct snacs_baseline snacs_baseline;
typedef struct snacs_crf snacs_crf;

typedef struct snacs_crf_params {
  double learning_rate; /* default 0.001 */
  double l2;            /* default 1e-4 */
  int64_t epochs;       /* default 30 */
  int64_t batch_size;   /* default 16 */
  uint64_t seed;        /* default 42 */
} snacs_crf_params;

const char* snacs_version(void);
/* Most recent error message on this thread; empty string when none. */
const char* snacs_last_error(void);
void snacs_string_free(char* s);

/* ---- label inventory ------------------------------------------------- */
int snacs_inventory_builtin(snacs_inventory** out);
int snacs_inventory_load(const char* path, snacs_inventory** out);
int snacs_inventory_parse(const char* config_text, snacs_inventory** out);
/* The builtin inventory config text (schema "format: 1"). Static string. */
const char* snacs_inventory_builtin_text(void);
void snacs_inventory_free(snacs_inventory* inv);

/* ---- corpus ----------------------------------------------------------- */
/* strict != 0: fail on the first malformed line. strict == 0: collect
 * diagnostics (retrievable via snacs_corpus_validate). */
int snacs_corpus_parse_file(const snacs_inventory* inv, const char* path, int strict,
                            snacs_corpus** out);
int snacs_corpus_parse_text(const snacs_inventory* inv, const char* text, int strict,
                            snacs_corpus** out);
int snacs_corpus_write(const snacs_corpus* corpus, char** out);
int64_t snacs_corpus_sentences(const snacs_corpus* corpus);
int64_t snacs_corpus_tokens(const snacs_corpus* corpus);
int64_t snacs_corpus_targets(const snacs_corpus* corpus);
void snacs_corpus_free(snacs_corpus* corpus);

/* Structural invariant check. *n_diagnostics receives the count; out
 * receives the rendered report ("text" or "records" format). */
int snacs_corpus_validate(const snacs_corpus* corpus, const char* format, char** out,
                          int64_t* n_diagnostics);

/* ---- statistics -------------------------------------------------------- */
int snacs_stats_summary(const snacs_corpus* corpus, const char* format, char** out);
/* klass: "case" | "emphatic" | "adposition" | NULL (all targets).
 * dimension: "scene" | "function" | "construal" | "lemma". */
int snacs_label_distribution(const snacs_corpus* corpus, const char* klass,
                             const char* dimension, const char* format, char** out);
/* dimension as above (no "lemma"); estimator: "chao-shen" | "shannon". */
int snacs_entropy_table(const snacs_corpus* corpus, const char* dimension, int64_t min_n,
                        int include_specials, const char* estimator, const char* format,
                        char** out);

/* ---- inter-annotator agreement ----------------------------------------- */
int snacs_agreement(const snacs_corpus* a, const snacs_corpus* b, int64_t min_n,
                    const char* format, char** out);

/* ---- BIO codec ---------------------------------------------------------- */
/* Gold BIO tags in the interchange format: FORM<TAB>TAG lines, one blank
 * line between sentences; the B tag carries the label of the chosen
 * dimension. */
int snacs_bio_encode(const snacs_corpus* corpus, const char* dimension, char** out);
/* Decodes interchange text back to labeled spans (with repair counts). */
int snacs_bio_decode(const char* tagged_text, const char* format, char** out);

/* ---- data splitting ------------------------------------------------------ */
int snacs_split_corpus(const snacs_corpus* corpus, double train, double dev, double test,
                       uint64_t seed, snacs_split** out);
int snacs_split_render(const snacs_split* split, const char* format, char** out);
int snacs_corpus_subset(const snacs_corpus* corpus, const snacs_split* split,
                        const char* bucket, snacs_corpus** out);
void snacs_split_free(snacs_split* split);

/* ---- most-frequent-tag baseline ------------------------------------------ */
int snacs_baseline_train(const snacs_corpus* train, const char* dimension,
                         snacs_baseline** out);
int snacs_baseline_save(const snacs_baseline* model, const char* path);
int snacs_baseline_load(const char* path, snacs_baseline** out);
/* targets_known != 0 keeps gold spans and predicts labels only; otherwise
 * spans come from longest lexicon match. Output is interchange text. */
int snacs_baseline_tag(const snacs_baseline* model, const snacs_corpus* corpus,
                       int targets_known, char** out);
void snacs_baseline_free(snacs_baseline* model);

/* ---- linear-chain CRF tagger ---------------------------------------------- */
/* params may be NULL for defaults. Per-epoch progress lines go to stderr
 * unless quiet != 0. */
int snacs_crf_train(const snacs_corpus* train, const snacs_corpus* dev,
                    const char* dimension, const snacs_crf_params* params, int quiet,
                    snacs_crf** out);
int snacs_crf_save(const snacs_crf* model, const char* path);
int snacs_crf_load(const char* path, snacs_crf** out);
int snacs_crf_tag(const snacs_crf* model, const snacs_corpus* corpus, char** out);
void snacs_crf_free(snacs_crf* model);

/* ---- evaluation ------------------------------------------------------------ */
/* gold and pred are interchange text; scores strict B-position matches in
 * the chosen dimension, micro-averaged. */
int snacs_evaluate(const char* gold_tagged, const char* pred_tagged, const char* dimension,
                   const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SNACS_H */
