#ifndef DIFFSET_DIFFSET_H
#define DIFFSET_DIFFSET_H

/*
 * C interface to the diffset library.
 *
 * Every fallible function returns a dset_status. On failure a message is
 * available from dset_last_error() on the calling thread. Structured results
 * are returned as malloc'd UTF-8 JSON strings that the caller releases with
 * dset_string_free(). Handles are opaque and released with their _free function.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef DSET_BUILDING
#    define DSET_API __declspec(dllexport)
#  else
#    define DSET_API __declspec(dllimport)
#  endif
#else
#  define DSET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dset_status {
  DSET_OK = 0,
  DSET_E_INVALID = 1,  /* bad argument, malformed record, unknown name */
  DSET_E_PARSE = 2,    /* input is not valid JSON */
  DSET_E_DOMAIN = 3,   /* mathematical precondition failed, e.g. not a DS or not prime */
  DSET_E_ALLOC = 4,
  DSET_E_INTERNAL = 5
} dset_status;

typedef enum dset_kind { DSET_KIND_DS = 0, DSET_KIND_ADS = 1, DSET_KIND_NONE = 2 } dset_kind;

typedef enum dset_search_status {
  DSET_SEARCH_EXISTS = 0,
  DSET_SEARCH_DS_ONLY = 1,
  DSET_SEARCH_NONE = 2,
  DSET_SEARCH_TIMEOUT = 3
} dset_search_status;

typedef enum dset_search_mode { DSET_MODE_EXISTS = 0, DSET_MODE_COUNT = 1, DSET_MODE_ALL = 2 } dset_search_mode;

typedef enum dset_grid_format { DSET_GRID_JSON = 0, DSET_GRID_CSV = 1, DSET_GRID_TEXT = 2 } dset_grid_format;

typedef enum dset_reproduce_outcome {
  DSET_REPRODUCE_PASS = 0,
  DSET_REPRODUCE_MISMATCH = 1,
  DSET_REPRODUCE_TIMEOUT = 2
} dset_reproduce_outcome;

typedef struct dset_group dset_group;
typedef struct dset_subset dset_subset;

typedef struct dset_search_options {
  int mode;            /* dset_search_mode */
  uint64_t node_limit; /* 0 = unlimited */
  double seconds;      /* 0 = unlimited */
  unsigned jobs;       /* 0 = 1 */
  int canonical;       /* MGR: affine canonicity pruning */
  int prune;           /* ADS: feasibility pruning */
} dset_search_options;

typedef struct dset_grid_options {
  uint32_t v_min;
  uint32_t v_max;
  uint32_t k_min;
  uint32_t k_max;  /* 0 = v - 2 */
  int search_both_halves;
  dset_search_options search;
} dset_grid_options;

typedef struct dset_octic_options {
  uint64_t direct_limit;
  uint64_t full_limit;
} dset_octic_options;

typedef struct dset_reproduce_options {
  uint32_t kmax;
  int self_check;
  uint32_t vmax;
  uint64_t node_limit;
  double seconds;
  unsigned jobs;
} dset_reproduce_options;

DSET_API const char* dset_version(void);
/* Message for the last failure on this thread; empty after a success. */
DSET_API const char* dset_last_error(void);
DSET_API void dset_string_free(char* s);

DSET_API void dset_search_options_init(dset_search_options* options);
DSET_API void dset_grid_options_init(dset_grid_options* options);
DSET_API void dset_octic_options_init(dset_octic_options* options);
DSET_API void dset_reproduce_options_init(dset_reproduce_options* options);

/* Groups: Z_{n1} x ... x Z_{nr}, every n_i >= 2. */
DSET_API dset_status dset_group_create(const uint32_t* orders, size_t count, dset_group** out);
DSET_API void dset_group_free(dset_group* group);
DSET_API uint32_t dset_group_order(const dset_group* group);
DSET_API size_t dset_group_factor_count(const dset_group* group);

/* Subsets, addressed by mixed-radix element index or by coordinates. */
DSET_API dset_status dset_subset_create(const dset_group* group, const uint32_t* indices, size_t count,
                                        dset_subset** out);
/* `coords` holds count * factor_count reduced coordinates, element by element. */
DSET_API dset_status dset_subset_from_coords(const dset_group* group, const uint32_t* coords, size_t count,
                                             dset_subset** out);
/* {"group": [...], "set": [...], "label"?: "..."} */
DSET_API dset_status dset_subset_from_json(const char* record_json, dset_subset** out);
DSET_API dset_status dset_subset_to_json(const dset_subset* subset, char** json_out);
DSET_API void dset_subset_free(dset_subset* subset);
DSET_API size_t dset_subset_size(const dset_subset* subset);
/* Copies min(size, capacity) sorted indices; returns the full size. */
DSET_API size_t dset_subset_indices(const dset_subset* subset, uint32_t* buffer, size_t capacity);

/* Difference-set core. */
DSET_API dset_status dset_classify(const dset_subset* subset, dset_kind* kind_out, char** json_out);
DSET_API dset_status dset_sumset(const dset_subset* subset, char** json_out);
DSET_API dset_status dset_complement(const dset_subset* subset, dset_subset** complement_out, char** json_out);

/* Add/remove-element constructions. */
DSET_API dset_status dset_extension_report(const dset_subset* subset, char** json_out);
/* `database_json`: an array of records or {"records": [...]}. */
DSET_API dset_status dset_extension_scan(const char* database_json, unsigned jobs, char** json_out);

/* Families: paley, quartic_b, quartic_b0, octic_o, octic_o0 (hyphens accepted), singer. */
DSET_API dset_status dset_family(const char* name, uint64_t param, int with_zero, dset_subset** out);
DSET_API dset_status dset_sporadic(const char* id, dset_subset** out);
DSET_API dset_status dset_sporadic_list(char** json_out);

/* Modular Golomb rulers and relative difference sets. */
DSET_API dset_status dset_mgr_search(uint32_t v, uint32_t k, const dset_search_options* options,
                                     dset_search_status* status_out, char** json_out);
DSET_API dset_status dset_mgr_spectrum(uint32_t k, const dset_search_options* options, int* complete_out,
                                       char** json_out);
DSET_API dset_status dset_mgr_relative_ds(const uint32_t* marks, size_t count, uint32_t k, char** json_out);
DSET_API dset_status dset_ryser_conditions(uint64_t m, uint64_t k, uint64_t lambda, int* pass_out, char** json_out);
DSET_API dset_status dset_ryser_project(const uint32_t* set, size_t count, uint32_t m, char** json_out);

/* Almost difference set search in Z_v. */
DSET_API dset_status dset_forced_params(uint64_t v, uint64_t k, char** json_out);
DSET_API dset_status dset_ads_search(uint32_t v, uint32_t k, const dset_search_options* options,
                                     dset_search_status* status_out, char** json_out);
/* `timeouts_out` (optional) receives the number of cells that ran out of budget. */
DSET_API dset_status dset_ads_grid(const dset_grid_options* options, dset_grid_format format, size_t* timeouts_out,
                                   char** text_out);

/* Cyclotomy. g = 0 picks the least primitive root. */
DSET_API dset_status dset_cyclotomic_table(uint64_t p, uint32_t e, uint64_t g, char** json_out);
/* Order-8 table: enumeration, sign-normalized representations, closed form, agreement flag. */
DSET_API dset_status dset_octic_table(uint64_t p, char** json_out);
DSET_API dset_status dset_octic_ds_test(uint64_t p, uint64_t direct_limit, int* is_ds_out, char** json_out);
/* Both types O and O0. `options` may be NULL. */
DSET_API dset_status dset_octic_classify(uint64_t p, const dset_octic_options* options, char** json_out);
DSET_API dset_status dset_octic_scan(uint64_t max_p, unsigned jobs, const dset_octic_options* options,
                                     char** json_out);
/* `a` may be NULL: it is then taken from the solver's prime-capable family of that norm. */
DSET_API dset_status dset_octic_norms(int64_t norm, size_t count, const int64_t* a, char** json_out);
/* case_name: 1Q, 1N, 9Q, 9N; target: O or O0. */
DSET_API dset_status dset_octic_systems(const char* case_name, const char* target, char** json_out);

/* Reproduction targets: table2, table1-scan, mgr-spectra, octic-tables, grid.
 * JSON: {"target", "outcome", "lines": [...], "artifacts": [{"name", "content"}]}. */
DSET_API dset_status dset_reproduce_targets(char** json_out);
DSET_API dset_status dset_reproduce(const char* target, const dset_reproduce_options* options,
                                    dset_reproduce_outcome* outcome_out, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* DIFFSET_DIFFSET_H */
