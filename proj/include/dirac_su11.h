#ifndef DIRAC_SU11_H
#define DIRAC_SU11_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(DSU_BUILDING_LIBRARY)
#define DSU_API __declspec(dllexport)
#else
#define DSU_API __declspec(dllimport)
#endif
#else
#define DSU_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dsu_status {
  DSU_OK = 0,
  DSU_ERR_USAGE = 1,     /* malformed input or incompatible operands */
  DSU_ERR_DOMAIN = 2,    /* outside the physical domain (Z > 118, n < 0, ...) */
  DSU_ERR_DIVISION = 3,  /* inverse of a non-invertible field element */
  DSU_ERR_IDENTITY = 4,  /* an identity check failed */
  DSU_ERR_NUMERICAL = 5, /* bracketing or integration failure */
  DSU_ERR_INTERNAL = 6
} dsu_status;

typedef enum dsu_format { DSU_FORMAT_JSON = 0, DSU_FORMAT_CSV = 1 } dsu_format;

typedef struct dsu_context dsu_context;
typedef struct dsu_state dsu_state;

DSU_API const char* dsu_version(void);
/* Message of the last failure on the calling thread; empty when none. */
DSU_API const char* dsu_last_error(void);
/* Releases any string returned through a char** out-parameter. */
DSU_API void dsu_free_string(char* s);

/* c is an exact decimal or "p/q"; precision in bits (0 selects 256). */
DSU_API dsu_status dsu_context_create(const char* c, int Z, unsigned precision, dsu_context** out);
DSU_API void dsu_context_destroy(dsu_context* ctx);

DSU_API dsu_status dsu_spectrum(const dsu_context* ctx, int N_max, dsu_format format, char** out);

/* j as "p/2". The state is built, assembled and normalized. */
DSU_API dsu_status dsu_state_create(const dsu_context* ctx, const char* j, int eps, int n, dsu_state** out);
DSU_API void dsu_state_destroy(dsu_state* state);
DSU_API dsu_status dsu_state_energy(const dsu_state* state, char** E, char** binding);
/* Summary with the Laguerre cross-check; DSU_ERR_IDENTITY if any exact check fails. */
DSU_API dsu_status dsu_state_report(const dsu_state* state, char** json);
/* "rho,F,G" on a geometric grid; rho_max NULL and count 0 select the default grid. */
DSU_API dsu_status dsu_state_samples(const dsu_state* state, const char* rho_max, int count, char** csv);

/* Full verification over the given Z values (NULL/0 selects Z = 1 and 80).
   passed receives 1 when every check holds. */
DSU_API dsu_status dsu_verify(const dsu_context* ctx, const int* Z, size_t Z_count, const char* j_max, int n_max,
                              int negative_control, int* passed, char** json);

DSU_API dsu_status dsu_jl_scan(const dsu_context* ctx, const char* j_max, int n_max, dsu_format format, char** out);

/* c_schedule is a comma-separated list of exact decimals. */
DSU_API dsu_status dsu_limit(const dsu_context* ctx, const char* j, int eps, int n, const char* c_schedule,
                             dsu_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
