/* zerogrid C API: exact construction, certification, and counting of
 * polynomial zero sets on integer grids.
 *
 * Conventions:
 *   - Every function returns a zg_status; results come back through out
 *     parameters. ZG_OK is 0.
 *   - On failure, zg_last_error() returns a thread-local message describing
 *     the most recent error on the calling thread.
 *   - Strings returned through char** out parameters are heap-allocated;
 *     release them with zg_string_free(). Handles are released with their
 *     matching *_free() function. All *_free() functions accept NULL.
 *   - Handles are immutable once created and may be shared across threads.
 */

#ifndef ZEROGRID_H
#define ZEROGRID_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zg_status {
    ZG_OK = 0,
    ZG_ERR_PARSE = 1,            /* malformed expression, grid, or literal */
    ZG_ERR_DOMAIN = 2,           /* precondition violation */
    ZG_ERR_UNSUPPORTED = 3,      /* decomposition degree above the supported cap */
    ZG_ERR_BUDGET = 4,           /* enumeration budget exceeded */
    ZG_ERR_INVALID_ARGUMENT = 5, /* bad handle, unknown name, bad parameter */
    ZG_ERR_INTERNAL = 6
} zg_status;

typedef struct zg_poly zg_poly;
typedef struct zg_construction zg_construction;

const char* zg_version(void);
const char* zg_last_error(void);
void zg_string_free(char* s);

/* ---- polynomial algebra ------------------------------------------------- */

/* variables_csv declares the ordered universe ("x,y,z"); pass NULL to use
 * the identifiers in order of first appearance. */
zg_status zg_poly_parse(const char* text, const char* variables_csv, zg_poly** out);
void zg_poly_free(zg_poly* p);

zg_status zg_poly_to_string(const zg_poly* p, char** out);
zg_status zg_poly_variables(const zg_poly* p, char** out_csv);
/* total degree; -1 encodes the zero polynomial */
zg_status zg_poly_degree(const zg_poly* p, int* out_degree);
/* op is one of '+', '-', '*' */
zg_status zg_poly_arith(const zg_poly* a, const zg_poly* b, char op, zg_poly** out);
zg_status zg_poly_derivative(const zg_poly* p, const char* var, zg_poly** out);
/* assignments like "x=1,y=-2/3,z=4"; the exact value comes back as a string */
zg_status zg_poly_eval(const zg_poly* p, const char* assignments, char** out_value);

/* ---- structural tests ---------------------------------------------------- */

/* Rewrite p = 0 as var = f(rest); p must be linear in var with a constant
 * nonzero coefficient. */
zg_status zg_solve_linear(const zg_poly* p, const char* var, zg_poly** out);

/* Mixed-partial test on a bivariate polynomial. JSON fields: verdict,
 * meaning, numerator, denominator, vanishing_samples. */
zg_status zg_derivative_test(const zg_poly* bivariate, char** out_json);

/* kind is "additive" or "multiplicative"; degree must be <= 2. JSON fields:
 * kind, found, and g/h/k when found. */
zg_status zg_decompose(const zg_poly* bivariate, const char* kind, char** out_json);

/* ---- constructions ------------------------------------------------------- */

/* family: "main-t" (n), "graph-g" (n), "valtr-sym" (n), "valtr-asym" (M),
 * "mvar" (m, n). Unused parameters are ignored. */
zg_status zg_construct(const char* family, long long n, int m, long long M,
                       zg_construction** out);
void zg_construction_free(zg_construction* c);

zg_status zg_construction_size(const zg_construction* c, unsigned long long* out);
zg_status zg_construction_csv(const zg_construction* c, char** out);
zg_status zg_construction_meta_json(const zg_construction* c, char** out);
/* out_pass is 1/0; the JSON report carries the first counterexample if any */
zg_status zg_construction_verify(const zg_construction* c, int* out_pass, char** out_json);

/* ---- counting ------------------------------------------------------------ */

/* grid: comma-separated axes, each "lo..hi" or "{v1,v2,...}", one per
 * declared variable in order. solve_var may be NULL (brute force) or a
 * variable name (solved-variable counter). budget 0 means the default
 * (10^9 evaluations). timings != 0 embeds wall-clock millis in the JSON;
 * otherwise the field is 0 so reports stay byte-reproducible. */
zg_status zg_count(const zg_poly* p, const char* grid, const char* solve_var,
                   int workers, unsigned long long budget, int timings, char** out_json);

/* family: "main" | "degenerate-sum" | "valtr-sym" | "mvar" (uses n, m) or
 * "valtr-asym" (uses M). The built-in families pick their fastest exact
 * counter; method may be NULL/"auto", "bruteforce", "solved", or
 * "difference" to force one. */
zg_status zg_count_family(const char* family, long long n, int m, long long M,
                          const char* method, int workers, unsigned long long budget,
                          int timings, char** out_json);

/* Distinct values of a bivariate polynomial along a graph over [1,n]:
 * graph is "main" (the (k, k+l) edge set) or "complete". */
zg_status zg_image(const zg_poly* bivariate, long long n, const char* graph,
                   unsigned long long budget, int timings, char** out_json);

/* ---- scaling fits and the verification suite ----------------------------- */

/* Least-squares slope of ln(count) vs ln(n) over the powers of two in
 * [min_n, max_n] for a family ("main", "degenerate-sum", "valtr-sym",
 * "graph", "mvar"). */
zg_status zg_fit_family(const char* family, int m, long long min_n, long long max_n,
                        int workers, char** out_json);

/* The end-to-end bundle. families_csv NULL means
 * "main,degenerate-sum,valtr-sym,graph". out_pass is 1 iff every check in
 * the bundle passed. out_plot_csv may be NULL if the caller does not want
 * the plot table. */
zg_status zg_suite(long long max_n, const char* families_csv, int mvar_m, int workers,
                   unsigned long long budget, unsigned long long seed, int timings,
                   int* out_pass, char** out_bundle_json, char** out_plot_csv);

#ifdef __cplusplus
}
#endif

#endif /* ZEROGRID_H */
