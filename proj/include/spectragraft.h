/* spectragraft C API: distance signless Laplacian spectra of connected graphs,
 * tree family constructors, isomorphism-free tree enumeration and the extremal
 * claim verifier, behind opaque handles and integer status codes.
 *
 * Every function that can fail returns sg_status; on failure a thread-local
 * message is available from sg_last_error() until the next call on the same
 * thread. Strings returned through char** out-parameters are heap-allocated
 * and must be released with sg_string_free().
 */
#ifndef SPECTRAGRAFT_H
#define SPECTRAGRAFT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sg_status {
    SG_OK = 0,
    SG_ERROR_INVALID_ARGUMENT = 1,
    SG_ERROR_PARSE = 2,
    SG_ERROR_DISCONNECTED = 3,
    SG_ERROR_NOT_A_TREE = 4,
    SG_ERROR_CAP_EXCEEDED = 5,
    SG_ERROR_NO_CONVERGENCE = 6,
    SG_ERROR_INTERNAL = 7
} sg_status;

const char* sg_status_name(sg_status status);

/* Message for the most recent failure on this thread; never NULL. */
const char* sg_last_error(void);

const char* sg_version(void);

/* Current enumeration cap (default 16; SPECTRA_GRAFT_CAP overrides). */
int sg_enumeration_cap(void);

void sg_string_free(char* text);

/* ---- graphs ------------------------------------------------------------- */

typedef struct sg_graph sg_graph;

/* Edge-list document: first line "n m", then m lines "u v". */
sg_status sg_graph_parse(const char* edge_list_text, sg_graph** out);

/* Family mini-syntax: "B:n=10,n0=3,parts=1,1,1", "S:n=8,legs=2,2,3",
 * "T:n=9,t1=2,t2=2", "P:n=10,i=2,j=5", "Path:n=6", "Star:n=5". */
sg_status sg_graph_from_family(const char* family_spec, sg_graph** out);

void sg_graph_free(sg_graph* graph);

int sg_graph_order(const sg_graph* graph);
int sg_graph_edge_count(const sg_graph* graph);

/* Writer for the edge-list document; edges normalized to u < v, sorted. */
sg_status sg_graph_edge_list(const sg_graph* graph, char** out_text);

/* Canonical isomorphism code; trees only. */
sg_status sg_graph_canonical_code(const sg_graph* graph, char** out_code);

typedef struct sg_graph_facts {
    int order;
    int size;
    int diameter;
    int pendant_count;
    int high_degree_count; /* vertices of degree >= 3 */
    int64_t wiener_index;
    int64_t tr_max;
    int64_t tr_min;
    int is_tree;
    /* Tree classes; meaningful only when is_tree. */
    int starlike;
    int caterpillar;
    int double_broom;
} sg_graph_facts;

sg_status sg_graph_facts_get(const sg_graph* graph, sg_graph_facts* out);

/* ---- spectra ------------------------------------------------------------ */

typedef struct sg_spectral {
    double rho;      /* largest eigenvalue of Q_D */
    double residual; /* max-norm of Q x - rho x */
    long iterations;
    int used_oracle; /* 1 when the rotation oracle finished the job */
} sg_spectral;

/* Power iteration on the exact integer Q_D. tol <= 0 selects the default
 * (1e-12 relative). perron_out may be NULL; otherwise it must hold order
 * doubles and receives the positive unit Perron vector. */
sg_status sg_spectral_radius(const sg_graph* graph, double tol, sg_spectral* out, double* perron_out);

/* All eigenvalues ascending via the rotation oracle; eigs_out holds order
 * doubles. */
sg_status sg_full_spectrum(const sg_graph* graph, double* eigs_out);

/* ---- enumeration ---------------------------------------------------------- */

/* One fixture line "code<TAB>n m u v ..." per isomorphism class that passes
 * the filter ("all", "non-caterpillar", "non-starlike", "intersection",
 * "pendants=<k>"), sorted by code. */
sg_status sg_enumerate_trees(int order, const char* filter, char** out_fixture_text, long* out_count);

/* ---- claim verification --------------------------------------------------- */

/* claim: "2.1".."3.6" or "all"; n_min/n_max: -1 selects the claim defaults;
 * seed feeds only the random vectors of the invariant sweep. out_json and
 * out_summary are optional (NULL to skip). out_exit_code follows the verifier
 * contract: 0 verified/vacuous, 1 counterexample, 3 numeric tie. */
sg_status sg_verify(const char* claim, int n_min, int n_max, int jobs, uint64_t seed,
                    char** out_json, char** out_summary, int* out_exit_code);

/* CSV summary (one row per claim/order entry) from a verifier JSON report. */
sg_status sg_report_csv(const char* report_json, char** out_csv);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SPECTRAGRAFT_H */
