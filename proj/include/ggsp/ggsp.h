/* C interface to the graphon signal processing core.
 *
 * Conventions:
 *  - Every fallible call returns ggsp_status; GGSP_OK is 0. On failure,
 *    ggsp_last_error() describes the problem (thread-local storage).
 *  - Objects are opaque handles created by the library and released with
 *    the matching *_free function. Freeing NULL is a no-op.
 *  - Functions with a char** out parameter allocate the string; release it
 *    with ggsp_string_free.
 *  - Buffer-filling functions take the buffer length and fail with
 *    GGSP_ERR_INVALID_ARGUMENT on a size mismatch.
 */
#ifndef GGSP_H
#define GGSP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ggsp_status {
  GGSP_OK = 0,
  GGSP_ERR_INVALID_ARGUMENT = 1,
  GGSP_ERR_PARSE = 2,
  GGSP_ERR_IO = 3,
  GGSP_ERR_NUMERIC = 4,
  GGSP_ERR_VERIFICATION = 5
} ggsp_status;

const char* ggsp_version(void);
/* Message of the most recent failure on this thread; empty if none. */
const char* ggsp_last_error(void);
void ggsp_string_free(char* s);

typedef struct ggsp_model ggsp_model;
typedef struct ggsp_graph ggsp_graph;
typedef struct ggsp_spectrum ggsp_spectrum;
typedef struct ggsp_scatter ggsp_scatter;
typedef struct ggsp_ws_report ggsp_ws_report;
typedef struct ggsp_frames ggsp_frames;

/* ---- graphon models ----
 * JSON forms:
 *   {"type":"step","P":[[...]],"measures":[...]}
 *   {"type":"cayley","group":"S3","gamma":{"(1)":0.6,"(1 2)":0.3,"(1 3)":0.1}}
 *   {"type":"torus","d":0.2,"p":0.08}
 */
ggsp_status ggsp_model_parse(const char* json, ggsp_model** out);
ggsp_status ggsp_model_to_json(const ggsp_model* model, char** out);
/* The bundled S3 Cayley model used by the scatter experiment. */
ggsp_status ggsp_model_s3(ggsp_model** out);
void ggsp_model_free(ggsp_model* model);

/* ---- sampling ---- */
ggsp_status ggsp_sample(const ggsp_model* model, size_t n, uint64_t seed,
                        ggsp_graph** out);
ggsp_status ggsp_graph_parse(const char* json, ggsp_graph** out);
ggsp_status ggsp_graph_to_json(const ggsp_graph* graph, char** out);
size_t ggsp_graph_order(const ggsp_graph* graph);
size_t ggsp_graph_num_edges(const ggsp_graph* graph);
/* Indicator of one latent block; fills n doubles. */
ggsp_status ggsp_block_signal(const ggsp_graph* graph, size_t block, double* out,
                              size_t len);
void ggsp_graph_free(ggsp_graph* graph);

/* ---- spectra ---- */
/* Shift operator A/n of a graph, uniform 1/n inner product. */
ggsp_status ggsp_graph_spectrum(const ggsp_graph* graph, ggsp_spectrum** out);
/* Step/Cayley model operator, block-measure inner product. Torus models are
 * rejected; use ggsp_torus_spectrum. */
ggsp_status ggsp_model_spectrum(const ggsp_model* model, ggsp_spectrum** out);
/* m-point discretization of a torus model, uniform 1/m inner product. */
ggsp_status ggsp_torus_spectrum(const ggsp_model* model, size_t m,
                                ggsp_spectrum** out);
size_t ggsp_spectrum_size(const ggsp_spectrum* s);
ggsp_status ggsp_spectrum_eigenvalues(const ggsp_spectrum* s, double* out, size_t len);
ggsp_status ggsp_spectrum_eigenvector(const ggsp_spectrum* s, size_t i, double* out,
                                      size_t len);
/* "rank,eigenvalue" CSV. */
ggsp_status ggsp_spectrum_csv(const ggsp_spectrum* s, char** out);
/* Eigenvectors as a JSON array of arrays (row i = eigenvector i). */
ggsp_status ggsp_spectrum_vectors_json(const ggsp_spectrum* s, char** out);
void ggsp_spectrum_free(ggsp_spectrum* s);

/* ---- Fourier transforms ----
 * Coefficients are inner products against the spectrum's eigenvectors under
 * its weighted inner product; both buffers hold ggsp_spectrum_size values.
 */
ggsp_status ggsp_gft(const ggsp_spectrum* s, const double* signal, size_t len,
                     double* coeffs_out);
ggsp_status ggsp_igft(const ggsp_spectrum* s, const double* coeffs, size_t len,
                      double* signal_out);

/* ---- scatter experiment (S3 Cayley model) ---- */
ggsp_status ggsp_run_s3(size_t n, size_t num_samples, uint64_t master_seed,
                        ggsp_scatter** out);
size_t ggsp_scatter_num_points(const ggsp_scatter* r);
ggsp_status ggsp_scatter_point(const ggsp_scatter* r, size_t i, double* c3,
                               double* c2, double* radius);
ggsp_status ggsp_scatter_reference(const ggsp_scatter* r, double* c3, double* c2,
                                   double* radius);
ggsp_status ggsp_scatter_stats(const ggsp_scatter* r, double* max_rel_radius_dev,
                               double* radius_rsd, double* c2_rel_spread);
/* "sample_id,c3,c2,radius" rows plus a final "ref,..." row. */
ggsp_status ggsp_scatter_csv(const ggsp_scatter* r, char** out);
/* 600x600 scatter figure. */
ggsp_status ggsp_scatter_svg(const ggsp_scatter* r, char** out);
void ggsp_scatter_free(ggsp_scatter* r);

/* ---- torus spectrum experiment ---- */
ggsp_status ggsp_run_ws(size_t n, double d, double p, uint64_t seed, int k_max,
                        ggsp_ws_report** out);
size_t ggsp_ws_num_rows(const ggsp_ws_report* r);
ggsp_status ggsp_ws_row(const ggsp_ws_report* r, size_t i, int* frequency,
                        double* analytic, double* sampled, double* abs_error);
ggsp_status ggsp_ws_max_error(const ggsp_ws_report* r, double* out);
ggsp_status ggsp_ws_csv(const ggsp_ws_report* r, char** out);
ggsp_status ggsp_ws_text(const ggsp_ws_report* r, char** out);
void ggsp_ws_free(ggsp_ws_report* r);

/* ---- representation frames for S4 ----
 * Builds all irreps, analyzes the symbol of the default generating set
 * {(1 2),(2 3),(3 4),(1 2)(3 4)}, lifts the eigenspace frames to l^2(S4)
 * and verifies the whole construction.
 */
ggsp_status ggsp_frames_s4(ggsp_frames** out);
size_t ggsp_frames_count(const ggsp_frames* f);
size_t ggsp_frames_dim(const ggsp_frames* f);
ggsp_status ggsp_frames_vector(const ggsp_frames* f, size_t i, double* out,
                               size_t len);
ggsp_status ggsp_frames_eigenvalue(const ggsp_frames* f, size_t i, double* out);
ggsp_status ggsp_frames_bounds(const ggsp_frames* f, double* lower, double* upper);
ggsp_status ggsp_frames_json(const ggsp_frames* f, char** out);
ggsp_status ggsp_frames_report(const ggsp_frames* f, char** out);
/* 1 if every verification residual met its threshold, else 0. */
int ggsp_frames_verified(const ggsp_frames* f);
void ggsp_frames_free(ggsp_frames* f);

#ifdef __cplusplus
}
#endif

#endif /* GGSP_H */
