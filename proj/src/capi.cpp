#include "ggsp/ggsp.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "ggsp/error.hpp"
#include "ggsp/gsp.hpp"
#include "ggsp/graphon.hpp"
#include "ggsp/rep_frames.hpp"
#include "ggsp/sampler.hpp"
#include "ggsp/spectral.hpp"

struct ggsp_model {
  ggsp::GraphonModel value;
};
struct ggsp_graph {
  ggsp::SampledGraph value;
};
struct ggsp_spectrum {
  ggsp::Spectrum value;
};
struct ggsp_scatter {
  ggsp::ScatterResult value;
};
struct ggsp_ws_report {
  ggsp::WsReport value;
};
struct ggsp_frames {
  std::vector<ggsp::Irrep> irreps;
  ggsp::GeneratingSet generators;
  ggsp::LiftedFrame lifted;
  ggsp::FrameVerification verification;
};

namespace {

thread_local std::string t_last_error;

ggsp_status map_code(ggsp::errc code) {
  switch (code) {
    case ggsp::errc::invalid_argument:
      return GGSP_ERR_INVALID_ARGUMENT;
    case ggsp::errc::parse:
      return GGSP_ERR_PARSE;
    case ggsp::errc::io:
      return GGSP_ERR_IO;
    case ggsp::errc::numeric:
      return GGSP_ERR_NUMERIC;
    case ggsp::errc::verification:
      return GGSP_ERR_VERIFICATION;
  }
  return GGSP_ERR_NUMERIC;
}

template <typename F>
ggsp_status guarded(F&& f) {
  try {
    f();
    t_last_error.clear();
    return GGSP_OK;
  } catch (const ggsp::Error& e) {
    t_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return GGSP_ERR_NUMERIC;
  } catch (...) {
    t_last_error = "unknown failure";
    return GGSP_ERR_NUMERIC;
  }
}

ggsp_status fail_arg(const char* message) {
  t_last_error = message;
  return GGSP_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ggsp_status emit_string(const std::string& s, char** out) {
  *out = copy_string(s);
  if (!*out) {
    t_last_error = "out of memory";
    return GGSP_ERR_NUMERIC;
  }
  return GGSP_OK;
}

}  // namespace

extern "C" {

const char* ggsp_version(void) { return "0.1.0"; }

const char* ggsp_last_error(void) { return t_last_error.c_str(); }

void ggsp_string_free(char* s) { std::free(s); }

/* ---- models ---- */

ggsp_status ggsp_model_parse(const char* json, ggsp_model** out) {
  if (!json || !out) return fail_arg("ggsp_model_parse: null argument");
  return guarded([&] { *out = new ggsp_model{ggsp::GraphonModel::from_json(json)}; });
}

ggsp_status ggsp_model_to_json(const ggsp_model* model, char** out) {
  if (!model || !out) return fail_arg("ggsp_model_to_json: null argument");
  std::string text;
  const ggsp_status rc = guarded([&] { text = model->value.to_json(); });
  return rc == GGSP_OK ? emit_string(text, out) : rc;
}

ggsp_status ggsp_model_s3(ggsp_model** out) {
  if (!out) return fail_arg("ggsp_model_s3: null argument");
  return guarded([&] { *out = new ggsp_model{ggsp::s3_reference_model()}; });
}

void ggsp_model_free(ggsp_model* model) { delete model; }

/* ---- sampling ---- */

ggsp_status ggsp_sample(const ggsp_model* model, size_t n, uint64_t seed,
                        ggsp_graph** out) {
  if (!model || !out) return fail_arg("ggsp_sample: null argument");
  return guarded([&] { *out = new ggsp_graph{ggsp::sample(model->value, n, seed)}; });
}

ggsp_status ggsp_graph_parse(const char* json, ggsp_graph** out) {
  if (!json || !out) return fail_arg("ggsp_graph_parse: null argument");
  return guarded([&] { *out = new ggsp_graph{ggsp::SampledGraph::from_json(json)}; });
}

ggsp_status ggsp_graph_to_json(const ggsp_graph* graph, char** out) {
  if (!graph || !out) return fail_arg("ggsp_graph_to_json: null argument");
  std::string text;
  const ggsp_status rc = guarded([&] { text = graph->value.to_json(); });
  return rc == GGSP_OK ? emit_string(text, out) : rc;
}

size_t ggsp_graph_order(const ggsp_graph* graph) {
  return graph ? graph->value.order() : 0;
}

size_t ggsp_graph_num_edges(const ggsp_graph* graph) {
  return graph ? graph->value.num_edges() : 0;
}

ggsp_status ggsp_block_signal(const ggsp_graph* graph, size_t block, double* out,
                              size_t len) {
  if (!graph || !out) return fail_arg("ggsp_block_signal: null argument");
  if (len != graph->value.order())
    return fail_arg("ggsp_block_signal: buffer length must equal graph order");
  return guarded([&] {
    const ggsp::Signal f = ggsp::block_signal(graph->value, block);
    std::memcpy(out, f.values.data(), len * sizeof(double));
  });
}

void ggsp_graph_free(ggsp_graph* graph) { delete graph; }

/* ---- spectra ---- */

ggsp_status ggsp_graph_spectrum(const ggsp_graph* graph, ggsp_spectrum** out) {
  if (!graph || !out) return fail_arg("ggsp_graph_spectrum: null argument");
  return guarded(
      [&] { *out = new ggsp_spectrum{ggsp::graph_spectrum(graph->value)}; });
}

ggsp_status ggsp_model_spectrum(const ggsp_model* model, ggsp_spectrum** out) {
  if (!model || !out) return fail_arg("ggsp_model_spectrum: null argument");
  return guarded([&] {
    *out = new ggsp_spectrum{ggsp::step_spectrum(model->value.as_step())};
  });
}

ggsp_status ggsp_torus_spectrum(const ggsp_model* model, size_t m,
                                ggsp_spectrum** out) {
  if (!model || !out) return fail_arg("ggsp_torus_spectrum: null argument");
  return guarded([&] {
    const auto* torus =
        std::get_if<ggsp::TorusCayleyGraphon>(&model->value.value());
    if (!torus)
      ggsp::fail(ggsp::errc::invalid_argument,
                 "discretized spectra apply to torus models only");
    *out = new ggsp_spectrum{
        ggsp::eig_sym(ggsp::discretize_torus(*torus, m),
                      std::vector<double>(m, 1.0 / double(m)))};
  });
}

size_t ggsp_spectrum_size(const ggsp_spectrum* s) {
  return s ? s->value.size() : 0;
}

ggsp_status ggsp_spectrum_eigenvalues(const ggsp_spectrum* s, double* out,
                                      size_t len) {
  if (!s || !out) return fail_arg("ggsp_spectrum_eigenvalues: null argument");
  if (len != s->value.size())
    return fail_arg("ggsp_spectrum_eigenvalues: buffer length mismatch");
  std::memcpy(out, s->value.eigenvalues.data(), len * sizeof(double));
  return GGSP_OK;
}

ggsp_status ggsp_spectrum_eigenvector(const ggsp_spectrum* s, size_t i, double* out,
                                      size_t len) {
  if (!s || !out) return fail_arg("ggsp_spectrum_eigenvector: null argument");
  if (i >= s->value.size())
    return fail_arg("ggsp_spectrum_eigenvector: index out of range");
  if (len != s->value.size())
    return fail_arg("ggsp_spectrum_eigenvector: buffer length mismatch");
  std::memcpy(out, s->value.eigenvector(i), len * sizeof(double));
  return GGSP_OK;
}

ggsp_status ggsp_spectrum_csv(const ggsp_spectrum* s, char** out) {
  if (!s || !out) return fail_arg("ggsp_spectrum_csv: null argument");
  std::string text;
  const ggsp_status rc = guarded([&] { text = ggsp::spectrum_csv(s->value); });
  return rc == GGSP_OK ? emit_string(text, out) : rc;
}

ggsp_status ggsp_spectrum_vectors_json(const ggsp_spectrum* s, char** out) {
  if (!s || !out) return fail_arg("ggsp_spectrum_vectors_json: null argument");
  std::string text;
  const ggsp_status rc =
      guarded([&] { text = ggsp::spectrum_vectors_json(s->value); });
  return rc == GGSP_OK ? emit_string(text, out) : rc;
}

void ggsp_spectrum_free(ggsp_spectrum* s) { delete s; }

/* ---- Fourier transforms ---- */

ggsp_status ggsp_gft(const ggsp_spectrum* s, const double* signal, size_t len,
                     double* coeffs_out) {
  if (!s || !signal || !coeffs_out) return fail_arg("ggsp_gft: null argument");
  return guarded([&] {
    ggsp::Signal f;
    f.values.assign(signal, signal + len);
    const ggsp::FourierCoefficients coeffs = ggsp::gft(s->value, f);
    std::memcpy(coeffs_out, coeffs.scalar.data(),
                coeffs.scalar.size() * sizeof(double));
  });
}

ggsp_status ggsp_igft(const ggsp_spectrum* s, const double* coeffs, size_t len,
                      double* signal_out) {
  if (!s || !coeffs || !signal_out) return fail_arg("ggsp_igft: null argument");
  return guarded([&] {
    const ggsp::Signal f =
        ggsp::igft(s->value, std::vector<double>(coeffs, coeffs + len));
    std::memcpy(signal_out, f.values.data(), f.values.size() * sizeof(double));
  });
}

/* ---- scatter experiment ---- */

ggsp_status ggsp_run_s3(size_t n, size_t num_samples, uint64_t master_seed,
                        ggsp_scatter** out) {
  if (!out) return fail_arg("ggsp_run_s3: null argument");
  return guarded([&] {
    *out = new ggsp_scatter{ggsp::run_s3_experiment(n, num_samples, master_seed)};
  });
}

size_t ggsp_scatter_num_points(const ggsp_scatter* r) {
  return r ? r->value.points.size() : 0;
}

ggsp_status ggsp_scatter_point(const ggsp_scatter* r, size_t i, double* c3,
                               double* c2, double* radius) {
  if (!r || !c3 || !c2 || !radius) return fail_arg("ggsp_scatter_point: null argument");
  if (i >= r->value.points.size())
    return fail_arg("ggsp_scatter_point: index out of range");
  const ggsp::ScatterPoint& pt = r->value.points[i];
  *c3 = pt.c3;
  *c2 = pt.c2;
  *radius = pt.radius;
  return GGSP_OK;
}

ggsp_status ggsp_scatter_reference(const ggsp_scatter* r, double* c3, double* c2,
                                   double* radius) {
  if (!r || !c3 || !c2 || !radius)
    return fail_arg("ggsp_scatter_reference: null argument");
  *c3 = r->value.ref_c3;
  *c2 = r->value.ref_c2;
  *radius = r->value.ref_radius;
  return GGSP_OK;
}

ggsp_status ggsp_scatter_stats(const ggsp_scatter* r, double* max_rel_radius_dev,
                               double* radius_rsd, double* c2_rel_spread) {
  if (!r || !max_rel_radius_dev || !radius_rsd || !c2_rel_spread)
    return fail_arg("ggsp_scatter_stats: null argument");
  *max_rel_radius_dev = r->value.max_relative_radius_deviation;
  *radius_rsd = r->value.radius_rsd;
  *c2_rel_spread = r->value.c2_relative_spread;
  return GGSP_OK;
}

ggsp_status ggsp_scatter_csv(const ggsp_scatter* r, char** out) {
  if (!r || !out) return fail_arg("ggsp_scatter_csv: null argument");
  std::string text;
  const ggsp_status rc = guarded([&] { text = ggsp::scatter_csv(r->value); });
  return rc == GGSP_OK ? emit_string(text, out) : rc;
}

ggsp_status ggsp_scatter_svg(const ggsp_scatter* r, char** out) {
  if (!r || !out) return fail_arg("ggsp_scatter_svg: null argument");
  std::string text;
  const ggsp_status rc = guarded([&] { text = ggsp::scatter_svg(r->value); });
  return rc == GGSP_OK ? emit_string(text, out) : rc;
}

void ggsp_scatter_free(ggsp_scatter* r) { delete r; }

/* ---- torus experiment ---- */

ggsp_status ggsp_run_ws(size_t n, double d, double p, uint64_t seed, int k_max,
                        ggsp_ws_report** out) {
  if (!out) return fail_arg("ggsp_run_ws: null argument");
  return guarded([&] {
    *out = new ggsp_ws_report{ggsp::run_ws_experiment(n, d, p, seed, k_max)};
  });
}

size_t ggsp_ws_num_rows(const ggsp_ws_report* r) {
  return r ? r->value.rows.size() : 0;
}

ggsp_status ggsp_ws_row(const ggsp_ws_report* r, size_t i, int* frequency,
                        double* analytic, double* sampled, double* abs_error) {
  if (!r || !frequency || !analytic || !sampled || !abs_error)
    return fail_arg("ggsp_ws_row: null argument");
  if (i >= r->value.rows.size()) return fail_arg("ggsp_ws_row: index out of range");
  const ggsp::WsComparisonRow& row = r->value.rows[i];
  *frequency = row.frequency;
  *analytic = row.analytic;
  *sampled = row.sampled;
  *abs_error = row.abs_error;
  return GGSP_OK;
}

ggsp_status ggsp_ws_max_error(const ggsp_ws_report* r, double* out) {
  if (!r || !out) return fail_arg("ggsp_ws_max_error: null argument");
  *out = r->value.max_abs_error;
  return GGSP_OK;
}

ggsp_status ggsp_ws_csv(const ggsp_ws_report* r, char** out) {
  if (!r || !out) return fail_arg("ggsp_ws_csv: null argument");
  std::string text;
  const ggsp_status rc = guarded([&] { text = ggsp::ws_report_csv(r->value); });
  return rc == GGSP_OK ? emit_string(text, out) : rc;
}

ggsp_status ggsp_ws_text(const ggsp_ws_report* r, char** out) {
  if (!r || !out) return fail_arg("ggsp_ws_text: null argument");
  std::string text;
  const ggsp_status rc = guarded([&] { text = ggsp::ws_report_text(r->value); });
  return rc == GGSP_OK ? emit_string(text, out) : rc;
}

void ggsp_ws_free(ggsp_ws_report* r) { delete r; }

/* ---- representation frames ---- */

ggsp_status ggsp_frames_s4(ggsp_frames** out) {
  if (!out) return fail_arg("ggsp_frames_s4: null argument");
  return guarded([&] {
    std::vector<ggsp::Irrep> irreps = ggsp::young_orthogonal_irreps(4);
    ggsp::GeneratingSet generators = ggsp::s4_default_generating_set();
    ggsp::LiftedFrame lifted = ggsp::lift_frame(irreps, generators);
    ggsp::FrameVerification verification =
        ggsp::verify_frame_system(irreps, generators, lifted);
    *out = new ggsp_frames{std::move(irreps), std::move(generators),
                           std::move(lifted), std::move(verification)};
  });
}

size_t ggsp_frames_count(const ggsp_frames* f) {
  return f ? f->lifted.frame.size() : 0;
}

size_t ggsp_frames_dim(const ggsp_frames* f) {
  return f ? f->lifted.frame.space_dim : 0;
}

ggsp_status ggsp_frames_vector(const ggsp_frames* f, size_t i, double* out,
                               size_t len) {
  if (!f || !out) return fail_arg("ggsp_frames_vector: null argument");
  if (i >= f->lifted.frame.size())
    return fail_arg("ggsp_frames_vector: index out of range");
  if (len != f->lifted.frame.space_dim)
    return fail_arg("ggsp_frames_vector: buffer length mismatch");
  std::memcpy(out, f->lifted.frame.vectors[i].data(), len * sizeof(double));
  return GGSP_OK;
}

ggsp_status ggsp_frames_eigenvalue(const ggsp_frames* f, size_t i, double* out) {
  if (!f || !out) return fail_arg("ggsp_frames_eigenvalue: null argument");
  if (i >= f->lifted.eigenvalues.size())
    return fail_arg("ggsp_frames_eigenvalue: index out of range");
  *out = f->lifted.eigenvalues[i];
  return GGSP_OK;
}

ggsp_status ggsp_frames_bounds(const ggsp_frames* f, double* lower, double* upper) {
  if (!f || !lower || !upper) return fail_arg("ggsp_frames_bounds: null argument");
  *lower = f->lifted.frame.lower_bound;
  *upper = f->lifted.frame.upper_bound;
  return GGSP_OK;
}

ggsp_status ggsp_frames_json(const ggsp_frames* f, char** out) {
  if (!f || !out) return fail_arg("ggsp_frames_json: null argument");
  std::string text;
  const ggsp_status rc =
      guarded([&] { text = ggsp::frames_json(f->generators, f->lifted); });
  return rc == GGSP_OK ? emit_string(text, out) : rc;
}

ggsp_status ggsp_frames_report(const ggsp_frames* f, char** out) {
  if (!f || !out) return fail_arg("ggsp_frames_report: null argument");
  std::string text;
  const ggsp_status rc =
      guarded([&] { text = ggsp::verification_report_text(f->verification); });
  return rc == GGSP_OK ? emit_string(text, out) : rc;
}

int ggsp_frames_verified(const ggsp_frames* f) {
  return f && f->verification.pass ? 1 : 0;
}

void ggsp_frames_free(ggsp_frames* f) { delete f; }

}  // extern "C"
