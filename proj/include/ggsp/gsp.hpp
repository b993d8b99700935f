#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ggsp/spectral.hpp"

namespace ggsp {

/// One eigenspace projection of a signal (the vector-valued transform).
struct ClusterProjection {
  EigenCluster cluster;
  Signal projection;
  double norm = 0.0;  // under the spectrum's weighted inner product
};

/// Fourier data of a signal: scalar coefficients <f, phi_i> for every
/// eigenvector, plus eigenspace projections when clusters were supplied.
struct FourierCoefficients {
  std::vector<double> scalar;
  std::vector<ClusterProjection> projections;
};

FourierCoefficients gft(const Spectrum& s, const Signal& f);
FourierCoefficients gft(const Spectrum& s, const Signal& f,
                        const std::vector<EigenCluster>& clusters);

/// Inverse transform sum_i c_i phi_i; needs one coefficient per eigenvector.
Signal igft(const Spectrum& s, const std::vector<double>& coeffs);

/// One sample's contribution to the scatter experiment.
struct ScatterPoint {
  std::size_t sample_id = 0;  // 0-based; stream seed derived from master ^ id
  std::uint64_t seed = 0;
  double c3 = 0.0;  // <f, phi_3>, third-largest signed eigenvalue
  double c2 = 0.0;  // <f, phi_2>, second-largest signed eigenvalue
  double radius = 0.0;
  // The 6 sample eigenvalues of largest magnitude, re-sorted descending by
  // signed value (for comparison against the model's 6 eigenvalues), and the
  // magnitude of the 7th-largest-magnitude eigenvalue.
  std::vector<double> matched_eigenvalues;
  double seventh_magnitude = 0.0;
};

/// Output of the S3 scatter experiment: per-sample coefficient pairs, the
/// model reference pair (red diamond), and summary statistics.
struct ScatterResult {
  std::size_t n = 0;
  std::size_t num_samples = 0;
  std::uint64_t master_seed = 0;
  double ref_c3 = 0.0;
  double ref_c2 = 0.0;
  double ref_radius = 0.0;
  std::vector<double> model_eigenvalues;  // all 6, descending
  std::vector<ScatterPoint> points;
  double max_relative_radius_deviation = 0.0;  // max |r_i - r*| / r*
  double radius_rsd = 0.0;                     // std(r_i) / mean(r_i)
  double c2_relative_spread = 0.0;             // (max c2 - min c2) / r*
};

/// Samples num_samples graphs of order n from the S3 Cayley model, computes
/// the block-1 indicator's coefficients on eigenvectors 2 and 3 of each
/// sample's shift operator, and the model reference pair from the 6x6
/// operator. Sample i uses the stream seed derived from master_seed and i.
ScatterResult run_s3_experiment(std::size_t n, std::size_t num_samples,
                                std::uint64_t master_seed);

/// "sample_id,c3,c2,radius" rows plus a final "ref,..." row, %.17g values.
std::string scatter_csv(const ScatterResult& r);

/// 600x600 scatter figure: blue sample dots, red reference diamond, and the
/// reference circle of radius r*, with the data window set to the circle's
/// bounding box scaled by 1.3.
std::string scatter_svg(const ScatterResult& r);

struct WsComparisonRow {
  int frequency = 0;
  double analytic = 0.0;
  double sampled = 0.0;
  double abs_error = 0.0;
};

/// Comparison of a torus-graphon sample's top shift eigenvalues against the
/// closed-form spectrum.
struct WsReport {
  std::size_t n = 0;
  double d = 0.0;
  double p = 0.0;
  std::uint64_t seed = 0;
  int k_max = 0;
  std::vector<WsComparisonRow> rows;  // 2*k_max+1, descending by analytic value
  double max_abs_error = 0.0;
};

/// Samples G(n,w) from the torus graphon, takes the 2*k_max+1 shift
/// eigenvalues of largest magnitude (re-sorted descending by signed value)
/// and pairs them with the analytic eigenvalues expanded by multiplicity.
WsReport run_ws_experiment(std::size_t n, double d, double p, std::uint64_t seed,
                           int k_max);

/// "frequency,analytic,sampled,abs_error" rows, %.17g values.
std::string ws_report_csv(const WsReport& r);

/// Human-readable comparison table with a trailing max-error line.
std::string ws_report_text(const WsReport& r);

}  // namespace ggsp
