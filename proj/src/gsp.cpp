#include "ggsp/gsp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ggsp/error.hpp"
#include "ggsp/rng.hpp"
#include "ggsp/sampler.hpp"
#include "ggsp/text.hpp"
#include "ggsp/threads.hpp"

namespace ggsp {

FourierCoefficients gft(const Spectrum& s, const Signal& f) {
  return gft(s, f, {});
}

FourierCoefficients gft(const Spectrum& s, const Signal& f,
                        const std::vector<EigenCluster>& clusters) {
  const std::size_t n = s.size();
  if (f.values.size() != n)
    fail(errc::invalid_argument, "signal length does not match spectrum dimension");
  FourierCoefficients out;
  out.scalar.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.scalar[i] = weighted_dot(s.weights, f.values.data(), s.eigenvector(i), n);
  out.projections.reserve(clusters.size());
  for (const auto& c : clusters) {
    ClusterProjection cp;
    cp.cluster = c;
    cp.projection = project(s, c, f);
    cp.norm = std::sqrt(weighted_dot(s.weights, cp.projection.values,
                                     cp.projection.values));
    out.projections.push_back(std::move(cp));
  }
  return out;
}

Signal igft(const Spectrum& s, const std::vector<double>& coeffs) {
  const std::size_t n = s.size();
  if (coeffs.size() != n)
    fail(errc::invalid_argument, "igft needs one coefficient per eigenvector");
  Signal out;
  out.values.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double* phi = s.eigenvector(i);
    if (coeffs[i] == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) out.values[j] += coeffs[i] * phi[j];
  }
  return out;
}

ScatterResult run_s3_experiment(std::size_t n, std::size_t num_samples,
                                std::uint64_t master_seed) {
  if (n < 10) fail(errc::invalid_argument, "scatter experiment needs n >= 10");
  if (num_samples < 1) fail(errc::invalid_argument, "scatter experiment needs >= 1 sample");

  const GraphonModel model = s3_reference_model();

  ScatterResult result;
  result.n = n;
  result.num_samples = num_samples;
  result.master_seed = master_seed;

  // Model reference (red diamond): block-1 indicator against the 6x6
  // operator's eigenvectors 2 and 3.
  {
    const Spectrum ref = step_spectrum(model.as_step());
    Signal f;
    f.space = SignalSpace::graphon_blocks;
    f.values.assign(ref.size(), 0.0);
    f.values[0] = 1.0;
    const FourierCoefficients coeffs = gft(ref, f);
    result.ref_c2 = coeffs.scalar[1];
    result.ref_c3 = coeffs.scalar[2];
    result.ref_radius = std::hypot(result.ref_c2, result.ref_c3);
    result.model_eigenvalues = ref.eigenvalues;
  }

  result.points.assign(num_samples, ScatterPoint{});
  parallel_for(num_samples, [&](std::size_t i) {
    ScatterPoint& pt = result.points[i];
    pt.sample_id = i;
    pt.seed = derive_stream_seed(master_seed, i);
    const SampledGraph g = sample(model, n, pt.seed);
    const Signal f = block_signal(g, 0);
    const Spectrum s = graph_spectrum(g);
    pt.c2 = weighted_dot(s.weights, f.values.data(), s.eigenvector(1), n);
    pt.c3 = weighted_dot(s.weights, f.values.data(), s.eigenvector(2), n);
    pt.radius = std::hypot(pt.c2, pt.c3);
    const std::size_t k = std::min<std::size_t>(7, n);
    const std::vector<std::size_t> top = top_by_magnitude(s, k);
    if (k == 7) {
      // Of the seven largest-magnitude eigenvalues the smallest-magnitude
      // one is the rank-7 value; the remaining six (still signed-sorted)
      // are matched against the model's six.
      std::size_t arg = top[0];
      for (std::size_t idx : top)
        if (std::abs(s.eigenvalues[idx]) < std::abs(s.eigenvalues[arg])) arg = idx;
      pt.seventh_magnitude = std::abs(s.eigenvalues[arg]);
      for (std::size_t idx : top)
        if (idx != arg) pt.matched_eigenvalues.push_back(s.eigenvalues[idx]);
    } else {
      for (std::size_t idx : top) pt.matched_eigenvalues.push_back(s.eigenvalues[idx]);
    }
  });

  double r_sum = 0.0, r_sq = 0.0, c2_min = result.points[0].c2,
         c2_max = result.points[0].c2, max_dev = 0.0;
  for (const auto& pt : result.points) {
    r_sum += pt.radius;
    r_sq += pt.radius * pt.radius;
    c2_min = std::min(c2_min, pt.c2);
    c2_max = std::max(c2_max, pt.c2);
    max_dev = std::max(max_dev, std::abs(pt.radius - result.ref_radius));
  }
  const double mean = r_sum / double(num_samples);
  const double var = std::max(0.0, r_sq / double(num_samples) - mean * mean);
  result.max_relative_radius_deviation = max_dev / result.ref_radius;
  result.radius_rsd = mean > 0.0 ? std::sqrt(var) / mean : 0.0;
  result.c2_relative_spread = (c2_max - c2_min) / result.ref_radius;
  return result;
}

std::string scatter_csv(const ScatterResult& r) {
  std::string out = "sample_id,c3,c2,radius\n";
  for (const auto& pt : r.points)
    out += std::to_string(pt.sample_id) + "," + g17(pt.c3) + "," + g17(pt.c2) +
           "," + g17(pt.radius) + "\n";
  out += "ref," + g17(r.ref_c3) + "," + g17(r.ref_c2) + "," + g17(r.ref_radius) + "\n";
  return out;
}

namespace {

std::string f2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string scatter_svg(const ScatterResult& r) {
  // Data window: the reference circle's bounding box scaled by 1.3, mapped
  // onto the full 600x600 canvas (y up).
  const double half = 1.3 * r.ref_radius;
  const double scale = 300.0 / half;
  const auto sx = [&](double x) { return 300.0 + x * scale; };
  const auto sy = [&](double y) { return 300.0 - y * scale; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
         "viewBox=\"0 0 600 600\">\n";
  svg += "  <rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  svg += "  <line x1=\"0\" y1=\"300\" x2=\"600\" y2=\"300\" stroke=\"#bbbbbb\" "
         "stroke-width=\"1\"/>\n";
  svg += "  <line x1=\"300\" y1=\"0\" x2=\"300\" y2=\"600\" stroke=\"#bbbbbb\" "
         "stroke-width=\"1\"/>\n";
  svg += "  <circle cx=\"300\" cy=\"300\" r=\"" + f2(r.ref_radius * scale) +
         "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1\" "
         "stroke-dasharray=\"6 4\"/>\n";
  svg += "  <text x=\"592\" y=\"292\" font-family=\"sans-serif\" font-size=\"16\" "
         "text-anchor=\"end\">f̂(φ₃)</text>\n";
  svg += "  <text x=\"308\" y=\"18\" font-family=\"sans-serif\" "
         "font-size=\"16\">f̂(φ₂)</text>\n";
  for (const auto& pt : r.points)
    svg += "  <circle cx=\"" + f2(sx(pt.c3)) + "\" cy=\"" + f2(sy(pt.c2)) +
           "\" r=\"5\" fill=\"#1f77b4\" fill-opacity=\"0.85\"/>\n";
  const double dx = sx(r.ref_c3), dy = sy(r.ref_c2);
  svg += "  <path d=\"M " + f2(dx) + " " + f2(dy - 8) + " L " + f2(dx + 8) + " " +
         f2(dy) + " L " + f2(dx) + " " + f2(dy + 8) + " L " + f2(dx - 8) + " " +
         f2(dy) + " Z\" fill=\"#d62728\"/>\n";
  svg += "</svg>\n";
  return svg;
}

WsReport run_ws_experiment(std::size_t n, double d, double p, std::uint64_t seed,
                           int k_max) {
  if (k_max < 0) fail(errc::invalid_argument, "ws experiment needs k_max >= 0");
  const std::size_t want = 2 * std::size_t(k_max) + 1;
  if (want > n)
    fail(errc::invalid_argument, "ws experiment needs n >= 2*k_max + 1");
  const TorusCayleyGraphon torus(d, p);

  WsReport report;
  report.n = n;
  report.d = d;
  report.p = p;
  report.seed = seed;
  report.k_max = k_max;

  // Analytic eigenvalues expanded by multiplicity, sorted descending by
  // value with ties kept in frequency order.
  std::vector<std::pair<double, int>> analytic;
  for (const auto& tv : torus_spectrum(torus, k_max))
    for (int m = 0; m < tv.multiplicity; ++m) analytic.emplace_back(tv.value, tv.frequency);
  std::stable_sort(analytic.begin(), analytic.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });

  const SampledGraph g = sample(GraphonModel(torus), n, seed);
  const Spectrum s = graph_spectrum(g);
  const std::vector<std::size_t> top = top_by_magnitude(s, want);

  for (std::size_t i = 0; i < want; ++i) {
    WsComparisonRow row;
    row.frequency = analytic[i].second;
    row.analytic = analytic[i].first;
    row.sampled = s.eigenvalues[top[i]];
    row.abs_error = std::abs(row.sampled - row.analytic);
    report.max_abs_error = std::max(report.max_abs_error, row.abs_error);
    report.rows.push_back(row);
  }
  return report;
}

std::string ws_report_csv(const WsReport& r) {
  std::string out = "frequency,analytic,sampled,abs_error\n";
  for (const auto& row : r.rows)
    out += std::to_string(row.frequency) + "," + g17(row.analytic) + "," +
           g17(row.sampled) + "," + g17(row.abs_error) + "\n";
  return out;
}

std::string ws_report_text(const WsReport& r) {
  char buf[128];
  std::string out;
  std::snprintf(buf, sizeof(buf), "torus graphon d=%g p=%g, sample n=%zu seed=%llu\n",
                r.d, r.p, r.n, static_cast<unsigned long long>(r.seed));
  out += buf;
  out += "freq   analytic      sampled       abs_error\n";
  for (const auto& row : r.rows) {
    std::snprintf(buf, sizeof(buf), "%-6d %-13.6f %-13.6f %.6f\n", row.frequency,
                  row.analytic, row.sampled, row.abs_error);
    out += buf;
  }
  std::snprintf(buf, sizeof(buf), "max abs error: %.6f\n", r.max_abs_error);
  out += buf;
  return out;
}

}  // namespace ggsp
