#include "ggsp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "ggsp/error.hpp"
#include "ggsp/text.hpp"
#include "lapack.hpp"

namespace ggsp {

Matrix shift_operator(const SampledGraph& g) {
  const std::size_t n = g.order();
  Matrix a(n, n);
  const double scale = 1.0 / double(n);
  for (const auto& e : g.edge_list()) {
    a(e[0], e[1]) = scale;
    a(e[1], e[0]) = scale;
  }
  return a;
}

Spectrum eig_sym(const Matrix& m, std::vector<double> weights) {
  const std::size_t n = m.rows();
  if (m.cols() != n) fail(errc::invalid_argument, "eig_sym needs a square matrix");
  if (m.asymmetry() > 1e-12)
    fail(errc::invalid_argument, "eig_sym needs a symmetric matrix (within 1e-12)");
  if (weights.size() != n)
    fail(errc::invalid_argument, "inner-product weight length must match matrix size");
  for (double w : weights)
    if (!(w > 0.0)) fail(errc::invalid_argument, "inner-product weights must be positive");
  if (n > std::size_t(std::numeric_limits<int>::max()))
    fail(errc::invalid_argument, "matrix too large for eigensolver");

  // A symmetric matrix reads the same row- and column-major, so the buffer
  // can be handed to Fortran directly.
  const int ni = int(n);
  std::vector<double> a(m.data(), m.data() + n * n);
  std::vector<double> vals(n);
  int info = 0;

  double work_query = 0.0;
  int iwork_query = 0;
  const int query = -1;
  dsyevd_("V", "U", &ni, a.data(), &ni, vals.data(), &work_query, &query,
          &iwork_query, &query, &info);
  if (info != 0) fail(errc::numeric, "eigensolver workspace query failed");
  std::vector<double> work(std::size_t(work_query) + 1);
  std::vector<int> iwork(std::size_t(iwork_query) + 1);
  const int lwork = int(work.size());
  const int liwork = int(iwork.size());
  dsyevd_("V", "U", &ni, a.data(), &ni, vals.data(), work.data(), &lwork,
          iwork.data(), &liwork, &info);
  if (info != 0)
    fail(errc::numeric, "eigendecomposition did not converge (info=" +
                            std::to_string(info) + ")");

  // Verify every eigenpair: residual of M v - lambda v within 1e-9 ||M||_F.
  {
    std::vector<double> mv(n * n);
    const double one = 1.0, zero = 0.0;
    dgemm_("N", "N", &ni, &ni, &ni, &one, m.data(), &ni, a.data(), &ni, &zero,
           mv.data(), &ni);
    const double tol = 1e-9 * m.frobenius_norm();
    for (std::size_t j = 0; j < n; ++j) {
      double err2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double r = mv[j * n + i] - vals[j] * a[j * n + i];
        err2 += r * r;
      }
      if (std::sqrt(err2) > tol)
        fail(errc::numeric, "eigenpair residual exceeds tolerance");
    }
  }

  Spectrum s;
  s.eigenvalues.resize(n);
  s.eigenvectors = Matrix(n, n);
  s.weights = std::move(weights);
  std::vector<double> inv_sqrt_w(n);
  for (std::size_t j = 0; j < n; ++j) inv_sqrt_w[j] = 1.0 / std::sqrt(s.weights[j]);

  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t src = n - 1 - r;  // ascending -> descending
    s.eigenvalues[r] = vals[src];
    double* phi = s.eigenvectors.row(r);
    for (std::size_t j = 0; j < n; ++j) phi[j] = a[src * n + j] * inv_sqrt_w[j];
    // Sign convention: largest-magnitude entry positive, ties to lowest index.
    std::size_t arg = 0;
    for (std::size_t j = 1; j < n; ++j)
      if (std::abs(phi[j]) > std::abs(phi[arg])) arg = j;
    if (phi[arg] < 0.0)
      for (std::size_t j = 0; j < n; ++j) phi[j] = -phi[j];
  }
  return s;
}

Spectrum graph_spectrum(const SampledGraph& g) {
  const std::size_t n = g.order();
  return eig_sym(shift_operator(g), std::vector<double>(n, 1.0 / double(n)));
}

Spectrum step_spectrum(const StepGraphon& w) {
  return eig_sym(step_operator_matrix(w).symmetrized, w.block_measures);
}

std::vector<EigenCluster> cluster_eigenvalues(const Spectrum& s, double tol) {
  if (!(tol > 0.0)) fail(errc::invalid_argument, "clustering tolerance must be positive");
  std::vector<EigenCluster> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    // Descending order: the open cluster's minimum is its most recent value.
    if (!out.empty() && s.eigenvalues[out.back().last] - s.eigenvalues[i] <= tol) {
      out.back().last = i;
    } else {
      out.push_back({i, i, 0.0, tol});
    }
  }
  for (auto& c : out) {
    double sum = 0.0;
    for (std::size_t i = c.first; i <= c.last; ++i) sum += s.eigenvalues[i];
    c.representative = sum / double(c.dimension());
  }
  return out;
}

Signal project(const Spectrum& s, const EigenCluster& c, const Signal& f) {
  const std::size_t n = s.size();
  if (f.values.size() != n)
    fail(errc::invalid_argument, "signal length does not match spectrum dimension");
  if (c.last >= n || c.first > c.last)
    fail(errc::invalid_argument, "eigenvalue cluster out of range");
  Signal out;
  out.space = f.space;
  out.values.assign(n, 0.0);
  for (std::size_t i = c.first; i <= c.last; ++i) {
    const double* phi = s.eigenvector(i);
    const double coeff = weighted_dot(s.weights, f.values.data(), phi, n);
    for (std::size_t j = 0; j < n; ++j) out.values[j] += coeff * phi[j];
  }
  return out;
}

Matrix discretize_torus(const TorusCayleyGraphon& w, std::size_t m) {
  if (m < 2) fail(errc::invalid_argument, "torus discretization needs m >= 2");
  Matrix a(m, m);
  const double scale = 1.0 / double(m);
  // The circular distance of grid points i/m and j/m is min(k, m-k)/m with
  // k = |i-j|. Going through the integers keeps rows exact translates of
  // each other; evaluating at rounded points i/m would flip entries lying
  // exactly on the distance-d discontinuity and split the eigenvalue pairs.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t k = i > j ? i - j : j - i;
      const double dist = double(std::min(k, m - k)) / double(m);
      a(i, j) = (dist <= w.d ? 1.0 - w.p : w.p) * scale;
    }
  return a;
}

std::string spectrum_csv(const Spectrum& s) {
  std::string out = "rank,eigenvalue\n";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += std::to_string(i + 1) + "," + g17(s.eigenvalues[i]) + "\n";
  return out;
}

std::string spectrum_vectors_json(const Spectrum& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    const double* phi = s.eigenvector(i);
    for (std::size_t j = 0; j < s.size(); ++j) row.push_back(phi[j]);
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

std::vector<std::size_t> top_by_magnitude(const Spectrum& s, std::size_t k) {
  if (k > s.size()) fail(errc::invalid_argument, "asked for more eigenvalues than exist");
  std::vector<std::size_t> idx(s.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(s.eigenvalues[a]) > std::abs(s.eigenvalues[b]);
  });
  idx.resize(k);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return s.eigenvalues[a] > s.eigenvalues[b];
  });
  return idx;
}

}  // namespace ggsp
