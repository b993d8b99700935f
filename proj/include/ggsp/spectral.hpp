#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ggsp/graphon.hpp"
#include "ggsp/matrix.hpp"
#include "ggsp/sampler.hpp"

namespace ggsp {

/// Full eigendecomposition of a self-adjoint operator together with the
/// weighted inner product its eigenvectors are orthonormal under:
/// <f,g> = sum_j weights[j] f_j g_j (uniform 1/n for graphs, block measures
/// for step graphons).
struct Spectrum {
  std::vector<double> eigenvalues;  // descending by signed value
  Matrix eigenvectors;              // row i holds the eigenvector of eigenvalues[i]
  std::vector<double> weights;

  std::size_t size() const { return eigenvalues.size(); }
  const double* eigenvector(std::size_t i) const { return eigenvectors.row(i); }
};

/// Contiguous run [first, last] of near-equal eigenvalues in a Spectrum.
struct EigenCluster {
  std::size_t first = 0;
  std::size_t last = 0;  // inclusive
  double representative = 0.0;
  double tolerance = 0.0;

  std::size_t dimension() const { return last - first + 1; }
};

/// Graph shift operator A/n, scaled so sample spectra converge to the
/// graphon operator's spectrum.
Matrix shift_operator(const SampledGraph& g);

/// Eigendecomposition of a symmetric matrix. Eigenvectors are rescaled by
/// 1/sqrt(weights) entrywise so they are orthonormal under the weighted
/// inner product; sign fixed so each vector's largest-magnitude entry is
/// positive (ties: lowest index). Every eigenpair is verified against
/// M v = lambda v to 1e-9 * ||M||_F.
Spectrum eig_sym(const Matrix& m, std::vector<double> weights);

/// Spectrum of a graph under the uniform 1/n inner product.
Spectrum graph_spectrum(const SampledGraph& g);

/// Spectrum of a step graphon's integral operator: eigenvalues of the
/// symmetrized form, eigenfunction block values, block-measure weights.
Spectrum step_spectrum(const StepGraphon& w);

/// Greedy left-to-right grouping of the descending eigenvalue list: a value
/// joins the open cluster iff its gap to the cluster's minimum is <= tol.
std::vector<EigenCluster> cluster_eigenvalues(const Spectrum& s, double tol);

/// Projection of f onto the eigenspace of one cluster under the spectrum's
/// weighted inner product; idempotent.
Signal project(const Spectrum& s, const EigenCluster& c, const Signal& f);

/// m-point uniform discretization of the torus graphon: entries
/// w(i/m, j/m)/m; leading eigenvalues approximate the analytic spectrum
/// with error O(1/m).
Matrix discretize_torus(const TorusCayleyGraphon& w, std::size_t m);

/// "rank,eigenvalue" CSV (rank starting at 1), values printed as %.17g.
std::string spectrum_csv(const Spectrum& s);

/// Eigenvectors as a JSON array of arrays; row i is the eigenvector of
/// eigenvalue rank i+1.
std::string spectrum_vectors_json(const Spectrum& s);

/// Indices of the k eigenvalues of largest magnitude, re-sorted descending
/// by signed value: the rule for matching a sample's spectrum against a
/// graphon with k nonzero eigenvalues.
std::vector<std::size_t> top_by_magnitude(const Spectrum& s, std::size_t k);

}  // namespace ggsp
