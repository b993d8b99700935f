#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ggsp/graphon.hpp"
#include "ggsp/matrix.hpp"
#include "ggsp/sampler.hpp"
#include "ggsp/spectral.hpp"

#include "checks.hpp"
#include "oracles.hpp"

using ggsp::EigenCluster;
using ggsp::errc;
using ggsp::GraphonModel;
using ggsp::Matrix;
using ggsp::SampledGraph;
using ggsp::Signal;
using ggsp::Spectrum;
using ggsp::StepGraphon;
using ggsp::TorusCayleyGraphon;

namespace {

// Hand-built graph on the S3 model (the model itself is irrelevant to the
// spectrum; only the adjacency matters).
SampledGraph path_graph(std::size_t n) {
  std::vector<std::uint32_t> latents(n, 0);
  std::vector<std::array<std::uint32_t, 2>> edges;
  for (std::uint32_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return SampledGraph(ggsp::s3_reference_model(), n, 0, latents, edges);
}

SampledGraph complete_graph(std::size_t n) {
  std::vector<std::uint32_t> latents(n, 0);
  std::vector<std::array<std::uint32_t, 2>> edges;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) edges.push_back({i, j});
  return SampledGraph(ggsp::s3_reference_model(), n, 0, latents, edges);
}

Spectrum spectrum_of_values(std::vector<double> vals) {
  Spectrum s;
  s.eigenvalues = std::move(vals);
  s.eigenvectors = Matrix::identity(s.eigenvalues.size());
  s.weights.assign(s.eigenvalues.size(), 1.0);
  return s;
}

double residual(const Matrix& m, const double* phi, double lambda, std::size_t n) {
  double err2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * phi[j];
    const double r = acc - lambda * phi[i];
    err2 += r * r;
  }
  return std::sqrt(err2);
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("closed-form 2x2 and identity spectra") {
  Matrix swap(2, 2);
  swap(0, 1) = swap(1, 0) = 1.0;
  const Spectrum s = ggsp::eig_sym(swap, {0.5, 0.5});
  REQUIRE(s.size() == 2);
  CHECK(s.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-14));
  // orthonormal under weight 1/2 means entries of magnitude 1; the sign
  // convention makes the tied largest entry positive at the lowest index
  CHECK(s.eigenvectors(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.eigenvectors(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.eigenvectors(1, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.eigenvectors(1, 1) == doctest::Approx(-1.0).epsilon(1e-12));

  const Spectrum id = ggsp::eig_sym(Matrix::identity(4), std::vector<double>(4, 1.0));
  for (double v : id.eigenvalues) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eig_sym matches the characteristic-polynomial oracle on random 5x5") {
  oracle::TestRng rng(2024);
  for (int trial = 0; trial < 4; ++trial) {
    const Matrix m = rng.symmetric_matrix(5);
    const Spectrum s = ggsp::eig_sym(m, std::vector<double>(5, 1.0));
    const std::vector<double> expected = oracle::eigenvalues_by_charpoly(m);
    REQUIRE(s.size() == 5);
    for (std::size_t i = 0; i < 5; ++i)
      CHECK(std::abs(s.eigenvalues[i] - expected[i]) <= 1e-8);

    // descending signed order
    for (std::size_t i = 1; i < 5; ++i) CHECK(s.eigenvalues[i - 1] >= s.eigenvalues[i]);

    // residuals and orthonormality
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(residual(m, s.eigenvector(i), s.eigenvalues[i], 5) <=
            1e-9 * m.frobenius_norm());
      for (std::size_t j = 0; j < 5; ++j) {
        const double g = ggsp::weighted_dot(s.weights, s.eigenvector(i),
                                            s.eigenvector(j), 5);
        CHECK(std::abs(g - (i == j ? 1.0 : 0.0)) <= 1e-10);
      }
    }

    // sign convention: first entry attaining the largest magnitude is positive
    for (std::size_t i = 0; i < 5; ++i) {
      const double* phi = s.eigenvector(i);
      std::size_t arg = 0;
      for (std::size_t j = 1; j < 5; ++j)
        if (std::abs(phi[j]) > std::abs(phi[arg])) arg = j;
      CHECK(phi[arg] > 0.0);
    }
  }
}

TEST_CASE("eig_sym under non-uniform weights") {
  oracle::TestRng rng(31);
  const Matrix m = rng.symmetric_matrix(4);
  std::vector<double> w = {0.5, 1.5, 0.8, 1.2};
  const Spectrum s = ggsp::eig_sym(m, w);

  // weighted Gram matrix is the identity
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const double g = ggsp::weighted_dot(s.weights, s.eigenvector(i), s.eigenvector(j), 4);
      CHECK(std::abs(g - (i == j ? 1.0 : 0.0)) <= 1e-10);
    }

  // the rescaled vectors diagonalize the similar operator D^-1/2 M D^1/2
  Matrix b(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      b(i, j) = m(i, j) * std::sqrt(w[j]) / std::sqrt(w[i]);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(residual(b, s.eigenvector(i), s.eigenvalues[i], 4) <= 1e-9);

  // same eigenvalues as the plain solve
  const Spectrum plain = ggsp::eig_sym(m, std::vector<double>(4, 1.0));
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(s.eigenvalues[i] == doctest::Approx(plain.eigenvalues[i]).epsilon(1e-13));
}

TEST_CASE("eig_sym is deterministic and validates input") {
  oracle::TestRng rng(8);
  const Matrix m = rng.symmetric_matrix(6);
  const Spectrum a = ggsp::eig_sym(m, std::vector<double>(6, 1.0));
  const Spectrum b = ggsp::eig_sym(m, std::vector<double>(6, 1.0));
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(a.eigenvectors == b.eigenvectors);

  CHECK(error_code_of([&] { ggsp::eig_sym(Matrix(2, 3), {1.0, 1.0}); }) ==
        int(errc::invalid_argument));
  Matrix asym = m;
  asym(0, 1) += 1e-6;
  CHECK(error_code_of([&] { ggsp::eig_sym(asym, std::vector<double>(6, 1.0)); }) ==
        int(errc::invalid_argument));
  CHECK(error_code_of([&] { ggsp::eig_sym(m, std::vector<double>(5, 1.0)); }) ==
        int(errc::invalid_argument));
  std::vector<double> bad(6, 1.0);
  bad[3] = 0.0;
  CHECK(error_code_of([&] { ggsp::eig_sym(m, bad); }) == int(errc::invalid_argument));
}

TEST_CASE("shift operator is the adjacency scaled by 1/n") {
  const SampledGraph g = path_graph(4);
  const Matrix a = ggsp::shift_operator(g);
  CHECK(a(0, 1) == doctest::Approx(0.25));
  CHECK(a(1, 2) == doctest::Approx(0.25));
  CHECK(a(0, 2) == 0.0);
  CHECK(a(0, 0) == 0.0);
  CHECK(a.asymmetry() == 0.0);
}

TEST_CASE("graph spectra with known closed forms") {
  // path on 4 vertices: adjacency eigenvalues are the golden-ratio pair
  const Spectrum p4 = ggsp::graph_spectrum(path_graph(4));
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  REQUIRE(p4.size() == 4);
  CHECK(p4.eigenvalues[0] == doctest::Approx(golden / 4.0).epsilon(1e-12));
  CHECK(p4.eigenvalues[1] == doctest::Approx((golden - 1.0) / 4.0).epsilon(1e-12));
  CHECK(p4.eigenvalues[2] == doctest::Approx(-(golden - 1.0) / 4.0).epsilon(1e-12));
  CHECK(p4.eigenvalues[3] == doctest::Approx(-golden / 4.0).epsilon(1e-12));
  for (double w : p4.weights) CHECK(w == doctest::Approx(0.25));

  // complete graph on 5 vertices: (J - I)/5 has spectrum {4/5, -1/5 x4}
  const Spectrum k5 = ggsp::graph_spectrum(complete_graph(5));
  CHECK(k5.eigenvalues[0] == doctest::Approx(0.8).epsilon(1e-12));
  for (std::size_t i = 1; i < 5; ++i)
    CHECK(k5.eigenvalues[i] == doctest::Approx(-0.2).epsilon(1e-12));

  // empty graph: zero operator
  const SampledGraph empty(ggsp::s3_reference_model(), 3, 0,
                           std::vector<std::uint32_t>{0, 0, 0}, {});
  for (double v : ggsp::graph_spectrum(empty).eigenvalues)
    CHECK(v == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("step spectrum of the bundled S3 model hits the closed forms") {
  const StepGraphon step = ggsp::s3_reference_model().as_step();
  const Spectrum s = ggsp::step_spectrum(step);
  const std::vector<double> expected = oracle::s3_model_eigenvalues();
  REQUIRE(s.size() == 6);
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(std::abs(s.eigenvalues[i] - expected[i]) <= 1e-12);
  CHECK(std::abs(s.eigenvalues[1] - s.eigenvalues[2]) <= 1e-12);
  CHECK(std::abs(s.eigenvalues[3] - s.eigenvalues[4]) <= 1e-12);

  // eigenvectors diagonalize the weighted operator and are mu-orthonormal
  const Matrix weighted = ggsp::step_operator_matrix(step).weighted;
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(residual(weighted, s.eigenvector(i), s.eigenvalues[i], 6) <= 1e-12);
    for (std::size_t j = 0; j < 6; ++j) {
      const double g = ggsp::weighted_dot(s.weights, s.eigenvector(i), s.eigenvector(j), 6);
      CHECK(std::abs(g - (i == j ? 1.0 : 0.0)) <= 1e-10);
    }
  }
  for (double w : s.weights) CHECK(w == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("clustering follows the greedy gap-to-minimum rule") {
  const Spectrum s = spectrum_of_values({1.0, 0.5 + 1e-12, 0.5, 0.2});
  const auto clusters = ggsp::cluster_eigenvalues(s, 1e-9);
  REQUIRE(clusters.size() == 3);
  CHECK(clusters[0].first == 0);
  CHECK(clusters[0].last == 0);
  CHECK(clusters[1].first == 1);
  CHECK(clusters[1].last == 2);
  CHECK(clusters[2].first == 3);
  CHECK(clusters[2].last == 3);
  CHECK(clusters[1].representative == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(clusters[1].dimension() == 2);
  CHECK(clusters[0].tolerance == 1e-9);

  // the partition covers every index exactly once, in order
  std::size_t next = 0;
  for (const auto& c : clusters) {
    CHECK(c.first == next);
    next = c.last + 1;
  }
  CHECK(next == s.size());

  // chains extend while each new value stays within tol of the running min
  const auto chain = ggsp::cluster_eigenvalues(
      spectrum_of_values({5.0, 2e-10, 1e-10, 0.0}), 1e-9);
  REQUIRE(chain.size() == 2);
  CHECK(chain[1].first == 1);
  CHECK(chain[1].last == 3);

  // all-equal list collapses to one cluster
  const auto one = ggsp::cluster_eigenvalues(spectrum_of_values({0.3, 0.3, 0.3}), 1e-9);
  REQUIRE(one.size() == 1);
  CHECK(one[0].dimension() == 3);
  CHECK(one[0].representative == doctest::Approx(0.3));

  CHECK(ggsp::cluster_eigenvalues(spectrum_of_values({}), 1e-9).empty());
  CHECK(error_code_of([&] { ggsp::cluster_eigenvalues(s, 0.0); }) ==
        int(errc::invalid_argument));

  // S3 model: dimensions 1,2,2,1 with the repeated pair second
  const auto model = ggsp::cluster_eigenvalues(
      ggsp::step_spectrum(ggsp::s3_reference_model().as_step()), 1e-9);
  REQUIRE(model.size() == 4);
  CHECK(model[0].dimension() == 1);
  CHECK(model[1].dimension() == 2);
  CHECK(model[2].dimension() == 2);
  CHECK(model[3].dimension() == 1);
}

TEST_CASE("projections agree with resolvent-product projectors") {
  const StepGraphon step = ggsp::s3_reference_model().as_step();
  const Spectrum s = ggsp::step_spectrum(step);
  const auto clusters = ggsp::cluster_eigenvalues(s, 1e-9);
  REQUIRE(clusters.size() == 4);

  const Matrix weighted = ggsp::step_operator_matrix(step).weighted;
  std::vector<double> distinct;
  for (const auto& c : clusters) distinct.push_back(c.representative);

  oracle::TestRng rng(555);
  Signal f;
  f.space = ggsp::SignalSpace::graphon_blocks;
  f.values = rng.vector(6);

  Signal total;
  total.values.assign(6, 0.0);
  for (std::size_t ci = 0; ci < clusters.size(); ++ci) {
    const Signal proj = ggsp::project(s, clusters[ci], f);
    const Matrix p = oracle::lagrange_projector(weighted, distinct, ci);
    const std::vector<double> expected = p.matvec(f.values);
    for (std::size_t i = 0; i < 6; ++i)
      CHECK(std::abs(proj.values[i] - expected[i]) <= 1e-9);

    // idempotent
    const Signal twice = ggsp::project(s, clusters[ci], proj);
    for (std::size_t i = 0; i < 6; ++i)
      CHECK(std::abs(twice.values[i] - proj.values[i]) <= 1e-12);

    for (std::size_t i = 0; i < 6; ++i) total.values[i] += proj.values[i];
  }
  // completeness: the projections sum back to the signal
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(std::abs(total.values[i] - f.values[i]) <= 1e-8);

  // a signal orthogonal to a cluster projects to zero: use an eigenvector
  // from a different cluster
  Signal phi0;
  phi0.values.assign(s.eigenvector(0), s.eigenvector(0) + 6);
  const Signal zero = ggsp::project(s, clusters[1], phi0);
  for (double v : zero.values) CHECK(std::abs(v) <= 1e-12);

  CHECK(error_code_of([&] {
          Signal shorty;
          shorty.values = {1.0, 2.0};
          ggsp::project(s, clusters[0], shorty);
        }) == int(errc::invalid_argument));
  CHECK(error_code_of([&] {
          EigenCluster bad{4, 9, 0.0, 1e-9};
          ggsp::project(s, bad, f);
        }) == int(errc::invalid_argument));
}

TEST_CASE("projection norms are invariant under eigenbasis rotation") {
  const Spectrum s = ggsp::step_spectrum(ggsp::s3_reference_model().as_step());
  const auto clusters = ggsp::cluster_eigenvalues(s, 1e-9);
  const EigenCluster pair = clusters[1];  // indices 1 and 2, repeated eigenvalue

  oracle::TestRng rng(777);
  Signal f;
  f.values = rng.vector(6);

  const Signal base = ggsp::project(s, pair, f);
  const double base_sq =
      std::pow(ggsp::weighted_dot(s.weights, f.values.data(), s.eigenvector(1), 6), 2) +
      std::pow(ggsp::weighted_dot(s.weights, f.values.data(), s.eigenvector(2), 6), 2);

  for (int trial = 0; trial < 5; ++trial) {
    const double theta = rng.uniform(0.0, 2.0 * M_PI);
    const double c = std::cos(theta), sn = std::sin(theta);
    Spectrum rotated = s;
    for (std::size_t j = 0; j < 6; ++j) {
      const double a = s.eigenvectors(1, j), b = s.eigenvectors(2, j);
      rotated.eigenvectors(1, j) = c * a + sn * b;
      rotated.eigenvectors(2, j) = -sn * a + c * b;
    }
    const Signal rot_proj = ggsp::project(rotated, pair, f);
    for (std::size_t i = 0; i < 6; ++i)
      CHECK(std::abs(rot_proj.values[i] - base.values[i]) <= 1e-10);

    const double rot_sq =
        std::pow(ggsp::weighted_dot(s.weights, f.values.data(), rotated.eigenvector(1), 6), 2) +
        std::pow(ggsp::weighted_dot(s.weights, f.values.data(), rotated.eigenvector(2), 6), 2);
    CHECK(std::abs(rot_sq - base_sq) <= 1e-12);
  }
}

TEST_CASE("torus discretization entries and spectrum") {
  const TorusCayleyGraphon w(0.2, 0.08);
  const Matrix a = ggsp::discretize_torus(w, 10);
  REQUIRE(a.rows() == 10);
  CHECK(a(0, 0) == doctest::Approx(0.092));   // (1-p)/m
  CHECK(a(0, 2) == doctest::Approx(0.092));   // distance exactly d
  CHECK(a(0, 3) == doctest::Approx(0.008));   // p/m
  CHECK(a(0, 9) == doctest::Approx(0.092));   // wraps around
  CHECK(a.asymmetry() <= 1e-15);

  CHECK(error_code_of([&] { ggsp::discretize_torus(w, 1); }) ==
        int(errc::invalid_argument));

  // eigenvalues approximate the closed forms and pair up for k >= 1
  const std::size_t m = 400;
  const Spectrum s = ggsp::eig_sym(ggsp::discretize_torus(w, m),
                                   std::vector<double>(m, 1.0 / double(m)));
  const auto analytic = ggsp::torus_spectrum(w, 2);
  const auto top = ggsp::top_by_magnitude(s, 5);
  CHECK(std::abs(s.eigenvalues[top[0]] - analytic[0].value) <= 0.01);
  CHECK(std::abs(s.eigenvalues[top[1]] - analytic[1].value) <= 0.01);
  CHECK(std::abs(s.eigenvalues[top[2]] - analytic[1].value) <= 0.01);
  CHECK(std::abs(s.eigenvalues[top[3]] - analytic[2].value) <= 0.01);
  CHECK(std::abs(s.eigenvalues[top[4]] - analytic[2].value) <= 0.01);
  CHECK(std::abs(s.eigenvalues[top[1]] - s.eigenvalues[top[2]]) <= 1e-9);
  CHECK(std::abs(s.eigenvalues[top[3]] - s.eigenvalues[top[4]]) <= 1e-9);
}

TEST_CASE("top_by_magnitude selects by magnitude, reports by signed order") {
  const Spectrum s = spectrum_of_values({0.9, 0.5, 0.1, -0.8, -0.95});
  CHECK(ggsp::top_by_magnitude(s, 3) == std::vector<std::size_t>{0, 3, 4});
  CHECK(ggsp::top_by_magnitude(s, 1) == std::vector<std::size_t>{4});
  CHECK(ggsp::top_by_magnitude(s, 5) == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK(ggsp::top_by_magnitude(s, 0).empty());
  CHECK(error_code_of([&] { ggsp::top_by_magnitude(s, 6); }) ==
        int(errc::invalid_argument));

  // magnitude tie between +x and -x: the earlier (signed-descending) index wins
  const Spectrum tie = spectrum_of_values({0.5, -0.5});
  CHECK(ggsp::top_by_magnitude(tie, 1) == std::vector<std::size_t>{0});
}

TEST_CASE("spectrum CSV and eigenvector JSON formats") {
  const Spectrum s = spectrum_of_values({0.5, -0.25});
  CHECK(ggsp::spectrum_csv(s) == "rank,eigenvalue\n1,0.5\n2,-0.25\n");

  const Spectrum p4 = ggsp::graph_spectrum(path_graph(4));
  const auto j = nlohmann::json::parse(ggsp::spectrum_vectors_json(p4));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    REQUIRE(j[i].size() == 4);
    for (std::size_t k = 0; k < 4; ++k)
      CHECK(j[i][k].get<double>() == p4.eigenvectors(i, k));
  }
}

}  // TEST_SUITE
