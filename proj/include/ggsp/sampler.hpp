#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ggsp/graphon.hpp"
#include "ggsp/matrix.hpp"

namespace ggsp {

/// Latent positions of a sample: block indices for step/Cayley models,
/// points of [0,1) for the torus model.
using Latents = std::variant<std::vector<std::uint32_t>, std::vector<double>>;

/// A graph drawn from a graphon model, keeping the latents and the model so
/// downstream analyses (block signals, reference spectra) can refer back.
/// Adjacency is stored as a dense bit matrix up to order 4096 and as a
/// sorted edge list above.
class SampledGraph {
 public:
  SampledGraph(GraphonModel model, std::size_t n, std::uint64_t seed,
               Latents latents, std::vector<std::array<std::uint32_t, 2>> edges);

  static SampledGraph from_json(const std::string& text);
  std::string to_json() const;

  std::size_t order() const { return n_; }
  std::uint64_t seed() const { return seed_; }
  const GraphonModel& model() const { return model_; }
  const Latents& latents() const { return latents_; }

  bool has_edge(std::size_t i, std::size_t j) const;
  std::size_t num_edges() const { return num_edges_; }
  /// All edges {i,j} with i<j, sorted lexicographically.
  std::vector<std::array<std::uint32_t, 2>> edge_list() const;
  Matrix adjacency_matrix() const;

 private:
  GraphonModel model_;
  std::size_t n_ = 0;
  std::uint64_t seed_ = 0;
  Latents latents_;
  std::size_t num_edges_ = 0;
  bool dense_ = true;
  std::vector<std::uint64_t> bits_;  // n*n bit matrix when dense
  std::vector<std::array<std::uint32_t, 2>> sparse_edges_;
};

/// Draws G(n, w): latents i.i.d. from the model's probability space, then
/// each pair {i,j} independently with probability w(x_i, x_j). Bit-exact
/// function of (model, n, seed).
SampledGraph sample(const GraphonModel& model, std::size_t n, std::uint64_t seed);

/// Indicator of one block: 1 on vertices whose latent equals `block`, else 0.
Signal block_signal(const SampledGraph& g, std::size_t block);

}  // namespace ggsp
