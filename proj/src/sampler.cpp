#include "ggsp/sampler.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include <json.hpp>

#include "ggsp/error.hpp"
#include "ggsp/rng.hpp"

namespace ggsp {

using nlohmann::json;

namespace {

constexpr std::size_t kDenseLimit = 4096;

std::size_t model_block_count(const GraphonModel& model) {
  if (const auto* step = std::get_if<StepGraphon>(&model.value()))
    return step->num_blocks();
  if (const auto* cayley = std::get_if<CayleyFunction>(&model.value()))
    return cayley->group->order();
  return 0;  // torus: continuous latent space
}

}  // namespace

SampledGraph::SampledGraph(GraphonModel model, std::size_t n, std::uint64_t seed,
                           Latents latents,
                           std::vector<std::array<std::uint32_t, 2>> edges)
    : model_(std::move(model)), n_(n), seed_(seed), latents_(std::move(latents)) {
  if (n_ == 0) fail(errc::invalid_argument, "sampled graph needs n >= 1");

  if (model_.is_torus()) {
    const auto* xs = std::get_if<std::vector<double>>(&latents_);
    if (!xs || xs->size() != n_)
      fail(errc::invalid_argument, "torus sample needs n latent points in [0,1)");
    for (double x : *xs) (void)TorusPoint{x};  // range check
  } else {
    const auto* blocks = std::get_if<std::vector<std::uint32_t>>(&latents_);
    if (!blocks || blocks->size() != n_)
      fail(errc::invalid_argument, "sample needs n latent block indices");
    const std::size_t k = model_block_count(model_);
    for (std::uint32_t b : *blocks)
      if (b >= k) fail(errc::invalid_argument, "latent block index out of range");
  }

  dense_ = n_ <= kDenseLimit;
  if (dense_) bits_.assign((n_ * n_ + 63) / 64, 0);
  for (const auto& e : edges) {
    const std::size_t i = e[0], j = e[1];
    if (i >= j || j >= n_)
      fail(errc::invalid_argument, "edge endpoints must satisfy i < j < n");
    if (dense_) {
      const std::size_t a = i * n_ + j, b = j * n_ + i;
      bits_[a / 64] |= std::uint64_t{1} << (a % 64);
      bits_[b / 64] |= std::uint64_t{1} << (b % 64);
    }
  }
  if (dense_) {
    std::size_t set_bits = 0;
    for (std::uint64_t word : bits_) set_bits += std::popcount(word);
    num_edges_ = set_bits / 2;  // each edge sets (i,j) and (j,i)
  } else {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    sparse_edges_ = std::move(edges);
    num_edges_ = sparse_edges_.size();
  }
}

bool SampledGraph::has_edge(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) fail(errc::invalid_argument, "vertex index out of range");
  if (i == j) return false;
  if (dense_) {
    const std::size_t a = i * n_ + j;
    return (bits_[a / 64] >> (a % 64)) & 1;
  }
  std::array<std::uint32_t, 2> key{std::uint32_t(std::min(i, j)),
                                   std::uint32_t(std::max(i, j))};
  return std::binary_search(sparse_edges_.begin(), sparse_edges_.end(), key);
}

std::vector<std::array<std::uint32_t, 2>> SampledGraph::edge_list() const {
  if (!dense_) return sparse_edges_;
  std::vector<std::array<std::uint32_t, 2>> out;
  out.reserve(num_edges_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (has_edge(i, j)) out.push_back({std::uint32_t(i), std::uint32_t(j)});
  return out;
}

Matrix SampledGraph::adjacency_matrix() const {
  Matrix a(n_, n_);
  for (const auto& e : edge_list()) {
    a(e[0], e[1]) = 1.0;
    a(e[1], e[0]) = 1.0;
  }
  return a;
}

std::string SampledGraph::to_json() const {
  json j;
  j["n"] = n_;
  j["seed"] = seed_;
  j["model"] = json::parse(model_.to_json());
  if (const auto* blocks = std::get_if<std::vector<std::uint32_t>>(&latents_))
    j["latents"] = *blocks;
  else
    j["latents"] = std::get<std::vector<double>>(latents_);
  json edges = json::array();
  for (const auto& e : edge_list()) edges.push_back(json::array({e[0], e[1]}));
  j["edges"] = std::move(edges);
  return j.dump();
}

SampledGraph SampledGraph::from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse, "graph is not valid JSON");
  if (!j.is_object() || !j.contains("n") || !j.contains("seed") ||
      !j.contains("model") || !j.contains("latents") || !j.contains("edges"))
    fail(errc::parse, "graph JSON needs n, seed, model, latents, edges");
  if (!j.at("n").is_number_integer() || !j.at("seed").is_number_integer())
    fail(errc::parse, "graph JSON n and seed must be integers");

  GraphonModel model = GraphonModel::from_json(j.at("model").dump());
  const std::size_t n = j.at("n").get<std::size_t>();
  const std::uint64_t seed = j.at("seed").get<std::uint64_t>();

  if (!j.at("latents").is_array()) fail(errc::parse, "graph JSON latents must be an array");
  Latents latents;
  if (model.is_torus()) {
    std::vector<double> xs;
    for (const auto& v : j.at("latents")) {
      if (!v.is_number()) fail(errc::parse, "torus latents must be numbers");
      xs.push_back(v.get<double>());
    }
    latents = std::move(xs);
  } else {
    std::vector<std::uint32_t> blocks;
    for (const auto& v : j.at("latents")) {
      if (!v.is_number_unsigned() && !v.is_number_integer())
        fail(errc::parse, "block latents must be integers");
      const long long b = v.get<long long>();
      if (b < 0) fail(errc::parse, "block latents must be nonnegative");
      blocks.push_back(static_cast<std::uint32_t>(b));
    }
    latents = std::move(blocks);
  }

  if (!j.at("edges").is_array()) fail(errc::parse, "graph JSON edges must be an array");
  std::vector<std::array<std::uint32_t, 2>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      fail(errc::parse, "each edge must be a pair of integers");
    edges.push_back({e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>()});
  }

  return SampledGraph(std::move(model), n, seed, std::move(latents), std::move(edges));
}

SampledGraph sample(const GraphonModel& model, std::size_t n, std::uint64_t seed) {
  if (n == 0) fail(errc::invalid_argument, "sample needs n >= 1");
  Xoshiro256pp rng(seed);

  Latents latents;
  std::vector<std::array<std::uint32_t, 2>> edges;

  if (model.is_torus()) {
    const auto& torus = std::get<TorusCayleyGraphon>(model.value());
    std::vector<double> xs(n);
    for (double& x : xs) x = rng.uniform01();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double w = eval_torus(torus, TorusPoint{xs[i]}, TorusPoint{xs[j]});
        if (rng.uniform01() < w)
          edges.push_back({std::uint32_t(i), std::uint32_t(j)});
      }
    latents = std::move(xs);
  } else {
    const StepGraphon step = model.as_step();
    const std::size_t k = step.num_blocks();
    std::vector<std::uint32_t> blocks(n);
    for (std::uint32_t& b : blocks) {
      const double u = rng.uniform01();
      double acc = 0.0;
      std::uint32_t chosen = std::uint32_t(k - 1);
      for (std::size_t c = 0; c < k; ++c) {
        acc += step.block_measures[c];
        if (u < acc) {
          chosen = std::uint32_t(c);
          break;
        }
      }
      b = chosen;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double w = step.link_probabilities(blocks[i], blocks[j]);
        if (rng.uniform01() < w)
          edges.push_back({std::uint32_t(i), std::uint32_t(j)});
      }
    latents = std::move(blocks);
  }

  return SampledGraph(model, n, seed, std::move(latents), std::move(edges));
}

Signal block_signal(const SampledGraph& g, std::size_t block) {
  const auto* blocks = std::get_if<std::vector<std::uint32_t>>(&g.latents());
  if (!blocks)
    fail(errc::invalid_argument, "block signals need a step or Cayley sample");
  const std::size_t k = model_block_count(g.model());
  if (block >= k) fail(errc::invalid_argument, "block index out of range");
  Signal f;
  f.space = SignalSpace::graph_vertices;
  f.values.assign(g.order(), 0.0);
  for (std::size_t i = 0; i < g.order(); ++i)
    if ((*blocks)[i] == block) f.values[i] = 1.0;
  return f;
}

}  // namespace ggsp
