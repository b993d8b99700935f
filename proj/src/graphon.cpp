#include "ggsp/graphon.hpp"

#include <cmath>
#include <utility>

#include <json.hpp>

#include "ggsp/error.hpp"

namespace ggsp {

using nlohmann::json;

namespace {

void check_unit_interval(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0))
    fail(errc::invalid_argument, std::string(what) + " outside [0,1]");
}

}  // namespace

StepGraphon::StepGraphon(Matrix p, std::vector<double> measures)
    : link_probabilities(std::move(p)), block_measures(std::move(measures)) {
  const std::size_t k = block_measures.size();
  if (k == 0) fail(errc::invalid_argument, "step graphon needs at least one block");
  if (link_probabilities.rows() != k || link_probabilities.cols() != k)
    fail(errc::invalid_argument, "link-probability matrix shape does not match block count");
  double total = 0.0;
  for (double m : block_measures) {
    if (!(m > 0.0)) fail(errc::invalid_argument, "block measures must be positive");
    total += m;
  }
  if (std::abs(total - 1.0) > 1e-12)
    fail(errc::invalid_argument, "block measures must sum to 1");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      check_unit_interval(link_probabilities(i, j), "link probability");
      if (link_probabilities(i, j) != link_probabilities(j, i))
        fail(errc::invalid_argument, "link-probability matrix must be symmetric");
    }
}

CayleyFunction::CayleyFunction(std::shared_ptr<const FiniteGroup> g,
                               std::vector<double> vals)
    : group(std::move(g)), values(std::move(vals)) {
  if (!group) fail(errc::invalid_argument, "Cayley function needs a group");
  if (values.size() != group->order())
    fail(errc::invalid_argument, "Cayley function length does not match group order");
  for (std::size_t i = 0; i < values.size(); ++i) {
    check_unit_interval(values[i], "Cayley function value");
    if (values[i] != values[group->inv(i)])
      fail(errc::invalid_argument,
           "Cayley function must satisfy gamma(x) = gamma(x^-1)");
  }
}

TorusCayleyGraphon::TorusCayleyGraphon(double d_, double p_) : d(d_), p(p_) {
  if (!(d > 0.0 && d < 0.5)) fail(errc::invalid_argument, "torus graphon needs 0 < d < 1/2");
  if (!(p > 0.0 && p < 0.5)) fail(errc::invalid_argument, "torus graphon needs 0 < p < 1/2");
}

StepGraphon cayley_to_step(const CayleyFunction& gamma) {
  const FiniteGroup& g = *gamma.group;
  const std::size_t k = g.order();
  Matrix p(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      p(i, j) = gamma.values[g.mul(i, g.inv(j))];
  return StepGraphon(std::move(p), std::vector<double>(k, 1.0 / double(k)));
}

double eval_torus(const TorusCayleyGraphon& w, TorusPoint x, TorusPoint y) {
  return torus_distance(x, y) <= w.d ? 1.0 - w.p : w.p;
}

StepOperator step_operator_matrix(const StepGraphon& w) {
  const std::size_t k = w.num_blocks();
  StepOperator out{Matrix(k, k), Matrix(k, k)};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const double pij = w.link_probabilities(i, j);
      out.weighted(i, j) = pij * w.block_measures[j];
      out.symmetrized(i, j) =
          std::sqrt(w.block_measures[i]) * pij * std::sqrt(w.block_measures[j]);
    }
  return out;
}

std::vector<TorusEigenvalue> torus_spectrum(const TorusCayleyGraphon& w, int k_max) {
  if (k_max < 0) fail(errc::invalid_argument, "torus spectrum needs k_max >= 0");
  std::vector<TorusEigenvalue> out;
  out.push_back({0, 2.0 * w.d * (1.0 - w.p) + (1.0 - 2.0 * w.d) * w.p, 1});
  const double pi = std::acos(-1.0);
  for (int k = 1; k <= k_max; ++k)
    out.push_back({k, (1.0 - 2.0 * w.p) * std::sin(2.0 * pi * k * w.d) / (pi * k), 2});
  return out;
}

namespace {

GraphonModel parse_model(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
    fail(errc::parse, "graphon model JSON needs a \"type\" string");
  const std::string type = j.at("type").get<std::string>();

  if (type == "step") {
    if (!j.contains("P") || !j.at("P").is_array() || !j.contains("measures") ||
        !j.at("measures").is_array())
      fail(errc::parse, "step model needs \"P\" and \"measures\" arrays");
    const auto& rows = j.at("P");
    const std::size_t k = rows.size();
    if (k == 0) fail(errc::parse, "step model needs a nonempty \"P\"");
    Matrix p(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      if (!rows[i].is_array() || rows[i].size() != k)
        fail(errc::parse, "step model \"P\" must be a square matrix");
      for (std::size_t c = 0; c < k; ++c) {
        if (!rows[i][c].is_number()) fail(errc::parse, "step model \"P\" entries must be numbers");
        p(i, c) = rows[i][c].get<double>();
      }
    }
    std::vector<double> measures;
    for (const auto& m : j.at("measures")) {
      if (!m.is_number()) fail(errc::parse, "step model \"measures\" entries must be numbers");
      measures.push_back(m.get<double>());
    }
    return GraphonModel(StepGraphon(std::move(p), std::move(measures)));
  }

  if (type == "cayley") {
    if (!j.contains("group") || !j.at("group").is_string())
      fail(errc::parse, "cayley model needs a \"group\" name");
    if (!j.contains("gamma") || !j.at("gamma").is_object())
      fail(errc::parse, "cayley model needs a \"gamma\" object");
    auto group = group_from_name(j.at("group").get<std::string>());
    const int degree = group->element(0).degree();
    std::vector<double> values(group->order(), 0.0);
    for (const auto& [key, val] : j.at("gamma").items()) {
      if (!val.is_number()) fail(errc::parse, "cayley model gamma values must be numbers");
      const Permutation p = Permutation::parse_cycles(degree, key);
      values[group->index_of(p)] = val.get<double>();
    }
    return GraphonModel(CayleyFunction(std::move(group), std::move(values)));
  }

  if (type == "torus") {
    if (!j.contains("d") || !j.at("d").is_number() || !j.contains("p") ||
        !j.at("p").is_number())
      fail(errc::parse, "torus model needs numeric \"d\" and \"p\"");
    return GraphonModel(
        TorusCayleyGraphon(j.at("d").get<double>(), j.at("p").get<double>()));
  }

  fail(errc::parse, "unknown graphon model type \"" + type + "\"");
}

}  // namespace

GraphonModel GraphonModel::from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse, "graphon model is not valid JSON");
  return parse_model(j);
}

std::string GraphonModel::to_json() const {
  json j;
  if (const auto* step = std::get_if<StepGraphon>(&model_)) {
    j["type"] = "step";
    json rows = json::array();
    const std::size_t k = step->num_blocks();
    for (std::size_t i = 0; i < k; ++i) {
      json row = json::array();
      for (std::size_t c = 0; c < k; ++c) row.push_back(step->link_probabilities(i, c));
      rows.push_back(std::move(row));
    }
    j["P"] = std::move(rows);
    j["measures"] = step->block_measures;
  } else if (const auto* cayley = std::get_if<CayleyFunction>(&model_)) {
    j["type"] = "cayley";
    const FiniteGroup& g = *cayley->group;
    j["group"] = "S" + std::to_string(g.element(0).degree());
    json gamma = json::object();
    for (std::size_t i = 0; i < g.order(); ++i)
      if (cayley->values[i] != 0.0)
        gamma[g.element(i).cycle_string()] = cayley->values[i];
    j["gamma"] = std::move(gamma);
  } else {
    const auto& torus = std::get<TorusCayleyGraphon>(model_);
    j["type"] = "torus";
    j["d"] = torus.d;
    j["p"] = torus.p;
  }
  return j.dump();
}

StepGraphon GraphonModel::as_step() const {
  if (const auto* step = std::get_if<StepGraphon>(&model_)) return *step;
  if (const auto* cayley = std::get_if<CayleyFunction>(&model_))
    return cayley_to_step(*cayley);
  fail(errc::invalid_argument, "torus graphon has no finite step form; discretize instead");
}

GraphonModel s3_reference_model() {
  auto group = symmetric_group(3);
  std::vector<double> gamma(6, 0.0);
  gamma[group->index_of(Permutation::parse_cycles(3, "(1)"))] = 0.6;
  gamma[group->index_of(Permutation::parse_cycles(3, "(1 2)"))] = 0.3;
  gamma[group->index_of(Permutation::parse_cycles(3, "(1 3)"))] = 0.1;
  return GraphonModel(CayleyFunction(std::move(group), std::move(gamma)));
}

}  // namespace ggsp
