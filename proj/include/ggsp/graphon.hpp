#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ggsp/group.hpp"
#include "ggsp/matrix.hpp"

namespace ggsp {

/// Step graphon (stochastic block model): k blocks with link-probability
/// matrix P and block measures summing to 1.
struct StepGraphon {
  Matrix link_probabilities;          // k x k, symmetric, entries in [0,1]
  std::vector<double> block_measures; // positive, sums to 1 within 1e-12

  StepGraphon(Matrix p, std::vector<double> measures);

  std::size_t num_blocks() const { return block_measures.size(); }
};

/// Cayley function gamma on a finite group: gamma(x) = gamma(x^-1), values
/// in [0,1]. Defines the Cayley graphon w(x,y) = gamma(x y^-1).
struct CayleyFunction {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<double> values;  // indexed by group element

  CayleyFunction(std::shared_ptr<const FiniteGroup> g, std::vector<double> vals);
};

/// Circulant graphon on the 1-d torus: w(x,y) = 1-p inside circular distance
/// d, p outside. The small-world (Watts-Strogatz style) model.
struct TorusCayleyGraphon {
  double d;
  double p;

  TorusCayleyGraphon(double d_, double p_);
};

enum class SignalSpace { graph_vertices, graphon_blocks, group_elements };

struct Signal {
  std::vector<double> values;
  SignalSpace space = SignalSpace::graph_vertices;
};

/// The Cayley graphon of a finite group as a step graphon on |G| equal
/// blocks: P[i][j] = gamma(g_i g_j^-1), measures 1/|G|.
StepGraphon cayley_to_step(const CayleyFunction& gamma);

double eval_torus(const TorusCayleyGraphon& w, TorusPoint x, TorusPoint y);

/// Finite matrices of the integral operator of a step graphon.
struct StepOperator {
  Matrix weighted;     // M[i][j] = P[i][j] * mu_j; eigenvalues of the operator
  Matrix symmetrized;  // D^1/2 P D^1/2; same eigenvalues, orthogonal eigenvectors
};

StepOperator step_operator_matrix(const StepGraphon& w);

struct TorusEigenvalue {
  int frequency = 0;      // 0, 1, 2, ...
  double value = 0.0;
  int multiplicity = 1;   // 1 for frequency 0, else 2 (cosine and sine)
};

/// Closed-form spectrum of the torus graphon's convolution operator:
/// lambda(0) = 2d(1-p) + (1-2d)p, lambda(k) = (1-2p) sin(2 pi k d)/(pi k).
std::vector<TorusEigenvalue> torus_spectrum(const TorusCayleyGraphon& w, int k_max);

/// A graphon model of any supported kind, with JSON round-tripping.
/// JSON forms:
///   {"type":"step","P":[[...]],"measures":[...]}
///   {"type":"cayley","group":"S3","gamma":{"(1)":0.6,"(1 2)":0.3}}
///   {"type":"torus","d":0.2,"p":0.08}
class GraphonModel {
 public:
  using Variant = std::variant<StepGraphon, CayleyFunction, TorusCayleyGraphon>;

  explicit GraphonModel(Variant model) : model_(std::move(model)) {}

  static GraphonModel from_json(const std::string& text);
  std::string to_json() const;

  const Variant& value() const { return model_; }
  bool is_torus() const { return std::holds_alternative<TorusCayleyGraphon>(model_); }

  /// Step form of the model; rejects torus models.
  StepGraphon as_step() const;

 private:
  Variant model_;
};

/// The S3 Cayley graphon used throughout: gamma = 0.6 on the identity, 0.3 on
/// (1 2), 0.1 on (1 3), zero elsewhere. Six equal blocks after conversion.
GraphonModel s3_reference_model();

}  // namespace ggsp
