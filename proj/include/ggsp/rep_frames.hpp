#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ggsp/graphon.hpp"
#include "ggsp/group.hpp"
#include "ggsp/matrix.hpp"
#include "ggsp/spectral.hpp"

namespace ggsp {

/// Irreducible orthogonal representation of S_n in Young's orthogonal form,
/// labelled by a partition of n, with one matrix per group element (indexed
/// as in the FiniteGroup enumeration).
struct Irrep {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<int> partition;  // weakly decreasing, sums to n
  std::size_t dim = 0;
  std::vector<Matrix> matrices;  // matrices[i] = pi(g_i)

  std::string partition_label() const;  // e.g. "[3,1]"
};

/// Inverse-closed generating set without the identity, over a fixed group.
class GeneratingSet {
 public:
  GeneratingSet(std::shared_ptr<const FiniteGroup> group,
                std::vector<std::size_t> element_indices);

  static GeneratingSet from_cycles(std::shared_ptr<const FiniteGroup> group,
                                   const std::vector<std::string>& cycles);

  const FiniteGroup& group() const { return *group_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<std::size_t> indices_;
};

/// A finite frame: vectors spanning R^space_dim with frame bounds
/// A ||f||^2 <= sum <f,v_i>^2 <= B ||f||^2.
struct Frame {
  std::vector<std::vector<double>> vectors;
  std::size_t space_dim = 0;
  double lower_bound = 0.0;  // A
  double upper_bound = 0.0;  // B

  std::size_t size() const { return vectors.size(); }
  bool is_tight(double tol = 1e-10) const {
    return std::abs(lower_bound - upper_bound) <= tol;
  }
};

/// All irreps of S_n (2 <= n <= 5), one per partition in descending
/// lexicographic order, built from standard Young tableaux axial distances
/// for adjacent transpositions and bubble-sort factorization for the rest.
std::vector<Irrep> young_orthogonal_irreps(int n);

/// The symbol pi(S) = sum over s in S of pi(s); symmetric since S = S^-1.
Matrix pi_of_S(const Irrep& irrep, const GeneratingSet& s);

/// Three unit vectors at mutual 120 degrees in the plane spanned by an
/// orthonormal pair: b1 cos(t) + b2 sin(t) for t in {90, 210, 330} degrees.
/// Tight frame for the plane with bounds A = B = 3/2.
Frame mercedes_benz(const std::vector<double>& b1, const std::vector<double>& b2);

/// Adjacency matrix of the Cayley graph of (G, S) under the left shift
/// (A f)(g) = sum over s of f(sg): A[i][j] = 1 iff g_j g_i^-1 is in S.
Matrix cayley_adjacency(const GeneratingSet& s);

/// The lifted frame for l^2(G) with the eigenvalue each vector carries.
struct LiftedFrame {
  Frame frame;                      // |G|-dimensional vectors, Parseval
  std::vector<double> eigenvalues;  // per vector, from its source pi(S) eigenspace
  std::vector<std::string> sources; // per vector, partition label of its irrep
};

/// Lifts the per-irrep eigenspace frames of pi(S) (the eigenvector for
/// simple eigenvalues, Mercedes-Benz for a 2-dim eigenspace) through matrix
/// coefficients g -> sqrt(d/|G|) (pi(g^-1) v)_j, rescaled per eigenspace so
/// the union is a Parseval frame whose vectors diagonalize the Cayley shift.
LiftedFrame lift_frame(const std::vector<Irrep>& irreps, const GeneratingSet& s);

/// Analysis coefficients <f, v_i> under the counting inner product.
std::vector<double> frame_analysis(const Frame& frame, const Signal& f);

/// Synthesis sum_i c_i v_i (reconstruction for Parseval frames).
Signal frame_synthesis(const Frame& frame, const std::vector<double>& coeffs);

/// Per-irrep summary for the verification report.
struct IrrepReport {
  std::string partition;
  std::size_t dim = 0;
  std::vector<double> symbol_eigenvalues;   // pi(S) spectrum, descending
  std::vector<std::size_t> multiplicities;  // cluster sizes, left to right
};

/// Residuals of every property the frame construction promises, with the
/// thresholds they are held to.
struct FrameVerification {
  double homomorphism_residual = 0.0;    // max entry error over all pairs, <= 1e-9
  double orthogonality_residual = 0.0;   // matrix-coefficient sums, <= 1e-8
  double frame_operator_residual = 0.0;  // max |sum v v^T - I| entry, <= 1e-10
  double eigenvector_residual = 0.0;     // max ||A v - lambda v||, <= 1e-9
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  std::size_t repeated_eigenvalue_irreps = 0;  // irreps with a repeated pi(S) eigenvalue
  std::vector<IrrepReport> irreps;
  bool pass = false;
};

FrameVerification verify_frame_system(const std::vector<Irrep>& irreps,
                                      const GeneratingSet& s,
                                      const LiftedFrame& lifted);

/// {"group":"S4","S":[...],"vectors":[...],"eigenvalues":[...],"bounds":[A,B]}
std::string frames_json(const GeneratingSet& s, const LiftedFrame& lifted);

/// Plain-text table: irrep, dim, pi(S) eigenvalues, multiplicities, then the
/// verification residuals.
std::string verification_report_text(const FrameVerification& v);

/// S = {(1 2), (2 3), (3 4), (1 2)(3 4)} on S4.
GeneratingSet s4_default_generating_set();

}  // namespace ggsp
