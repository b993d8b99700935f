#include "ggsp/rep_frames.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <utility>

#include <json.hpp>

#include "ggsp/error.hpp"

namespace ggsp {

namespace {

// Partitions of n in descending lexicographic order: [n] first, [1,...,1] last.
void gen_partitions(int n, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

// A standard Young tableau as the cell (row, col) of each value 1..n.
using Tableau = std::vector<std::pair<int, int>>;

void gen_syt(const std::vector<int>& shape, int value, int n,
             std::vector<int>& fill, Tableau& pos, std::vector<Tableau>& out) {
  if (value == n) {
    out.push_back(pos);
    return;
  }
  for (std::size_t r = 0; r < shape.size(); ++r) {
    if (fill[r] >= shape[r]) continue;
    if (r > 0 && fill[r - 1] <= fill[r]) continue;  // cell above must be filled
    pos[value] = {int(r), fill[r]};
    ++fill[r];
    gen_syt(shape, value + 1, n, fill, pos, out);
    --fill[r];
  }
}

std::vector<Tableau> standard_tableaux(const std::vector<int>& shape, int n) {
  std::vector<Tableau> out;
  std::vector<int> fill(shape.size(), 0);
  Tableau pos(n);
  gen_syt(shape, 0, n, fill, pos, out);
  return out;
}

// Young's orthogonal form on adjacent transpositions: in the tableau basis,
// t_k = (k, k+1) acts on e_T with diagonal 1/d and, when swapping k and k+1
// yields another standard tableau, off-diagonal sqrt(1 - 1/d^2); d is the
// axial distance content(k+1) - content(k).
std::vector<Matrix> generator_matrices(const std::vector<Tableau>& tableaux, int n) {
  const std::size_t dim = tableaux.size();
  std::map<Tableau, std::size_t> index;
  for (std::size_t t = 0; t < dim; ++t) index[tableaux[t]] = t;

  std::vector<Matrix> gens;
  for (int k = 0; k + 1 < n; ++k) {  // t_{k+1} swaps values k+1, k+2 (1-based)
    Matrix m(dim, dim);
    for (std::size_t t = 0; t < dim; ++t) {
      const auto [r1, c1] = tableaux[t][k];
      const auto [r2, c2] = tableaux[t][k + 1];
      if (r1 == r2) {
        m(t, t) = 1.0;
        continue;
      }
      if (c1 == c2) {
        m(t, t) = -1.0;
        continue;
      }
      const int d = (c2 - r2) - (c1 - r1);
      m(t, t) = 1.0 / double(d);
      Tableau swapped = tableaux[t];
      std::swap(swapped[k], swapped[k + 1]);
      const auto it = index.find(swapped);
      if (it != index.end())
        m(t, it->second) = std::sqrt(1.0 - 1.0 / double(d) / double(d));
    }
    gens.push_back(std::move(m));
  }
  return gens;
}

// pi(p) from the bubble-sort factorization of the one-line word: sorting the
// word with adjacent swaps at positions j1..jm composes p with t_j1..t_jm on
// the right down to the identity, so pi(p) = pi(t_jm) ... pi(t_j1).
Matrix element_matrix(const std::vector<Matrix>& gens, std::size_t dim,
                      const Permutation& p) {
  std::vector<int> word = p.images();
  std::vector<std::size_t> swaps;
  for (bool dirty = true; dirty;) {
    dirty = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        swaps.push_back(i);
        dirty = true;
      }
  }
  Matrix m = Matrix::identity(dim);
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) m = m * gens[*it];
  return m;
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  return &a == &b || a.elements() == b.elements();
}

std::string format_double(double v, const char* fmt = "%.6f") {
  char buf[48];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

}  // namespace

std::string Irrep::partition_label() const {
  std::string out = "[";
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(partition[i]);
  }
  return out + "]";
}

std::vector<Irrep> young_orthogonal_irreps(int n) {
  if (n < 2 || n > 5)
    fail(errc::invalid_argument, "irreps are built for symmetric groups S2 through S5");
  auto group = symmetric_group(n);

  std::vector<std::vector<int>> partitions;
  std::vector<int> cur;
  gen_partitions(n, n, cur, partitions);

  std::vector<Irrep> out;
  for (auto& shape : partitions) {
    const std::vector<Tableau> tableaux = standard_tableaux(shape, n);
    const std::vector<Matrix> gens = generator_matrices(tableaux, n);
    Irrep irrep;
    irrep.group = group;
    irrep.partition = shape;
    irrep.dim = tableaux.size();
    irrep.matrices.reserve(group->order());
    for (std::size_t i = 0; i < group->order(); ++i)
      irrep.matrices.push_back(element_matrix(gens, irrep.dim, group->element(i)));
    out.push_back(std::move(irrep));
  }
  return out;
}

GeneratingSet::GeneratingSet(std::shared_ptr<const FiniteGroup> group,
                             std::vector<std::size_t> element_indices)
    : group_(std::move(group)), indices_(std::move(element_indices)) {
  if (!group_) fail(errc::invalid_argument, "generating set needs a group");
  std::set<std::size_t> seen;
  for (std::size_t i : indices_) {
    if (i >= group_->order())
      fail(errc::invalid_argument, "generating set element index out of range");
    if (i == group_->identity_index())
      fail(errc::invalid_argument, "generating set must not contain the identity");
    if (!seen.insert(i).second)
      fail(errc::invalid_argument, "generating set has a repeated element");
  }
  for (std::size_t i : indices_)
    if (!seen.count(group_->inv(i)))
      fail(errc::invalid_argument, "generating set must be closed under inverses");
}

GeneratingSet GeneratingSet::from_cycles(std::shared_ptr<const FiniteGroup> group,
                                         const std::vector<std::string>& cycles) {
  if (!group) fail(errc::invalid_argument, "generating set needs a group");
  const int degree = group->element(0).degree();
  std::vector<std::size_t> indices;
  for (const auto& text : cycles)
    indices.push_back(group->index_of(Permutation::parse_cycles(degree, text)));
  return GeneratingSet(std::move(group), std::move(indices));
}

Matrix pi_of_S(const Irrep& irrep, const GeneratingSet& s) {
  if (!same_group(*irrep.group, s.group()))
    fail(errc::invalid_argument, "irrep and generating set use different groups");
  Matrix m(irrep.dim, irrep.dim);
  for (std::size_t i : s.indices()) m = m + irrep.matrices[i];
  return m;
}

Frame mercedes_benz(const std::vector<double>& b1, const std::vector<double>& b2) {
  if (b1.size() != b2.size() || b1.empty())
    fail(errc::invalid_argument, "plane basis vectors must have equal nonzero length");
  const double tol = 1e-10;
  if (std::abs(norm2(b1) - 1.0) > tol || std::abs(norm2(b2) - 1.0) > tol ||
      std::abs(dot(b1, b2)) > tol)
    fail(errc::invalid_argument, "plane basis must be orthonormal");

  // cos/sin of 90, 210, 330 degrees, written exactly.
  const double root3_half = std::sqrt(3.0) / 2.0;
  const double cs[3][2] = {{0.0, 1.0}, {-root3_half, -0.5}, {root3_half, -0.5}};

  Frame f;
  f.space_dim = b1.size();
  f.lower_bound = 1.5;
  f.upper_bound = 1.5;
  for (const auto& [c, s] : cs) {
    std::vector<double> v(b1.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * b1[i] + s * b2[i];
    f.vectors.push_back(std::move(v));
  }
  return f;
}

Matrix cayley_adjacency(const GeneratingSet& s) {
  const FiniteGroup& g = s.group();
  const std::size_t n = g.order();
  std::vector<char> in_s(n, 0);
  for (std::size_t i : s.indices()) in_s[i] = 1;
  Matrix a(n, n);
  // Left shift (A f)(g) = sum over s of f(sg): row i collects f at g_j = s g_i.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (in_s[g.mul(j, g.inv(i))]) a(i, j) = 1.0;
  return a;
}

LiftedFrame lift_frame(const std::vector<Irrep>& irreps, const GeneratingSet& s) {
  const FiniteGroup& g = s.group();
  const std::size_t order = g.order();
  std::size_t dim_sq = 0;
  for (const auto& irrep : irreps) {
    if (!same_group(*irrep.group, g))
      fail(errc::invalid_argument, "irrep and generating set use different groups");
    dim_sq += irrep.dim * irrep.dim;
  }
  if (dim_sq != order)
    fail(errc::invalid_argument, "irrep list is incomplete for the group");

  LiftedFrame lifted;
  lifted.frame.space_dim = order;

  for (const auto& irrep : irreps) {
    const std::size_t d = irrep.dim;
    const Spectrum spec = eig_sym(pi_of_S(irrep, s), std::vector<double>(d, 1.0));
    for (const auto& c : cluster_eigenvalues(spec, 1e-9)) {
      std::vector<std::vector<double>> plane;
      double bound = 1.0;
      if (c.dimension() == 1) {
        plane.emplace_back(spec.eigenvector(c.first), spec.eigenvector(c.first) + d);
      } else if (c.dimension() == 2) {
        std::vector<double> a(spec.eigenvector(c.first), spec.eigenvector(c.first) + d);
        std::vector<double> b(spec.eigenvector(c.last), spec.eigenvector(c.last) + d);
        Frame mb = mercedes_benz(a, b);
        plane = std::move(mb.vectors);
        bound = mb.lower_bound;
      } else {
        fail(errc::numeric,
             "no frame rule for an eigenspace of dimension > 2 in " +
                 irrep.partition_label());
      }
      // Matrix-coefficient lift: u(g) = sqrt(d/|G|) (pi(g^-1) v)_j, divided
      // by sqrt of the eigenspace frame bound so the union is Parseval.
      const double scale = std::sqrt(double(d) / double(order)) / std::sqrt(bound);
      for (const auto& v : plane)
        for (std::size_t j = 0; j < d; ++j) {
          std::vector<double> u(order);
          for (std::size_t i = 0; i < order; ++i) {
            const Matrix& m = irrep.matrices[g.inv(i)];
            double acc = 0.0;
            for (std::size_t col = 0; col < d; ++col) acc += m(j, col) * v[col];
            u[i] = scale * acc;
          }
          lifted.frame.vectors.push_back(std::move(u));
          lifted.eigenvalues.push_back(c.representative);
          lifted.sources.push_back(irrep.partition_label());
        }
    }
  }

  // Frame bounds: extreme eigenvalues of the frame operator sum v v^T.
  Matrix op(order, order);
  for (const auto& v : lifted.frame.vectors)
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j) op(i, j) += v[i] * v[j];
  const Spectrum op_spec = eig_sym(op, std::vector<double>(order, 1.0));
  lifted.frame.upper_bound = op_spec.eigenvalues.front();
  lifted.frame.lower_bound = op_spec.eigenvalues.back();
  return lifted;
}

std::vector<double> frame_analysis(const Frame& frame, const Signal& f) {
  if (f.values.size() != frame.space_dim)
    fail(errc::invalid_argument, "signal length does not match frame dimension");
  std::vector<double> coeffs;
  coeffs.reserve(frame.size());
  for (const auto& v : frame.vectors) coeffs.push_back(dot(f.values, v));
  return coeffs;
}

Signal frame_synthesis(const Frame& frame, const std::vector<double>& coeffs) {
  if (coeffs.size() != frame.size())
    fail(errc::invalid_argument, "one coefficient per frame vector required");
  Signal out;
  out.space = SignalSpace::group_elements;
  out.values.assign(frame.space_dim, 0.0);
  for (std::size_t i = 0; i < frame.size(); ++i)
    for (std::size_t j = 0; j < frame.space_dim; ++j)
      out.values[j] += coeffs[i] * frame.vectors[i][j];
  return out;
}

FrameVerification verify_frame_system(const std::vector<Irrep>& irreps,
                                      const GeneratingSet& s,
                                      const LiftedFrame& lifted) {
  const FiniteGroup& g = s.group();
  const std::size_t order = g.order();
  FrameVerification v;

  // Homomorphism: pi(ab) = pi(a) pi(b) over every pair.
  for (const auto& irrep : irreps)
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b) {
        const Matrix diff = irrep.matrices[g.mul(a, b)] -
                            irrep.matrices[a] * irrep.matrices[b];
        v.homomorphism_residual = std::max(v.homomorphism_residual, diff.max_abs());
      }

  // Orthogonality of matrix coefficients:
  // sum_g pi(g)_ij pi'(g)_kl = (|G|/d) [pi=pi'][i=k][j=l].
  for (std::size_t p = 0; p < irreps.size(); ++p)
    for (std::size_t q = 0; q < irreps.size(); ++q) {
      const auto& pi = irreps[p];
      const auto& pr = irreps[q];
      for (std::size_t i = 0; i < pi.dim; ++i)
        for (std::size_t j = 0; j < pi.dim; ++j)
          for (std::size_t k = 0; k < pr.dim; ++k)
            for (std::size_t l = 0; l < pr.dim; ++l) {
              double sum = 0.0;
              for (std::size_t e = 0; e < order; ++e)
                sum += pi.matrices[e](i, j) * pr.matrices[e](k, l);
              const double expected =
                  (p == q && i == k && j == l) ? double(order) / double(pi.dim) : 0.0;
              v.orthogonality_residual =
                  std::max(v.orthogonality_residual, std::abs(sum - expected));
            }
    }

  // Frame operator against the identity, plus the bounds themselves.
  Matrix op(order, order);
  for (const auto& vec : lifted.frame.vectors)
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j) op(i, j) += vec[i] * vec[j];
  const Matrix diff = op - Matrix::identity(order);
  v.frame_operator_residual = diff.max_abs();
  v.lower_bound = lifted.frame.lower_bound;
  v.upper_bound = lifted.frame.upper_bound;

  // Every lifted vector diagonalizes the Cayley shift.
  const Matrix adj = cayley_adjacency(s);
  for (std::size_t i = 0; i < lifted.frame.size(); ++i) {
    const auto& vec = lifted.frame.vectors[i];
    const std::vector<double> av = adj.matvec(vec);
    double err2 = 0.0;
    for (std::size_t j = 0; j < order; ++j) {
      const double r = av[j] - lifted.eigenvalues[i] * vec[j];
      err2 += r * r;
    }
    v.eigenvector_residual = std::max(v.eigenvector_residual, std::sqrt(err2));
  }

  // Per-irrep symbol spectra and multiplicity structure.
  for (const auto& irrep : irreps) {
    const Spectrum spec =
        eig_sym(pi_of_S(irrep, s), std::vector<double>(irrep.dim, 1.0));
    IrrepReport report;
    report.partition = irrep.partition_label();
    report.dim = irrep.dim;
    report.symbol_eigenvalues = spec.eigenvalues;
    bool repeated = false;
    for (const auto& c : cluster_eigenvalues(spec, 1e-9)) {
      report.multiplicities.push_back(c.dimension());
      if (c.dimension() > 1) repeated = true;
    }
    if (repeated) ++v.repeated_eigenvalue_irreps;
    v.irreps.push_back(std::move(report));
  }

  v.pass = v.homomorphism_residual <= 1e-9 && v.orthogonality_residual <= 1e-8 &&
           v.frame_operator_residual <= 1e-10 && v.eigenvector_residual <= 1e-9;
  return v;
}

std::string frames_json(const GeneratingSet& s, const LiftedFrame& lifted) {
  nlohmann::json j;
  j["group"] = "S" + std::to_string(s.group().element(0).degree());
  nlohmann::json gens = nlohmann::json::array();
  for (std::size_t i : s.indices()) gens.push_back(s.group().element(i).cycle_string());
  j["S"] = std::move(gens);
  j["vectors"] = lifted.frame.vectors;
  j["eigenvalues"] = lifted.eigenvalues;
  j["bounds"] =
      nlohmann::json::array({lifted.frame.lower_bound, lifted.frame.upper_bound});
  return j.dump();
}

std::string verification_report_text(const FrameVerification& v) {
  std::string out = "irrep        dim  symbol eigenvalues                 multiplicities\n";
  for (const auto& r : v.irreps) {
    std::string values, mults;
    for (std::size_t i = 0; i < r.symbol_eigenvalues.size(); ++i) {
      if (i) values += ", ";
      values += format_double(r.symbol_eigenvalues[i]);
    }
    for (std::size_t i = 0; i < r.multiplicities.size(); ++i) {
      if (i) mults += ",";
      mults += std::to_string(r.multiplicities[i]);
    }
    char line[192];
    std::snprintf(line, sizeof(line), "%-12s %-4zu %-34s %s\n", r.partition.c_str(),
                  r.dim, values.c_str(), mults.c_str());
    out += line;
  }
  out += "irreps with a repeated symbol eigenvalue: " +
         std::to_string(v.repeated_eigenvalue_irreps) + "\n";
  out += "homomorphism residual:   " + format_double(v.homomorphism_residual, "%.3e") +
         "  (threshold 1e-9)\n";
  out += "orthogonality residual:  " + format_double(v.orthogonality_residual, "%.3e") +
         "  (threshold 1e-8)\n";
  out += "frame operator residual: " + format_double(v.frame_operator_residual, "%.3e") +
         "  (threshold 1e-10)\n";
  out += "eigenvector residual:    " + format_double(v.eigenvector_residual, "%.3e") +
         "  (threshold 1e-9)\n";
  out += "frame bounds: A=" + format_double(v.lower_bound, "%.12f") +
         " B=" + format_double(v.upper_bound, "%.12f") + "\n";
  out += std::string("result: ") + (v.pass ? "PASS" : "FAIL") + "\n";
  return out;
}

GeneratingSet s4_default_generating_set() {
  return GeneratingSet::from_cycles(
      symmetric_group(4), {"(1 2)", "(2 3)", "(3 4)", "(1 2)(3 4)"});
}

}  // namespace ggsp
