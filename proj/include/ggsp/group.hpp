#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ggsp/permutation.hpp"

namespace ggsp {

/// Finite permutation group with precomputed Cayley tables. Elements are in
/// lexicographic one-line order, so index 0 is always the identity and every
/// enumeration is reproducible.
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<Permutation> elements);

  std::size_t order() const { return elements_.size(); }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }

  std::size_t identity_index() const { return identity_index_; }
  std::size_t mul(std::size_t i, std::size_t j) const { return mul_table_[i * order() + j]; }
  std::size_t inv(std::size_t i) const { return inv_table_[i]; }
  std::size_t index_of(const Permutation& p) const;

 private:
  std::vector<Permutation> elements_;
  std::vector<std::uint16_t> mul_table_;
  std::vector<std::uint16_t> inv_table_;
  std::size_t identity_index_ = 0;
};

/// The full symmetric group on n symbols, 1 <= n <= 8 (table memory bounds n).
/// Deterministic: elements in lexicographic one-line order, identity first.
std::shared_ptr<const FiniteGroup> symmetric_group(int n);

/// Parses a group name of the form "S3", "S4", ...
std::shared_ptr<const FiniteGroup> group_from_name(const std::string& name);

/// Point on the 1-dimensional torus R/Z, the circle group under addition
/// mod 1.
struct TorusPoint {
  double value = 0.0;

  explicit TorusPoint(double v);
  TorusPoint add(TorusPoint other) const;
  TorusPoint inverse_point() const;
};

/// min(|x-y|, 1-|x-y|): the invariant (circular) distance on the torus.
double torus_distance(TorusPoint x, TorusPoint y);

}  // namespace ggsp
