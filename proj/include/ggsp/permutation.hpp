#pragma once

#include <string>
#include <vector>

namespace ggsp {

/// Permutation of {0,...,n-1} in one-line notation: images[i] is the image
/// of i. Composition applies the right factor first: (a*b)(i) = a(b(i)).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  /// Product of the given cycles, composed right to left. Cycle entries are
  /// 1-based, as in "(1 2)(3 4)". Rejects out-of-range or repeated entries
  /// within one cycle.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  /// Parses cycle notation such as "(1 2)(3 4)", "(1 2 3)" or "(1)".
  /// An empty string or "(1)"-style singleton cycles give the identity.
  static Permutation parse_cycles(int degree, const std::string& text);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation compose(const Permutation& rhs) const;  // (*this) after rhs
  Permutation inverse() const;
  bool is_identity() const;

  /// Disjoint-cycle string, 1-based, fixed points omitted; "(1)" for the
  /// identity so that every permutation has a nonempty canonical form.
  std::string cycle_string() const;

  /// Rank in the lexicographic enumeration of all degree() ! permutations.
  std::size_t lex_rank() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace ggsp
