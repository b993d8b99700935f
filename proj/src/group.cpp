#include "ggsp/group.hpp"

#include <algorithm>
#include <cmath>

#include "ggsp/error.hpp"

namespace ggsp {

FiniteGroup::FiniteGroup(std::vector<Permutation> elements) : elements_(std::move(elements)) {
  const std::size_t n = elements_.size();
  if (n == 0) fail(errc::invalid_argument, "group needs at least one element");
  if (n > 65535) fail(errc::invalid_argument, "group too large for 16-bit index tables");
  mul_table_.resize(n * n);
  inv_table_.resize(n);
  bool have_identity = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (elements_[i].is_identity()) {
      identity_index_ = i;
      have_identity = true;
      break;
    }
  }
  if (!have_identity) fail(errc::invalid_argument, "group element list lacks the identity");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      mul_table_[i * n + j] = static_cast<std::uint16_t>(index_of(elements_[i].compose(elements_[j])));
    inv_table_[i] = static_cast<std::uint16_t>(index_of(elements_[i].inverse()));
  }
}

std::size_t FiniteGroup::index_of(const Permutation& p) const {
  // Elements are in lexicographic order for the full symmetric group, so the
  // Lehmer rank is the index. Fall back to search for any other element list.
  const std::size_t r = p.lex_rank();
  if (r < elements_.size() && elements_[r] == p) return r;
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p))
    fail(errc::invalid_argument, "element not in group: " + p.cycle_string());
  return static_cast<std::size_t>(it - elements_.begin());
}

std::shared_ptr<const FiniteGroup> symmetric_group(int n) {
  if (n < 1 || n > 8)
    fail(errc::invalid_argument, "symmetric_group: n must be in 1..8, got " + std::to_string(n));
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  std::vector<Permutation> elems;
  do {
    elems.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return std::make_shared<const FiniteGroup>(std::move(elems));
}

std::shared_ptr<const FiniteGroup> group_from_name(const std::string& name) {
  if (name.size() >= 2 && (name[0] == 'S' || name[0] == 's')) {
    int n = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') n = -1;
      if (n < 0) break;
      n = n * 10 + (name[i] - '0');
    }
    if (n >= 1) return symmetric_group(n);
  }
  fail(errc::parse, "unknown group name: " + name + " (expected S1..S8)");
}

TorusPoint::TorusPoint(double v) : value(v) {
  if (!(v >= 0.0 && v < 1.0))
    fail(errc::invalid_argument, "torus point must lie in [0,1), got " + std::to_string(v));
}

TorusPoint TorusPoint::add(TorusPoint other) const {
  double s = value + other.value;
  if (s >= 1.0) s -= 1.0;
  return TorusPoint(s);
}

TorusPoint TorusPoint::inverse_point() const {
  return TorusPoint(value == 0.0 ? 0.0 : 1.0 - value);
}

double torus_distance(TorusPoint x, TorusPoint y) {
  const double d = std::abs(x.value - y.value);
  return std::min(d, 1.0 - d);
}

}  // namespace ggsp
