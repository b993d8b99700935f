#include "ggsp/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "ggsp/error.hpp"

namespace ggsp {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) fail(errc::invalid_argument, "permutation degree must be >= 1");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      fail(errc::invalid_argument, "permutation images are not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 1) fail(errc::invalid_argument, "permutation degree must be >= 1");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation result = identity(degree);
  // Composing in listed order keeps the right-to-left convention: compose
  // applies its argument first, so the last cycle appended acts first.
  for (const auto& cyc : cycles) {
    std::vector<char> seen(degree + 1, 0);
    for (int v : cyc) {
      if (v < 1 || v > degree)
        fail(errc::invalid_argument, "cycle entry " + std::to_string(v) + " out of range 1.." +
                                         std::to_string(degree));
      if (seen[v]) fail(errc::invalid_argument, "repeated entry in cycle");
      seen[v] = 1;
    }
    if (cyc.size() < 2) continue;  // singleton or empty cycle is the identity
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (std::size_t t = 0; t < cyc.size(); ++t)
      img[cyc[t] - 1] = cyc[(t + 1) % cyc.size()] - 1;
    result = result.compose(Permutation(std::move(img)));
  }
  return result;
}

Permutation Permutation::parse_cycles(int degree, const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size() || text.substr(i) == "e")
    return identity(degree);
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') fail(errc::parse, "expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i == text.size()) fail(errc::parse, "unterminated cycle in: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail(errc::parse, "unexpected character in cycle notation: " + text);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      cyc.push_back(v);
    }
    cycles.push_back(std::move(cyc));
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (degree() != rhs.degree()) fail(errc::invalid_argument, "compose: degree mismatch");
  std::vector<int> img(images_.size());
  for (int i = 0; i < degree(); ++i) img[i] = images_[rhs.images_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 0; i < degree(); ++i) img[images_[i]] = i;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::cycle_string() const {
  std::vector<char> done(images_.size(), 0);
  std::ostringstream out;
  bool any = false;
  for (int start = 0; start < degree(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out << '(';
    int v = start;
    bool first = true;
    while (!done[v]) {
      done[v] = 1;
      if (!first) out << ' ';
      out << v + 1;
      first = false;
      v = images_[v];
    }
    out << ')';
    any = true;
  }
  return any ? out.str() : "(1)";
}

std::size_t Permutation::lex_rank() const {
  // Lehmer code: rank = sum over i of (#{j > i : images[j] < images[i]}) * (n-1-i)!
  const int n = degree();
  std::size_t factorial = 1;
  for (int k = 2; k < n; ++k) factorial *= k;  // (n-1)!
  std::size_t rank = 0;
  std::size_t f = factorial;
  for (int i = 0; i < n - 1; ++i) {
    std::size_t smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (images_[j] < images_[i]) ++smaller;
    rank += smaller * f;
    f /= (n - 1 - i);
  }
  return rank;
}

}  // namespace ggsp
