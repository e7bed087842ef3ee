#ifndef SYMGRASS_PERMUTATION_HPP
#define SYMGRASS_PERMUTATION_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "symgrass/errors.hpp"

namespace symgrass {

/// A bijection of the variable indices {0..n-1}. Acting on polynomials it
/// substitutes x_i -> x_{image(i)}; composition is (a * b)(i) = a(b(i)), so
/// acting by a * b equals acting by b first and then by a.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || v >= size() || seen[v]) throw UsageError("permutation is not a bijection on {1.." + std::to_string(size()) + "}");
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
  }

  /// Swap of two 0-based indices.
  static Permutation transposition(int n, int i, int j) {
    auto p = identity(n);
    if (i < 0 || j < 0 || i >= n || j >= n) throw UsageError("transposition index out of range");
    std::swap(p.images_[i], p.images_[j]);
    return p;
  }

  /// Images written 1-based, the usual way of writing permutations:
  /// from_one_based({2, 3, 1}) sends 1->2, 2->3, 3->1.
  static Permutation from_one_based(const std::vector<int>& images) {
    std::vector<int> zero_based(images.size());
    std::transform(images.begin(), images.end(), zero_based.begin(), [](int v) { return v - 1; });
    return Permutation(std::move(zero_based));
  }

  /// All n! permutations in lexicographic order of their image lists.
  static std::vector<Permutation> all(int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::vector<Permutation> out;
    do {
      out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(i); }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw UsageError("composing permutations of different degree");
    std::vector<int> images(a.images_.size());
    for (int i = 0; i < a.size(); ++i) images[i] = a.images_[b.images_[i]];
    return Permutation(std::move(images));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// Cycle notation, 1-based, e.g. "(12)" or "(132)"; identity is "()".
  std::string cycles() const {
    std::string out;
    std::vector<bool> done(images_.size(), false);
    for (int start = 0; start < size(); ++start) {
      if (done[start] || images_[start] == start) continue;
      out += '(';
      for (int i = start; !done[i]; i = images_[i]) {
        done[i] = true;
        out += std::to_string(i + 1);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

 private:
  std::vector<int> images_;
};

}  // namespace symgrass

#endif  // SYMGRASS_PERMUTATION_HPP
