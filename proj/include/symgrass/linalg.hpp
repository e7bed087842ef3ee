#ifndef SYMGRASS_LINALG_HPP
#define SYMGRASS_LINALG_HPP

#include <map>
#include <optional>
#include <vector>

#include "symgrass/rational.hpp"

namespace symgrass::linalg {

/// Sparse vector over Q; absent keys are zero, stored values are nonzero.
template <class Key>
using SparseVector = std::map<Key, Rational>;

/// axpy on sparse vectors: y += a * x, dropping cancelled entries.
template <class Key>
void add_scaled(SparseVector<Key>& y, const SparseVector<Key>& x, const Rational& a) {
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, a * v);
    if (!inserted) {
      it->second += a * v;
      if (sgn(it->second) == 0) y.erase(it);
    }
  }
}

/// Row-echelon basis of a subspace of Q^Key built incrementally with exact
/// arithmetic. Each stored row has leading entry 1 at its pivot, the
/// smallest key present, and no two rows share a pivot. Pivoting is fixed to
/// the first nonzero key, so the result depends only on the insertion order.
///
/// Every row also remembers which combination of inserted vectors produced
/// it, which turns the structure into a solver: a vector reducing to zero is
/// expressed through the inserted ones, and a dependent insertion yields a
/// kernel vector.
template <class Key>
class EchelonBasis {
 public:
  using Vector = SparseVector<Key>;
  using Combination = SparseVector<int>;

  struct Reduction {
    Vector residual;
    Combination combination;  // vector - residual = sum combination[i] * inserted[i]
  };

  explicit EchelonBasis(bool track = false) : track_(track) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }
  bool is_pivot(const Key& k) const { return rows_.count(k) != 0; }

  /// Reduces v against the basis. The residual has no pivot keys and is the
  /// unique representative of v + span in the span of non-pivot keys.
  Reduction reduce(Vector v) const {
    Reduction r;
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const Key pivot = it->first;
      const Rational factor = it->second;
      add_scaled(v, row->second.vector, Rational(-factor));
      if (track_) add_scaled(r.combination, row->second.combination, factor);
      it = v.upper_bound(pivot);
    }
    r.residual = std::move(v);
    return r;
  }

  /// Adds v; returns the kernel combination (sum c_i * inserted_i = 0) when v
  /// is dependent on the earlier insertions, std::nullopt when it extends the
  /// basis.
  std::optional<Combination> insert(const Vector& v) {
    const int index = static_cast<int>(inserted_++);
    Reduction r = reduce(v);
    Combination self;
    if (track_) {
      self = std::move(r.combination);
      for (auto& [i, c] : self) c = -c;
      self[index] = 1;
    }
    if (r.residual.empty()) return self;
    const Rational lead = r.residual.begin()->second;
    const Rational inv = 1 / lead;
    for (auto& [k, c] : r.residual) c *= inv;
    if (track_)
      for (auto& [i, c] : self) c *= inv;
    const Key pivot = r.residual.begin()->first;
    rows_.emplace(pivot, Row{std::move(r.residual), std::move(self)});
    return std::nullopt;
  }

  /// Expresses v as a combination of the inserted vectors, if it lies in
  /// their span. Requires tracking.
  std::optional<Combination> express(const Vector& v) const {
    Reduction r = reduce(v);
    if (!r.residual.empty()) return std::nullopt;
    return std::move(r.combination);
  }

 private:
  struct Row {
    Vector vector;
    Combination combination;
  };

  std::map<Key, Row> rows_;
  std::size_t inserted_ = 0;
  bool track_;
};

/// Kernel of the linear map sending unknown i to columns[i]: one basis
/// vector per dependent column, in column order.
template <class Key>
std::vector<SparseVector<int>> kernel(const std::vector<SparseVector<Key>>& columns) {
  EchelonBasis<Key> basis(true);
  std::vector<SparseVector<int>> out;
  for (const auto& col : columns)
    if (auto dep = basis.insert(col)) out.push_back(std::move(*dep));
  return out;
}

/// Some x with sum x_i columns[i] = target, or std::nullopt when target is
/// outside the column span.
template <class Key>
std::optional<SparseVector<int>> solve(const std::vector<SparseVector<Key>>& columns, const SparseVector<Key>& target) {
  EchelonBasis<Key> basis(true);
  for (const auto& col : columns) basis.insert(col);
  return basis.express(target);
}

}  // namespace symgrass::linalg

#endif  // SYMGRASS_LINALG_HPP
