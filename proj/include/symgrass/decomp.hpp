#ifndef SYMGRASS_DECOMP_HPP
#define SYMGRASS_DECOMP_HPP

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "symgrass/errors.hpp"
#include "symgrass/falg.hpp"
#include "symgrass/invariants.hpp"
#include "symgrass/linalg.hpp"
#include "symgrass/symmetry.hpp"

// Symmetric elements of the commutator ideal of F_3 as a module over the
// symmetric polynomials. The module is free on
//   f_{0,1,0}, f_{0,2,0}, f_{1,2,0}
// where f_{a,b,c} = (x1^a x2^b - x1^b x2^a) x3^c [x2,x1]
//                 + (x1^a x3^b - x1^b x3^a) x2^c [x3,x1]
//                 + (x2^a x3^b - x2^b x3^a) x1^c [x3,x2].

namespace symgrass {

struct FIndex {
  unsigned a = 0;
  unsigned b = 0;
  unsigned c = 0;

  unsigned total() const { return a + b + c; }

  /// Output order: (a+b+c, a, b, c).
  friend auto operator<=>(const FIndex& x, const FIndex& y) {
    return std::tuple(x.total(), x.a, x.b, x.c) <=> std::tuple(y.total(), y.a, y.b, y.c);
  }
  friend bool operator==(const FIndex&, const FIndex&) = default;
};

inline std::string to_string(const FIndex& i) {
  return "f(" + std::to_string(i.a) + "," + std::to_string(i.b) + "," + std::to_string(i.c) + ")";
}

inline AlgebraElement make_f(const FIndex& idx) {
  constexpr int n = 3;
  auto block = [&](int i, int j, int k) {
    // (x_i^a x_j^b - x_i^b x_j^a) x_k^c
    Monomial m1(n), m2(n);
    m1.set(i, idx.a);
    m1.set(j, idx.b);
    m1.set(k, idx.c);
    m2.set(i, idx.b);
    m2.set(j, idx.a);
    m2.set(k, idx.c);
    return Polynomial::term(m1) - Polynomial::term(m2);
  };
  AlgebraElement f(n);
  f.add_module_term({1, 0}, block(0, 1, 2));
  f.add_module_term({2, 0}, block(0, 2, 1));
  f.add_module_term({2, 1}, block(1, 2, 0));
  return f;
}

/// Coefficients of f_{0,1,0}, f_{0,2,0}, f_{1,2,0}.
struct GeneratorCombo {
  SigmaPolynomial c010{3};
  SigmaPolynomial c020{3};
  SigmaPolynomial c120{3};

  bool is_zero() const { return c010.is_zero() && c020.is_zero() && c120.is_zero(); }

  GeneratorCombo& operator+=(const GeneratorCombo& o) {
    c010 += o.c010;
    c020 += o.c020;
    c120 += o.c120;
    return *this;
  }
  GeneratorCombo& operator-=(const GeneratorCombo& o) {
    c010 -= o.c010;
    c020 -= o.c020;
    c120 -= o.c120;
    return *this;
  }
  friend GeneratorCombo operator+(GeneratorCombo x, const GeneratorCombo& y) { return x += y; }
  friend GeneratorCombo operator-(GeneratorCombo x, const GeneratorCombo& y) { return x -= y; }
  friend GeneratorCombo operator-(const GeneratorCombo& x) { return GeneratorCombo{-x.c010, -x.c020, -x.c120}; }
  friend GeneratorCombo operator*(const SigmaPolynomial& s, const GeneratorCombo& x) {
    return GeneratorCombo{s * x.c010, s * x.c020, s * x.c120};
  }
  friend GeneratorCombo operator*(const Rational& s, const GeneratorCombo& x) {
    return GeneratorCombo{s * x.c010, s * x.c020, s * x.c120};
  }
  friend bool operator==(const GeneratorCombo&, const GeneratorCombo&) = default;
};

inline const std::vector<FIndex>& generator_indices() {
  static const std::vector<FIndex> gens{{0, 1, 0}, {0, 2, 0}, {1, 2, 0}};
  return gens;
}

inline AlgebraElement evaluate(const GeneratorCombo& combo) {
  AlgebraElement out(3);
  out += eval_sigma(combo.c010) * make_f({0, 1, 0});
  out += eval_sigma(combo.c020) * make_f({0, 2, 0});
  out += eval_sigma(combo.c120) * make_f({1, 2, 0});
  return out;
}

/// sum delta_abc f_{a,b,c}; keys satisfy a < b.
using BasisExpansion = std::map<FIndex, SigmaPolynomial>;

inline AlgebraElement evaluate(const BasisExpansion& e) {
  AlgebraElement out(3);
  for (const auto& [idx, delta] : e) out += eval_sigma(delta) * make_f(idx);
  return out;
}

namespace detail {

inline void require_symmetric_module_element(const AlgebraElement& f) {
  if (f.arity() != 3) throw UsageError("expected an element of F_3, got arity " + std::to_string(f.arity()));
  if (!f.in_commutator_ideal()) throw DomainError("element has a nonzero scalar part; it is not in the commutator ideal");
  if (auto t = symmetry_violation(f)) throw DomainError("element is not symmetric: it changes under " + t->cycles());
}

}  // namespace detail

/// The coefficient p of [x2,x1] in a symmetric f. The other two coefficients
/// are forced: [x3,x1] carries p(x1,x3,x2) and [x3,x2] carries p(x2,x3,x1),
/// with p(x2,x1,x3) = -p. All three relations are checked.
inline Polynomial extract_structure(const AlgebraElement& f) {
  detail::require_symmetric_module_element(f);
  Polynomial p = f.coefficient({1, 0});
  if (!is_antisymmetric_12(p)) throw ConsistencyError("[x2,x1]-coefficient of a symmetric element is not antisymmetric in x1, x2");
  if (f.coefficient({2, 0}) != p.permuted(Permutation::from_one_based({1, 3, 2})))
    throw ConsistencyError("[x3,x1]-coefficient is not p(x1,x3,x2)");
  if (f.coefficient({2, 1}) != p.permuted(Permutation::from_one_based({2, 3, 1})))
    throw ConsistencyError("[x3,x2]-coefficient is not p(x2,x3,x1)");
  return p;
}

/// Expansion of a symmetric f in the f_{a,b,c} (a < b) with constant
/// coefficients. Since p is antisymmetric in x1, x2, it is a unique
/// K-combination of the (x1^a x2^b - x1^b x2^a) x3^c, and the coefficient of
/// f_{a,b,c} is the coefficient of x1^a x2^b x3^c in p. The f_{a,b,c} are
/// not independent over the symmetric polynomials (f_{0,1,1} = sigma1
/// f_{0,1,0} - f_{0,2,0}), so the constant-coefficient expansion is the
/// canonical one.
inline BasisExpansion expand_in_fbasis(const AlgebraElement& f) {
  Polynomial p = extract_structure(f);
  BasisExpansion out;
  for (unsigned d : f.degrees()) {
    for (const auto& [m, c] : p.homogeneous_component(d - 2)) {
      if (m[0] < m[1]) {
        out.emplace(FIndex{m[0], m[1], m[2]}, SigmaPolynomial::constant(3, c));
      } else if (m[0] == m[1]) {
        throw ConsistencyError("antisymmetric coefficient has a term on the diagonal");
      }
    }
  }
  if (evaluate(out) != f) throw ConsistencyError("f-basis expansion does not re-evaluate to its input");
  return out;
}

/// Rewrites f_{a,b,c} in the three free generators. Memoized on the
/// canonical index (a < b); entries are idempotent, so concurrent callers at
/// worst recompute the same value.
class FReducer {
 public:
  GeneratorCombo reduce(FIndex idx) {
    if (idx.a == idx.b) return {};
    if (idx.a > idx.b) return -reduce({idx.b, idx.a, idx.c});
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(idx); it != memo_.end()) return it->second;
    }
    GeneratorCombo result = compute(idx);
    std::lock_guard lock(mu_);
    return memo_.emplace(idx, std::move(result)).first->second;
  }

  std::map<FIndex, GeneratorCombo> table() const {
    std::lock_guard lock(mu_);
    return memo_;
  }

  /// Preloads entries (from a serialized cache). Entries for non-canonical
  /// indices are ignored.
  void preload(const std::map<FIndex, GeneratorCombo>& entries) {
    std::lock_guard lock(mu_);
    for (const auto& [idx, combo] : entries)
      if (idx.a < idx.b) memo_.emplace(idx, combo);
  }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return memo_.size();
  }

 private:
  static SigmaPolynomial sigma(int k) { return SigmaPolynomial::sigma(3, k); }

  GeneratorCombo compute(const FIndex& idx) {
    const unsigned a = idx.a, b = idx.b, c = idx.c;
    // f_{a+m,b+m,c+m} = sigma3^m f_{a,b,c}
    if (unsigned m = std::min(a, c); m > 0) return sigma(3).pow(m) * reduce({a - m, b - m, c - m});
    // f_{0,b,c} = nu_c f_{0,b,0} - f_{0,b+c,0} + f_{b,c,0}
    if (c > 0) return power_sum_sigma(static_cast<int>(c)) * reduce({0, b, 0}) - reduce({0, b + c, 0}) + reduce({b, c, 0});
    if (a == 0) {
      if (b == 1) return {SigmaPolynomial::constant(3, 1), {}, {}};
      if (b == 2) return {{}, SigmaPolynomial::constant(3, 1), {}};
      if (b == 3) return sigma(1) * reduce({0, 2, 0}) - sigma(2) * reduce({0, 1, 0});
      return sigma(1) * reduce({0, b - 1, 0}) - sigma(2) * reduce({0, b - 2, 0}) + sigma(3) * reduce({0, b - 3, 0});
    }
    if (a == 1 && b == 2) return {{}, {}, SigmaPolynomial::constant(3, 1)};
    if (b == 3) return sigma(1) * reduce({a, 2, 0}) - sigma(2) * reduce({a, 1, 0}) - sigma(3) * reduce({0, a, 0});
    return sigma(1) * reduce({a, b - 1, 0}) - sigma(2) * reduce({a, b - 2, 0}) + sigma(3) * reduce({a, b - 3, 0});
  }

  mutable std::mutex mu_;
  std::map<FIndex, GeneratorCombo> memo_;
};

inline FReducer& default_reducer() {
  static FReducer reducer;
  return reducer;
}

inline GeneratorCombo reduce_f(const FIndex& idx) { return default_reducer().reduce(idx); }

inline GeneratorCombo reduce_symmetric(const AlgebraElement& f, FReducer& reducer = default_reducer()) {
  GeneratorCombo out;
  for (const auto& [idx, delta] : expand_in_fbasis(f)) out += delta * reducer.reduce(idx);
  return out;
}

/// For symmetric f in the commutator ideal of F_2: the symmetric q with
/// f = q (x2 - x1) [x2,x1], written in e1 = x1 + x2, e2 = x1 x2.
inline SigmaPolynomial decompose_n2(const AlgebraElement& f) {
  if (f.arity() != 2) throw UsageError("decompose_n2 expects an element of F_2, got arity " + std::to_string(f.arity()));
  if (!f.in_commutator_ideal()) throw DomainError("element has a nonzero scalar part; it is not in the commutator ideal");
  if (auto t = symmetry_violation(f)) throw DomainError("element is not symmetric: it changes under " + t->cycles());
  Polynomial p = f.coefficient({1, 0});
  auto [q, rem] = divide(p, Polynomial::variable(2, 1) - Polynomial::variable(2, 0));
  if (!rem.is_zero()) throw ConsistencyError("[x2,x1]-coefficient of a symmetric element is not divisible by x2 - x1");
  return decompose_symmetric(q);
}

// Linear-algebra checks over the free generators ---------------------------

/// sigma1^i sigma2^j sigma3^k with i + 2j + 3k = weight, in deglex order.
inline std::vector<Monomial> sigma_monomials_of_weight(unsigned weight) {
  std::vector<Monomial> out;
  for (unsigned k = 0; 3 * k <= weight; ++k)
    for (unsigned j = 0; 3 * k + 2 * j <= weight; ++j) out.push_back(Monomial(3, {weight - 3 * k - 2 * j, j, k}));
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

using Coordinate = std::pair<int, Monomial>;  // (-1 scalar | 3*hi+lo, monomial)

inline linalg::SparseVector<Coordinate> coordinates(const AlgebraElement& e) {
  linalg::SparseVector<Coordinate> v;
  for (const auto& [m, c] : e.scalar()) v.emplace(Coordinate{-1, m}, c);
  for (const auto& [ci, p] : e.module())
    for (const auto& [m, c] : p) v.emplace(Coordinate{3 * ci.hi + ci.lo, m}, c);
  return v;
}

struct GradedColumns {
  std::vector<linalg::SparseVector<Coordinate>> columns;
  std::vector<std::pair<std::size_t, Monomial>> labels;  // (generator slot, sigma monomial)
};

inline GradedColumns graded_columns(const std::vector<AlgebraElement>& generators, unsigned degree) {
  GradedColumns out;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    unsigned dg = generators[g].degree();
    if (dg > degree) continue;
    for (const Monomial& s : sigma_monomials_of_weight(degree - dg)) {
      out.columns.push_back(coordinates(eval_sigma(SigmaPolynomial::monomial(s)) * generators[g]));
      out.labels.emplace_back(g, s);
    }
  }
  return out;
}

inline std::vector<SigmaPolynomial> to_coefficients(const GradedColumns& cols, const linalg::SparseVector<int>& x, std::size_t count) {
  std::vector<SigmaPolynomial> out(count, SigmaPolynomial(3));
  for (const auto& [i, c] : x) out[cols.labels[i].first] += SigmaPolynomial::monomial(cols.labels[i].second, c);
  return out;
}

}  // namespace detail

/// Coefficients s_i (symmetric, of matching degree) with
/// target = sum s_i generators[i] in the given homogeneous degree, if any.
inline std::optional<std::vector<SigmaPolynomial>> in_submodule(const AlgebraElement& target,
                                                                const std::vector<AlgebraElement>& generators,
                                                                unsigned degree) {
  auto cols = detail::graded_columns(generators, degree);
  auto x = linalg::solve(cols.columns, detail::coordinates(target.homogeneous_component(degree)));
  if (!x) return std::nullopt;
  return detail::to_coefficients(cols, *x, generators.size());
}

struct FreenessVerdict {
  bool independent = true;
  unsigned witness_degree = 0;
  std::vector<SigmaPolynomial> witness;  // one coefficient per generator
};

/// Searches every degree up to max_degree for symmetric s_i, not all zero,
/// with sum s_i generators[i] = 0. Generators must be homogeneous.
inline FreenessVerdict check_freeness(unsigned max_degree, const std::vector<AlgebraElement>& generators) {
  for (const auto& g : generators)
    if (g.degrees().size() > 1) throw UsageError("freeness check needs homogeneous generators");
  for (unsigned d = 0; d <= max_degree; ++d) {
    auto cols = detail::graded_columns(generators, d);
    auto kernel = linalg::kernel(cols.columns);
    if (!kernel.empty()) return {false, d, detail::to_coefficients(cols, kernel.front(), generators.size())};
  }
  return {};
}

inline std::vector<AlgebraElement> free_generators() {
  std::vector<AlgebraElement> out;
  for (const FIndex& i : generator_indices()) out.push_back(make_f(i));
  return out;
}

inline FreenessVerdict check_freeness(unsigned max_degree) {
  if (max_degree < 5) throw UsageError("freeness check needs degree >= 5 to reach all three generators");
  return check_freeness(max_degree, free_generators());
}

struct ExclusionCheck {
  FIndex generator;
  unsigned degree = 0;
  bool excluded = false;  // not in the submodule generated by the other two
};

/// For each generator, solves for it in the submodule generated by the other
/// two at its own degree.
inline std::vector<ExclusionCheck> minimality_checks() {
  const auto gens = free_generators();
  std::vector<ExclusionCheck> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<AlgebraElement> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    unsigned d = gens[i].degree();
    out.push_back({generator_indices()[i], d, !in_submodule(gens[i], others, d).has_value()});
  }
  return out;
}

inline bool check_minimality() {
  auto checks = minimality_checks();
  return std::all_of(checks.begin(), checks.end(), [](const ExclusionCheck& c) { return c.excluded; });
}

}  // namespace symgrass

#endif  // SYMGRASS_DECOMP_HPP
