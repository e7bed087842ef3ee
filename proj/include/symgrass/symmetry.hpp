#ifndef SYMGRASS_SYMMETRY_HPP
#define SYMGRASS_SYMMETRY_HPP

#include <optional>

#include "symgrass/falg.hpp"
#include "symgrass/permutation.hpp"
#include "symgrass/poly.hpp"

namespace symgrass {

/// Substitutes x_i -> x_{xi(i)}. The image of a sorted word
/// x_1^{a_1} x_2^{a_2} ... is x_{xi 1}^{a_1} x_{xi 2}^{a_2} ..., which is no
/// longer sorted and picks up commutator terms when renormalized. Module
/// terms just relabel, since brackets are central; a basic commutator whose
/// image has its arguments out of order flips sign.
inline AlgebraElement act(const Permutation& xi, const AlgebraElement& f) {
  const int n = f.arity();
  if (xi.size() != n) throw UsageError("permutation degree does not match arity");
  AlgebraElement out(n);
  for (const auto& [m, c] : f.scalar()) {
    AlgebraElement image = AlgebraElement::one(n);
    for (int i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      Monomial block(n);
      block.set(xi(i), m[i]);
      image = mul(image, AlgebraElement::from_scalar(Polynomial::term(block)));
    }
    out += c * image;
  }
  for (const auto& [c, p] : f.module()) {
    int hi = xi(c.hi), lo = xi(c.lo);
    Polynomial q = p.permuted(xi);
    if (hi > lo) {
      out.add_module_term({hi, lo}, q);
    } else {
      out.add_module_term({lo, hi}, -q);
    }
  }
  return out;
}

/// The generators of S_n that symmetry is tested against: (12), plus (13)
/// when n = 3.
inline std::vector<Permutation> symmetry_generators(int arity) {
  std::vector<Permutation> gens{Permutation::transposition(arity, 0, 1)};
  if (arity == 3) gens.push_back(Permutation::transposition(arity, 0, 2));
  return gens;
}

/// First generating transposition that moves f, if any.
inline std::optional<Permutation> symmetry_violation(const AlgebraElement& f) {
  for (const Permutation& t : symmetry_generators(f.arity()))
    if (act(t, f) != f) return t;
  return std::nullopt;
}

inline bool is_symmetric(const AlgebraElement& f) { return !symmetry_violation(f).has_value(); }

/// Reynolds operator: the average of f over S_n.
inline AlgebraElement symmetrize(const AlgebraElement& f) {
  AlgebraElement sum(f.arity());
  auto perms = Permutation::all(f.arity());
  for (const Permutation& xi : perms) sum += act(xi, f);
  return sum * Rational(1, static_cast<unsigned long>(perms.size()));
}

/// p(x2, x1, x3) = -p(x1, x2, x3).
inline bool is_antisymmetric_12(const Polynomial& p) {
  if (p.arity() != 3) throw UsageError("is_antisymmetric_12 expects an arity-3 polynomial");
  return p.permuted(Permutation::transposition(3, 0, 1)) == -p;
}

/// Symmetry test for commutative polynomials, used by the invariants toolkit.
inline std::optional<Permutation> polynomial_symmetry_violation(const Polynomial& p) {
  for (int j = 1; j < p.arity(); ++j) {
    auto t = Permutation::transposition(p.arity(), 0, j);
    if (p.permuted(t) != p) return t;
  }
  return std::nullopt;
}

inline bool is_symmetric(const Polynomial& p) { return !polynomial_symmetry_violation(p).has_value(); }

}  // namespace symgrass

#endif  // SYMGRASS_SYMMETRY_HPP
