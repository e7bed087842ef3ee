#ifndef SYMGRASS_FALG_HPP
#define SYMGRASS_FALG_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symgrass/errors.hpp"
#include "symgrass/poly.hpp"

// Normal forms in the relatively free algebras F_2 and F_3 of the variety
// defined by [[z1,z2],z3] = 0.
//
// For n <= 3 every element is uniquely p + sum_{j>i} p_ji [x_j,x_i] with
// commutative polynomials p, p_ji: basic commutators are central and any
// product of two of them vanishes, so the commutator ideal is a free
// K[X_n]-module on the basic commutators. The scalar part p stands for the
// combination of *sorted* words x_1^{a_1} x_2^{a_2} x_3^{a_3}.

namespace symgrass {

/// Basic commutator [x_hi, x_lo], 0-based indices, hi > lo.
struct CommutatorIndex {
  int hi = 1;
  int lo = 0;

  CommutatorIndex() = default;
  CommutatorIndex(int hi_index, int lo_index) : hi(hi_index), lo(lo_index) {
    if (!(hi > lo && lo >= 0)) throw UsageError("basic commutator needs hi > lo >= 0");
  }

  friend auto operator<=>(const CommutatorIndex&, const CommutatorIndex&) = default;
};

/// The basic commutators of F_n in rendering order: [x2,x1], [x3,x1], [x3,x2].
inline std::vector<CommutatorIndex> basic_commutators(int arity) {
  std::vector<CommutatorIndex> out;
  for (int hi = 1; hi < arity; ++hi)
    for (int lo = 0; lo < hi; ++lo) out.emplace_back(hi, lo);
  std::sort(out.begin(), out.end(), [](const CommutatorIndex& a, const CommutatorIndex& b) {
    return std::pair(a.hi, a.lo) < std::pair(b.hi, b.lo);
  });
  return out;
}

/// A word of the free associative algebra; letters are 0-based variable indices.
struct Word {
  std::vector<int> letters;

  std::size_t degree() const { return letters.size(); }
  friend auto operator<=>(const Word&, const Word&) = default;
};

class AlgebraElement {
 public:
  using ModuleMap = std::map<CommutatorIndex, Polynomial>;

  AlgebraElement() : AlgebraElement(3) {}
  explicit AlgebraElement(int arity) : scalar_(check_arity(arity)), arity_(arity) {}

  static AlgebraElement from_scalar(Polynomial p) {
    AlgebraElement e(p.arity());
    e.scalar_ = std::move(p);
    return e;
  }
  static AlgebraElement one(int arity) { return from_scalar(Polynomial::constant(arity, 1)); }
  static AlgebraElement generator(int arity, int index) { return from_scalar(Polynomial::variable(arity, index)); }

  /// coeff * [x_i, x_j] for any i != j (sign-normalized to a basic commutator).
  static AlgebraElement commutator(int arity, int i, int j, Polynomial coeff) {
    AlgebraElement e(arity);
    if (coeff.arity() != arity) throw UsageError("arity mismatch");
    if (i == j) return e;
    if (i < 0 || j < 0 || i >= arity || j >= arity) throw UsageError("commutator index out of range");
    if (i < j) {
      coeff = -coeff;
      std::swap(i, j);
    }
    e.add_module_term({i, j}, coeff);
    return e;
  }
  static AlgebraElement commutator(int arity, int i, int j) {
    return commutator(arity, i, j, Polynomial::constant(arity, 1));
  }

  int arity() const { return arity_; }
  const Polynomial& scalar() const { return scalar_; }
  const ModuleMap& module() const { return module_; }

  Polynomial coefficient(const CommutatorIndex& c) const {
    auto it = module_.find(c);
    return it == module_.end() ? Polynomial(arity_) : it->second;
  }

  bool is_zero() const { return scalar_.is_zero() && module_.empty(); }
  bool in_commutator_ideal() const { return scalar_.is_zero(); }

  /// Total degree, counting a basic commutator as degree 2.
  unsigned degree() const {
    unsigned d = scalar_.degree();
    for (const auto& [c, p] : module_) d = std::max(d, p.degree() + 2);
    return d;
  }

  AlgebraElement homogeneous_component(unsigned d) const {
    AlgebraElement out(arity_);
    out.scalar_ = scalar_.homogeneous_component(d);
    if (d >= 2)
      for (const auto& [c, p] : module_) out.add_module_term(c, p.homogeneous_component(d - 2));
    return out;
  }

  /// Degrees carrying a nonzero homogeneous component, ascending.
  std::vector<unsigned> degrees() const {
    std::vector<bool> present(degree() + 1, false);
    for (const auto& [m, c] : scalar_) present[m.degree()] = true;
    for (const auto& [c, p] : module_)
      for (const auto& [m, v] : p) present[m.degree() + 2] = true;
    std::vector<unsigned> out;
    for (unsigned d = 0; d < present.size(); ++d)
      if (present[d]) out.push_back(d);
    return out;
  }

  void add_module_term(const CommutatorIndex& c, const Polynomial& p) {
    if (p.arity() != arity_) throw UsageError("arity mismatch in module coefficient");
    if (c.hi >= arity_) throw UsageError("commutator index out of range for arity " + std::to_string(arity_));
    if (p.is_zero()) return;
    auto [it, inserted] = module_.try_emplace(c, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) module_.erase(it);
    }
  }

  void add_scalar(const Polynomial& p) { scalar_ += p; }

  AlgebraElement& operator+=(const AlgebraElement& v) {
    check_same(v);
    scalar_ += v.scalar_;
    for (const auto& [c, p] : v.module_) add_module_term(c, p);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& v) {
    check_same(v);
    scalar_ -= v.scalar_;
    for (const auto& [c, p] : v.module_) add_module_term(c, -p);
    return *this;
  }
  AlgebraElement& operator*=(const Rational& s) {
    scalar_ *= s;
    if (sgn(s) == 0) module_.clear();
    for (auto& [c, p] : module_) p *= s;
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement u, const AlgebraElement& v) { return u += v; }
  friend AlgebraElement operator-(AlgebraElement u, const AlgebraElement& v) { return u -= v; }
  friend AlgebraElement operator-(AlgebraElement u) { return u *= -1; }
  friend AlgebraElement operator*(AlgebraElement u, const Rational& s) { return u *= s; }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement u) { return u *= s; }

  friend bool operator==(const AlgebraElement& u, const AlgebraElement& v) {
    return u.arity_ == v.arity_ && u.scalar_ == v.scalar_ && u.module_ == v.module_;
  }

  void check_same(const AlgebraElement& v) const {
    if (v.arity_ != arity_) throw UsageError("arity mismatch: F_" + std::to_string(arity_) + " vs F_" + std::to_string(v.arity_));
  }

 private:
  static int check_arity(int arity) {
    if (arity != 2 && arity != 3) throw UsageError("normal forms are only closed for arity 2 or 3, got " + std::to_string(arity));
    return arity;
  }

  Polynomial scalar_;
  ModuleMap module_;
  int arity_;
};

namespace detail {

// Product of the sorted words m1 and m2: sorting m1 m2 moves every x_j of m1
// past every x_i of m2 with j > i, and each such swap leaves one [x_j,x_i]
// times the remaining letters (commutatively, since brackets are central).
inline void add_sorted_word_product(AlgebraElement& out, const Monomial& m1, const Monomial& m2, const Rational& c) {
  const int n = out.arity();
  Monomial prod = m1 * m2;
  out.add_scalar(Polynomial::term(prod, c));
  for (int j = 1; j < n; ++j) {
    if (m1[j] == 0) continue;
    for (int i = 0; i < j; ++i) {
      unsigned swaps = m1[j] * m2[i];
      if (swaps == 0) continue;
      Monomial rest = prod;
      rest.set(i, rest[i] - 1);
      rest.set(j, rest[j] - 1);
      out.add_module_term({j, i}, Polynomial::term(rest, c * swaps));
    }
  }
}

}  // namespace detail

/// Product in F_n. Module parts multiply to zero; module times scalar is the
/// K[X_n]-action; scalar times scalar picks up the reordering brackets.
inline AlgebraElement mul(const AlgebraElement& u, const AlgebraElement& v) {
  u.check_same(v);
  const int n = u.arity();
  AlgebraElement out(n);
  for (const auto& [m1, c1] : u.scalar())
    for (const auto& [m2, c2] : v.scalar()) detail::add_sorted_word_product(out, m1, m2, c1 * c2);
  if (!u.scalar().is_zero())
    for (const auto& [c, p] : v.module()) out.add_module_term(c, u.scalar() * p);
  if (!v.scalar().is_zero())
    for (const auto& [c, p] : u.module()) out.add_module_term(c, v.scalar() * p);
  return out;
}

inline AlgebraElement operator*(const AlgebraElement& u, const AlgebraElement& v) { return mul(u, v); }

/// Left action of K[X_n] (same as multiplying by the scalar element).
inline AlgebraElement operator*(const Polynomial& p, const AlgebraElement& u) {
  return mul(AlgebraElement::from_scalar(p), u);
}

inline AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v) { return mul(u, v) - mul(v, u); }

inline bool equals(const AlgebraElement& u, const AlgebraElement& v) {
  u.check_same(v);
  return u == v;
}

inline AlgebraElement power(const AlgebraElement& u, unsigned e) {
  AlgebraElement result = AlgebraElement::one(u.arity());
  for (unsigned k = 0; k < e; ++k) result = mul(result, u);
  return result;
}

/// [u, v] for monomials in closed form: the coefficient of [x_j,x_i] is
/// (a_j b_i - a_i b_j) * uv / (x_i x_j).
inline AlgebraElement monomial_bracket(const Monomial& u, const Monomial& v) {
  if (u.arity() != v.arity()) throw UsageError("variable-count mismatch");
  const int n = u.arity();
  AlgebraElement out(n);
  Monomial prod = u * v;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      long long k = static_cast<long long>(u[j]) * v[i] - static_cast<long long>(u[i]) * v[j];
      if (k == 0) continue;
      Monomial rest = prod;
      rest.set(i, rest[i] - 1);
      rest.set(j, rest[j] - 1);
      out.add_module_term({j, i}, Polynomial::term(rest, Rational(static_cast<long>(k))));
    }
  }
  return out;
}

/// Rewrites a word to normal form by bubble sort: the leftmost adjacent pair
/// x_j x_i with j > i becomes x_i x_j + [x_j,x_i], and the bracket term is
/// kept with the other letters multiplied commutatively.
inline AlgebraElement normalize_word(const Word& w, int arity) {
  AlgebraElement out(arity);
  Monomial all(arity);
  for (int letter : w.letters) {
    if (letter < 0 || letter >= arity) throw UsageError("letter x" + std::to_string(letter + 1) + " out of range for arity " + std::to_string(arity));
    all.set(letter, all[letter] + 1);
  }
  std::vector<int> letters = w.letters;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t k = 0; k + 1 < letters.size(); ++k) {
      int j = letters[k], i = letters[k + 1];
      if (j <= i) continue;
      Monomial rest = all;
      rest.set(i, rest[i] - 1);
      rest.set(j, rest[j] - 1);
      out.add_module_term({j, i}, Polynomial::term(rest, 1));
      std::swap(letters[k], letters[k + 1]);
      swapped = true;
      break;
    }
  }
  out.add_scalar(Polynomial::term(all, 1));
  return out;
}

/// "x1 x2 x3 + x3[x2,x1] + x2[x3,x1] + x1[x3,x2]". The scalar part comes
/// first, then one summand per basic commutator in [x2,x1], [x3,x1], [x3,x2]
/// order. Re-parses to the same element.
inline std::string to_string(const AlgebraElement& e) {
  std::string out;
  if (!e.scalar().is_zero()) out = to_string(e.scalar());
  for (const CommutatorIndex& c : basic_commutators(e.arity())) {
    auto it = e.module().find(c);
    if (it == e.module().end()) continue;
    const Polynomial& p = it->second;
    std::string br = "[x" + std::to_string(c.hi + 1) + ",x" + std::to_string(c.lo + 1) + "]";
    std::string coeff;
    bool negative = false;
    if (p.size() == 1) {
      const auto& [m, v] = *p.begin();
      negative = sgn(v) < 0;
      Rational mag = abs(v);
      if (m.degree() == 0) {
        coeff = mag == 1 ? "" : to_string(mag) + ' ';
      } else {
        coeff = (mag == 1 ? "" : to_string(mag) + ' ') + to_string(m);
      }
    } else {
      coeff = '(' + to_string(p) + ')';
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + coeff + br;
    } else {
      out += (negative ? " - " : " + ") + coeff + br;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace symgrass

#endif  // SYMGRASS_FALG_HPP
