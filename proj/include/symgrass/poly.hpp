#ifndef SYMGRASS_POLY_HPP
#define SYMGRASS_POLY_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "symgrass/errors.hpp"
#include "symgrass/permutation.hpp"
#include "symgrass/rational.hpp"

namespace symgrass {

inline constexpr int kMaxVariables = 4;

/// Exponent vector x_1^{e_0} ... x_n^{e_{n-1}} for n <= 4.
///
/// Ordering is degree-lexicographic with x_1 > x_2 > x_3 > x_4: total degree
/// decides first, then the first differing exponent from x_1 onwards.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int arity) : arity_(static_cast<std::uint8_t>(check_arity(arity))) {}
  Monomial(int arity, std::initializer_list<unsigned> exponents) : Monomial(arity) {
    if (static_cast<int>(exponents.size()) != arity) throw UsageError("monomial exponent count does not match arity");
    int i = 0;
    for (unsigned e : exponents) exps_[i++] = e;
  }

  static Monomial variable(int arity, int index) {
    Monomial m(arity);
    m.set(index, 1);
    return m;
  }

  int arity() const { return arity_; }
  unsigned operator[](int i) const { return exps_[i]; }
  void set(int i, unsigned e) {
    if (i < 0 || i >= arity_) throw UsageError("variable index x" + std::to_string(i + 1) + " out of range for arity " + std::to_string(arity_));
    exps_[i] = e;
  }

  unsigned degree() const { return std::accumulate(exps_.begin(), exps_.begin() + arity_, 0u); }

  bool divides(const Monomial& other) const {
    for (int i = 0; i < arity_; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial m(a.arity_);
    for (int i = 0; i < a.arity_; ++i) m.exps_[i] = a.exps_[i] + b.exps_[i];
    return m;
  }

  /// a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    if (!b.divides(a)) throw UsageError("monomial division is not exact");
    Monomial m(a.arity_);
    for (int i = 0; i < a.arity_; ++i) m.exps_[i] = a.exps_[i] - b.exps_[i];
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.arity_ == b.arity_ && a.exps_ == b.exps_; }

  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (int i = 0; i < a.arity_; ++i)
      if (auto c = a.exps_[i] <=> b.exps_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  /// Substitutes x_i -> x_{xi(i)}.
  Monomial permuted(const Permutation& xi) const {
    if (xi.size() != arity_) throw UsageError("permutation degree does not match monomial arity");
    Monomial m(arity_);
    for (int i = 0; i < arity_; ++i) m.exps_[xi(i)] = exps_[i];
    return m;
  }

 private:
  static int check_arity(int arity) {
    if (arity < 1 || arity > kMaxVariables) throw UsageError("arity must be between 1 and 4, got " + std::to_string(arity));
    return arity;
  }
  static void check_same(const Monomial& a, const Monomial& b) {
    if (a.arity_ != b.arity_) throw UsageError("variable-count mismatch");
  }

  std::array<unsigned, kMaxVariables> exps_{};
  std::uint8_t arity_ = 0;
};

/// Sparse polynomial over Q in a fixed number of commuting variables.
/// No zero coefficient is ever stored, so equal polynomials have identical
/// term maps.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(int arity) : arity_(Monomial(arity).arity()) {}

  static Polynomial constant(int arity, const Rational& c) {
    Polynomial p(arity);
    p.add_term(Monomial(arity), c);
    return p;
  }
  static Polynomial variable(int arity, int index) {
    Polynomial p(arity);
    p.add_term(Monomial::variable(arity, index), 1);
    return p;
  }
  static Polynomial term(const Monomial& m, const Rational& c = 1) {
    Polynomial p(m.arity());
    p.add_term(m, c);
    return p;
  }

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Maximal total degree; 0 for the zero polynomial.
  unsigned degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

  bool is_homogeneous() const {
    return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
  }

  Polynomial homogeneous_component(unsigned d) const {
    Polynomial out(arity_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
  }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw DomainError("leading monomial of the zero polynomial");
    return terms_.rbegin()->first;
  }
  const Rational& leading_coefficient() const {
    if (terms_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return terms_.rbegin()->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (m.arity() != arity_) throw UsageError("variable-count mismatch");
    if (is_zero_value(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_value(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& q) {
    check_same(q);
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& q) {
    check_same(q);
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (is_zero_value(s)) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator-(Polynomial p) { return p *= -1; }
  friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    p.check_same(q);
    Polynomial out(p.arity_);
    for (const auto& [m1, c1] : p.terms_)
      for (const auto& [m2, c2] : q.terms_) out.add_term(m1 * m2, c1 * c2);
    return out;
  }

  /// Multiplies every term by a monomial.
  Polynomial shifted(const Monomial& m, const Rational& s = 1) const {
    Polynomial out(arity_);
    if (is_zero_value(s)) return out;
    for (const auto& [t, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), t * m, c * s);
    return out;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(arity_, 1);
    Polynomial base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

  Polynomial permuted(const Permutation& xi) const {
    Polynomial out(arity_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.permuted(xi), c);
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  static bool is_zero_value(const Rational& c) { return sgn(c) == 0; }
  void check_same(const Polynomial& q) const {
    if (q.arity_ != arity_) throw UsageError("variable-count mismatch: " + std::to_string(arity_) + " vs " + std::to_string(q.arity_));
  }

  TermMap terms_;
  int arity_ = 0;
};

// Named operations.

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
inline Polynomial permute(const Polynomial& p, const Permutation& xi) { return p.permuted(xi); }
inline Monomial leading_monomial(const Polynomial& p) { return p.leading_monomial(); }

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Division by a single polynomial in deglex order. The remainder is zero
/// exactly when the divisor divides p, because one polynomial is always a
/// Groebner basis of the ideal it generates.
inline DivisionResult divide(const Polynomial& p, const Polynomial& divisor) {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  if (p.arity() != divisor.arity()) throw UsageError("variable-count mismatch");
  const Monomial& lm = divisor.leading_monomial();
  const Rational& lc = divisor.leading_coefficient();
  DivisionResult r{Polynomial(p.arity()), Polynomial(p.arity())};
  Polynomial rest = p;
  while (!rest.is_zero()) {
    Monomial m = rest.leading_monomial();
    Rational c = rest.leading_coefficient();
    if (lm.divides(m)) {
      Monomial t = m / lm;
      Rational s = c / lc;
      r.quotient.add_term(t, s);
      rest -= divisor.shifted(t, s);
    } else {
      r.remainder.add_term(m, c);
      rest.add_term(m, -c);
    }
  }
  return r;
}

/// Monomial rendered as "x1^2 x3"; the empty monomial renders as "1".
inline std::string to_string(const Monomial& m) {
  std::string out;
  for (int i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

/// Leading term first, e.g. "x1^2 - 2 x1 x2 + 1/3 x3". Re-parses to the
/// same polynomial.
inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    bool unit_monomial = m.degree() == 0;
    if (unit_monomial) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + ' ';
      out += to_string(m);
    }
  }
  return out;
}

}  // namespace symgrass

#endif  // SYMGRASS_POLY_HPP
