#ifndef SYMGRASS_INVARIANTS_HPP
#define SYMGRASS_INVARIANTS_HPP

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "symgrass/errors.hpp"
#include "symgrass/poly.hpp"
#include "symgrass/symmetry.hpp"

namespace symgrass {

/// Polynomial in abstract indeterminates standing for the elementary
/// symmetric polynomials of `arity` variables: sigma1, sigma2, sigma3 for
/// arity 3, and e1 = x1 + x2, e2 = x1 x2 for arity 2. The indeterminates stay
/// abstract until eval_sigma().
class SigmaPolynomial {
 public:
  SigmaPolynomial() : SigmaPolynomial(3) {}
  explicit SigmaPolynomial(int arity) : terms_(check_arity(arity)) {}

  static SigmaPolynomial constant(int arity, const Rational& c) { return SigmaPolynomial(Polynomial::constant(check_arity(arity), c)); }
  /// The k-th elementary indeterminate, 1 <= k <= arity.
  static SigmaPolynomial sigma(int arity, int k) {
    if (k < 1 || k > arity) throw UsageError("elementary symmetric index out of range: " + std::to_string(k));
    return SigmaPolynomial(Polynomial::variable(check_arity(arity), k - 1));
  }
  /// Exponents are (i, j, k) for sigma1^i sigma2^j sigma3^k.
  static SigmaPolynomial monomial(const Monomial& exponents, const Rational& c = 1) {
    check_arity(exponents.arity());
    return SigmaPolynomial(Polynomial::term(exponents, c));
  }

  int arity() const { return terms_.arity(); }
  bool is_zero() const { return terms_.is_zero(); }
  std::size_t size() const { return terms_.size(); }
  const Polynomial& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Degree in x after evaluation: sigma_k has weight k.
  unsigned weighted_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, weight(m));
    return d;
  }
  static unsigned weight(const Monomial& m) {
    unsigned w = 0;
    for (int i = 0; i < m.arity(); ++i) w += (i + 1) * m[i];
    return w;
  }

  SigmaPolynomial& operator+=(const SigmaPolynomial& g) { terms_ += g.terms_; return *this; }
  SigmaPolynomial& operator-=(const SigmaPolynomial& g) { terms_ -= g.terms_; return *this; }
  SigmaPolynomial& operator*=(const Rational& s) { terms_ *= s; return *this; }

  friend SigmaPolynomial operator+(SigmaPolynomial a, const SigmaPolynomial& b) { return a += b; }
  friend SigmaPolynomial operator-(SigmaPolynomial a, const SigmaPolynomial& b) { return a -= b; }
  friend SigmaPolynomial operator-(SigmaPolynomial a) { return a *= -1; }
  friend SigmaPolynomial operator*(SigmaPolynomial a, const Rational& s) { return a *= s; }
  friend SigmaPolynomial operator*(const Rational& s, SigmaPolynomial a) { return a *= s; }
  friend SigmaPolynomial operator*(const SigmaPolynomial& a, const SigmaPolynomial& b) {
    return SigmaPolynomial(a.terms_ * b.terms_);
  }
  SigmaPolynomial pow(unsigned e) const { return SigmaPolynomial(terms_.pow(e)); }

  friend bool operator==(const SigmaPolynomial&, const SigmaPolynomial&) = default;

  /// Indeterminate names for rendering and parsing.
  static std::string name(int arity, int k) {
    return (arity == 3 ? "sigma" : "e") + std::to_string(k);
  }

 private:
  explicit SigmaPolynomial(Polynomial p) : terms_(std::move(p)) {}
  static int check_arity(int arity) {
    if (arity != 2 && arity != 3) throw UsageError("sigma polynomials exist for arity 2 or 3 only");
    return arity;
  }

  Polynomial terms_;
};

/// sigma_k as an explicit polynomial in x_1..x_arity.
inline Polynomial elementary(int k, int arity = 3) {
  if (arity < 1 || arity > kMaxVariables) throw UsageError("arity out of range");
  if (k < 1 || k > arity) throw UsageError("elementary symmetric polynomial index must be in 1.." + std::to_string(arity) + ", got " + std::to_string(k));
  Polynomial out(arity);
  // subsets of size k as bitmasks
  for (unsigned mask = 0; mask < (1u << arity); ++mask) {
    if (std::popcount(mask) != k) continue;
    Monomial m(arity);
    for (int i = 0; i < arity; ++i)
      if (mask & (1u << i)) m.set(i, 1);
    out.add_term(m, 1);
  }
  return out;
}

/// nu_k = x_1^k + ... + x_arity^k.
inline Polynomial power_sum(int k, int arity = 3) {
  if (k < 1) throw UsageError("power sum index must be >= 1, got " + std::to_string(k));
  Polynomial out(arity);
  for (int i = 0; i < arity; ++i) {
    Monomial m(arity);
    m.set(i, static_cast<unsigned>(k));
    out.add_term(m, 1);
  }
  return out;
}

inline Polynomial eval_sigma(const SigmaPolynomial& g) {
  const int n = g.arity();
  std::vector<std::vector<Polynomial>> powers(n);
  auto power_of = [&](int k, unsigned e) -> const Polynomial& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(Polynomial::constant(n, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * elementary(k + 1, n));
    return cache[e];
  };
  Polynomial out(n);
  for (const auto& [m, c] : g) {
    Polynomial t = Polynomial::constant(n, c);
    for (int k = 0; k < n; ++k)
      if (m[k]) t = t * power_of(k, m[k]);
    out += t;
  }
  return out;
}

/// Writes a symmetric polynomial in the elementary symmetric polynomials by
/// leading-term reduction. The leading monomial x1^a x2^b x3^c of a symmetric
/// polynomial has a >= b >= c; it is cancelled by
/// sigma1^{a-b} sigma2^{b-c} sigma3^c, whose leading monomial is the same.
inline SigmaPolynomial decompose_symmetric(const Polynomial& p) {
  const int n = p.arity();
  if (n != 2 && n != 3) throw UsageError("decompose_symmetric expects arity 2 or 3");
  if (auto t = polynomial_symmetry_violation(p))
    throw DomainError("polynomial is not symmetric: it changes under " + t->cycles());
  SigmaPolynomial out(n);
  Polynomial rest = p;
  while (!rest.is_zero()) {
    const Monomial lead = rest.leading_monomial();
    const Rational c = rest.leading_coefficient();
    Monomial sigma_exps(n);
    for (int k = 0; k < n; ++k) {
      unsigned next = k + 1 < n ? lead[k + 1] : 0;
      if (lead[k] < next)
        throw ConsistencyError("leading monomial " + to_string(lead) + " of a symmetric polynomial is not weakly decreasing");
      sigma_exps.set(k, lead[k] - next);
    }
    SigmaPolynomial term = SigmaPolynomial::monomial(sigma_exps, c);
    rest -= eval_sigma(term);
    out += term;
  }
  return out;
}

/// nu_k in sigma form via Newton's identities for three variables:
/// nu_1 = s1, nu_2 = s1 nu_1 - 2 s2, nu_3 = s1 nu_2 - s2 nu_1 + 3 s3,
/// nu_k = s1 nu_{k-1} - s2 nu_{k-2} + s3 nu_{k-3} for k >= 4.
inline SigmaPolynomial power_sum_sigma(int k) {
  if (k < 1) throw UsageError("power sum index must be >= 1, got " + std::to_string(k));
  static std::mutex mu;
  static std::vector<SigmaPolynomial> table;
  std::lock_guard lock(mu);
  const auto s1 = SigmaPolynomial::sigma(3, 1), s2 = SigmaPolynomial::sigma(3, 2), s3 = SigmaPolynomial::sigma(3, 3);
  if (table.empty()) table.push_back(SigmaPolynomial::constant(3, 3));  // nu_0 = 3
  while (static_cast<int>(table.size()) <= k) {
    const int j = static_cast<int>(table.size());
    SigmaPolynomial next = s1 * table[j - 1];
    if (j == 1) next = s1;
    if (j == 2) next -= Rational(2) * s2;
    if (j >= 3) next -= s2 * table[j - 2];
    if (j == 3) next += Rational(3) * s3;
    if (j >= 4) next += s3 * table[j - 3];
    table.push_back(next);
  }
  return table[k];
}

/// "sigma1^2 sigma2 - 2 sigma3", leading term first in deglex order on
/// (sigma1, sigma2, sigma3) exponents.
inline std::string to_string(const SigmaPolynomial& g) {
  if (g.is_zero()) return "0";
  const int n = g.arity();
  std::string out;
  const auto& terms = g.terms().terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    std::string mono;
    for (int k = 0; k < n; ++k) {
      if (m[k] == 0) continue;
      if (!mono.empty()) mono += ' ';
      mono += SigmaPolynomial::name(n, k + 1);
      if (m[k] > 1) mono += '^' + std::to_string(m[k]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + ' ';
      out += mono;
    }
  }
  return out;
}

}  // namespace symgrass

#endif  // SYMGRASS_INVARIANTS_HPP
