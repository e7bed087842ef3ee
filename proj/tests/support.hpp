#ifndef SYMGRASS_TESTS_SUPPORT_HPP
#define SYMGRASS_TESTS_SUPPORT_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <vector>

#include "symgrass/symgrass.hpp"

namespace symgrass {

// readable gtest failure messages
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const AlgebraElement& e, std::ostream* os) { *os << to_string(e); }
inline void PrintTo(const SigmaPolynomial& g, std::ostream* os) { *os << to_string(g); }
inline void PrintTo(const GeneratorCombo& c, std::ostream* os) {
  *os << "(" << to_string(c.c010) << "; " << to_string(c.c020) << "; " << to_string(c.c120) << ")";
}

}  // namespace symgrass

namespace testing_support {

using namespace symgrass;

inline Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  return fraction(num(rng), den(rng));
}

inline Monomial random_monomial(std::mt19937& rng, int arity, unsigned degree) {
  Monomial m(arity);
  std::uniform_int_distribution<int> var(0, arity - 1);
  for (unsigned k = 0; k < degree; ++k) {
    int i = var(rng);
    m.set(i, m[i] + 1);
  }
  return m;
}

inline Polynomial random_polynomial(std::mt19937& rng, int arity, unsigned max_degree, int terms = 4) {
  Polynomial p(arity);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  for (int t = 0; t < terms; ++t) p.add_term(random_monomial(rng, arity, deg(rng)), small_rational(rng));
  return p;
}

/// Random element of F_n of total degree <= max_degree (max_degree >= 2 for
/// module terms to appear).
inline AlgebraElement random_element(std::mt19937& rng, int arity, unsigned max_degree, bool with_scalar = true) {
  AlgebraElement e(arity);
  if (with_scalar) e.add_scalar(random_polynomial(rng, arity, max_degree, 3));
  if (max_degree >= 2)
    for (const auto& c : basic_commutators(arity)) e.add_module_term(c, random_polynomial(rng, arity, max_degree - 2, 2));
  return e;
}

inline Word random_word(std::mt19937& rng, int arity, unsigned degree) {
  std::uniform_int_distribution<int> var(0, arity - 1);
  Word w;
  for (unsigned k = 0; k < degree; ++k) w.letters.push_back(var(rng));
  return w;
}

// ---------------------------------------------------------------------------
// Exterior algebra on `kOdd` generators over Q. Elements map a bitmask of
// generators (ascending product) to a coefficient. Substituting
// x_i -> t_i + sum_j r_ij e_j gives a homomorphism out of F_n, so identities
// in F_n must hold there, and random parameters separate distinct normal forms.

class Grassmann {
 public:
  static constexpr int kOdd = 6;
  std::map<std::uint32_t, Rational> terms;

  static Grassmann scalar(const Rational& c) {
    Grassmann g;
    if (sgn(c) != 0) g.terms[0] = c;
    return g;
  }

  Grassmann& operator+=(const Grassmann& o) {
    for (const auto& [m, c] : o.terms) {
      auto& slot = terms[m];
      slot += c;
      if (sgn(slot) == 0) terms.erase(m);
    }
    return *this;
  }
  friend Grassmann operator+(Grassmann a, const Grassmann& b) { return a += b; }
  friend Grassmann operator-(Grassmann a, const Grassmann& b) {
    Grassmann nb = b;
    for (auto& [m, c] : nb.terms) c = -c;
    return a += nb;
  }
  friend Grassmann operator*(const Rational& s, Grassmann a) {
    if (sgn(s) == 0) return {};
    for (auto& [m, c] : a.terms) c *= s;
    return a;
  }
  friend Grassmann operator*(const Grassmann& a, const Grassmann& b) {
    Grassmann out;
    for (const auto& [ma, ca] : a.terms)
      for (const auto& [mb, cb] : b.terms) {
        if (ma & mb) continue;
        // sign of merging the two ascending products
        int swaps = 0;
        for (int k = 0; k < kOdd; ++k)
          if (mb & (1u << k)) swaps += std::popcount(ma >> (k + 1));
        Rational c = ca * cb;
        if (swaps % 2) c = -c;
        Grassmann t;
        t.terms[ma | mb] = c;
        out += t;
      }
    return out;
  }
  friend bool operator==(const Grassmann&, const Grassmann&) = default;
};

/// Images of x_1..x_n.
struct GrassmannPoint {
  std::vector<Grassmann> x;

  static GrassmannPoint random(std::mt19937& rng, int arity) {
    std::uniform_int_distribution<int> t(-7, 7), r(-3, 3);
    GrassmannPoint p;
    for (int i = 0; i < arity; ++i) {
      Grassmann g = Grassmann::scalar(Rational(t(rng)) + Rational(1, 2 + i));
      for (int j = 0; j < Grassmann::kOdd; ++j) {
        Grassmann e;
        e.terms[1u << j] = Rational(r(rng));
        if (sgn(e.terms[1u << j]) == 0) e.terms.clear();
        g += e;
      }
      p.x.push_back(g);
    }
    return p;
  }

  /// Same point with x_i sent to the image of x_{xi(i)}.
  GrassmannPoint permuted(const Permutation& xi) const {
    GrassmannPoint p;
    for (int i = 0; i < static_cast<int>(x.size()); ++i) p.x.push_back(x[xi(i)]);
    return p;
  }

  Grassmann word(const Word& w) const {
    Grassmann out = Grassmann::scalar(1);
    for (int l : w.letters) out = out * x[l];
    return out;
  }

  /// A commutative monomial read as the sorted word x_1^a x_2^b ...
  Grassmann sorted(const Monomial& m) const {
    Grassmann out = Grassmann::scalar(1);
    for (int i = 0; i < m.arity(); ++i)
      for (unsigned k = 0; k < m[i]; ++k) out = out * x[i];
    return out;
  }

  Grassmann eval(const Polynomial& p) const {
    Grassmann out;
    for (const auto& [m, c] : p) out += c * sorted(m);
    return out;
  }

  Grassmann eval(const AlgebraElement& e) const {
    Grassmann out = eval(e.scalar());
    for (const auto& [c, p] : e.module()) out += eval(p) * (x[c.hi] * x[c.lo] - x[c.lo] * x[c.hi]);
    return out;
  }
};

}  // namespace testing_support

#endif  // SYMGRASS_TESTS_SUPPORT_HPP
