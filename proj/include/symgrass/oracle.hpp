#ifndef SYMGRASS_ORACLE_HPP
#define SYMGRASS_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "symgrass/errors.hpp"
#include "symgrass/falg.hpp"
#include "symgrass/linalg.hpp"

// Ground truth for F_n computed from first principles: the free associative
// algebra K<x_1..x_n> modulo the homogeneous components, up to a degree
// bound, of the ideal generated by all values of [[z1,z2],z3]. Nothing here
// uses the commutator-basis normal form of falg.hpp.

namespace symgrass::oracle {

/// Element of the free associative algebra: word -> coefficient.
class FreeElement {
 public:
  using TermMap = std::map<Word, Rational>;

  explicit FreeElement(int arity) : arity_(arity) {}

  static FreeElement word(int arity, Word w, const Rational& c = 1) {
    FreeElement e(arity);
    e.add_term(std::move(w), c);
    return e;
  }
  static FreeElement letter(int arity, int index) { return word(arity, Word{{index}}); }
  static FreeElement one(int arity) { return word(arity, Word{}); }

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.degree());
    return d;
  }

  void add_term(Word w, const Rational& c) {
    for (int l : w.letters)
      if (l < 0 || l >= arity_) throw UsageError("letter x" + std::to_string(l + 1) + " out of range for arity " + std::to_string(arity_));
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  FreeElement& operator+=(const FreeElement& o) {
    check_same(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  FreeElement& operator-=(const FreeElement& o) {
    check_same(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  FreeElement& operator*=(const Rational& s) {
    if (sgn(s) == 0) terms_.clear();
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator-(FreeElement a) { return a *= -1; }
  friend FreeElement operator*(const Rational& s, FreeElement a) { return a *= s; }

  /// Concatenation product.
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b) {
    a.check_same(b);
    FreeElement out(a.arity_);
    for (const auto& [u, c1] : a.terms_)
      for (const auto& [v, c2] : b.terms_) {
        Word w = u;
        w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
        out.add_term(std::move(w), c1 * c2);
      }
    return out;
  }

  friend bool operator==(const FreeElement&, const FreeElement&) = default;

 private:
  void check_same(const FreeElement& o) const {
    if (o.arity_ != arity_) throw UsageError("arity mismatch in free algebra");
  }

  TermMap terms_;
  int arity_;
};

inline FreeElement commutator(const FreeElement& a, const FreeElement& b) { return a * b - b * a; }

/// The sorted word x_1^{a_1} ... x_n^{a_n} of a monomial.
inline Word sorted_word(const Monomial& m) {
  Word w;
  for (int i = 0; i < m.arity(); ++i) w.letters.insert(w.letters.end(), m[i], i);
  return w;
}

/// Free-algebra representative of a normal form: scalar monomials become
/// sorted words; p [x_j,x_i] becomes sum c * sorted(m) (x_j x_i - x_i x_j).
inline FreeElement lift(const AlgebraElement& e) {
  const int n = e.arity();
  FreeElement out(n);
  for (const auto& [m, c] : e.scalar()) out.add_term(sorted_word(m), c);
  for (const auto& [ci, p] : e.module())
    for (const auto& [m, c] : p) {
      Word w = sorted_word(m);
      Word ji = w, ij = w;
      ji.letters.insert(ji.letters.end(), {ci.hi, ci.lo});
      ij.letters.insert(ij.letters.end(), {ci.lo, ci.hi});
      out.add_term(std::move(ji), c);
      out.add_term(std::move(ij), -c);
    }
  return out;
}

/// Per-degree quotient coordinates: (degree, word code) -> coefficient,
/// supported on non-pivot words only.
using Coordinates = std::map<std::pair<unsigned, std::uint64_t>, Rational>;

inline unsigned default_degree_cap(int arity) {
  switch (arity) {
    case 2: return 10;
    case 3: return 7;
    default: return 5;
  }
}

struct DegreeStats {
  unsigned degree = 0;
  std::uint64_t words = 0;
  std::uint64_t relations = 0;  // generating consequences enumerated
  std::uint64_t rank = 0;
  std::uint64_t quotient_dimension = 0;
};

/// Degree-truncated relatively free algebra. Immutable once built; queries
/// are const and safe to share across threads.
class TruncatedAlgebra {
 public:
  /// Builds every homogeneous component of degree <= max_degree. The
  /// relation space in degree d is spanned by the words
  ///   [[w1, w2], x] v,   w1 < w2 words, x a letter, v a word,
  /// which spans the same space as all u [[w1,w2],w3] v: a letter-by-letter
  /// expansion in w3 and the rule x T = T x - [T, x] remove u and shorten w3.
  static TruncatedAlgebra build(int arity, unsigned max_degree, unsigned cap = 0) {
    if (arity < 2 || arity > 4) throw UsageError("oracle arity must be 2, 3 or 4, got " + std::to_string(arity));
    if (cap == 0) cap = default_degree_cap(arity);
    if (max_degree < 1 || max_degree > cap)
      throw UsageError("oracle degree must be in 1.." + std::to_string(cap) + " for arity " + std::to_string(arity) + ", got " + std::to_string(max_degree));
    TruncatedAlgebra t(arity, max_degree);
    for (unsigned d = 1; d <= max_degree; ++d) t.build_degree(d);
    return t;
  }

  /// Same construction with every u [[w1,w2],w3] v enumerated; only for
  /// cross-checking the reduced generating set at small degree.
  static TruncatedAlgebra build_unreduced(int arity, unsigned max_degree) {
    if (arity < 2 || arity > 4 || max_degree < 1 || max_degree > 5) throw UsageError("unreduced oracle is limited to degree 5");
    TruncatedAlgebra t(arity, max_degree);
    for (unsigned d = 1; d <= max_degree; ++d) t.build_degree_unreduced(d);
    return t;
  }

  int arity() const { return arity_; }
  unsigned max_degree() const { return max_degree_; }
  const std::vector<DegreeStats>& stats() const { return stats_; }
  const DegreeStats& stats(unsigned d) const { return stats_.at(d); }

  std::uint64_t encode(const Word& w) const {
    std::uint64_t code = 0;
    for (int l : w.letters) code = code * arity_ + static_cast<std::uint64_t>(l);
    return code;
  }
  Word decode(unsigned degree, std::uint64_t code) const {
    Word w;
    w.letters.resize(degree);
    for (unsigned k = degree; k-- > 0;) {
      w.letters[k] = static_cast<int>(code % arity_);
      code /= arity_;
    }
    return w;
  }

  Coordinates project(const FreeElement& e) const {
    if (e.arity() != arity_) throw UsageError("arity mismatch: element of arity " + std::to_string(e.arity()) + ", oracle of arity " + std::to_string(arity_));
    if (e.degree() > max_degree_)
      throw UsageError("degree " + std::to_string(e.degree()) + " exceeds oracle truncation " + std::to_string(max_degree_));
    std::vector<linalg::SparseVector<std::uint64_t>> by_degree(max_degree_ + 1);
    for (const auto& [w, c] : e.terms()) by_degree[w.degree()].emplace(encode(w), c);
    Coordinates out;
    for (unsigned d = 0; d <= max_degree_; ++d) {
      if (by_degree[d].empty()) continue;
      auto residual = d == 0 ? by_degree[d] : relations_[d].reduce(std::move(by_degree[d])).residual;
      for (const auto& [code, c] : residual) out.emplace(std::pair(d, code), c);
    }
    return out;
  }

  Coordinates project(const AlgebraElement& e) const { return project(lift(e)); }

  /// The canonical word combination with the given coordinates.
  FreeElement representative(const Coordinates& coords) const {
    FreeElement out(arity_);
    for (const auto& [key, c] : coords) out.add_term(decode(key.first, key.second), c);
    return out;
  }

  bool equal(const FreeElement& u, const FreeElement& v) const { return project(u - v).empty(); }

  bool equal(const AlgebraElement& u, const AlgebraElement& v) const {
    if (u.arity() != arity_ || v.arity() != arity_) throw UsageError("arity mismatch between elements and oracle");
    return equal(lift(u), lift(v));
  }

 private:
  TruncatedAlgebra(int arity, unsigned max_degree)
      : arity_(arity), max_degree_(max_degree), relations_(max_degree + 1), stats_(max_degree + 1) {
    stats_[0] = {0, 1, 0, 0, 1};
  }

  std::uint64_t power(unsigned e) const {
    std::uint64_t p = 1;
    while (e--) p *= static_cast<std::uint64_t>(arity_);
    return p;
  }

  static void insert_relation(linalg::SparseVector<std::uint64_t>& row, std::uint64_t code, int coeff) {
    auto [it, inserted] = row.try_emplace(code, coeff);
    if (!inserted) {
      it->second += coeff;
      if (sgn(it->second) == 0) row.erase(it);
    }
  }

  void finish_degree(unsigned d, std::uint64_t relations) {
    const std::uint64_t words = power(d);
    const std::uint64_t rank = relations_[d].rank();
    stats_[d] = {d, words, relations, rank, words - rank};
  }

  void build_degree(unsigned d) {
    auto& basis = relations_[d];
    const std::uint64_t n = static_cast<std::uint64_t>(arity_);
    std::uint64_t count = 0;
    // [[w1,w2],x] v with |w1| + |w2| + 1 + |v| = d
    for (unsigned l1 = 1; l1 + 2 <= d; ++l1) {
      for (unsigned l2 = l1; l1 + l2 + 1 <= d; ++l2) {
        const unsigned lv = d - l1 - l2 - 1;
        const std::uint64_t n1 = power(l1), n2 = power(l2), nv = power(lv);
        for (std::uint64_t i1 = 0; i1 < n1; ++i1) {
          for (std::uint64_t i2 = (l1 == l2 ? i1 + 1 : 0); i2 < n2; ++i2) {
            const std::uint64_t w12 = i1 * n2 + i2, w21 = i2 * n1 + i1;
            if (w12 == w21) continue;  // commuting words
            for (std::uint64_t x = 0; x < n; ++x) {
              const std::uint64_t head = x * n1 * n2;
              for (std::uint64_t v = 0; v < nv; ++v) {
                linalg::SparseVector<std::uint64_t> row;
                insert_relation(row, (w12 * n + x) * nv + v, 1);
                insert_relation(row, (w21 * n + x) * nv + v, -1);
                insert_relation(row, (head + w12) * nv + v, -1);
                insert_relation(row, (head + w21) * nv + v, 1);
                ++count;
                if (!row.empty()) basis.insert(row);
              }
            }
          }
        }
      }
    }
    finish_degree(d, count);
  }

  void build_degree_unreduced(unsigned d) {
    auto& basis = relations_[d];
    std::uint64_t count = 0;
    // u [[w1,w2],w3] v, all word lengths with |w_i| >= 1
    for (unsigned lu = 0; lu + 3 <= d; ++lu)
      for (unsigned l1 = 1; lu + l1 + 2 <= d; ++l1)
        for (unsigned l2 = 1; lu + l1 + l2 + 1 <= d; ++l2)
          for (unsigned l3 = 1; lu + l1 + l2 + l3 <= d; ++l3) {
            const unsigned lv = d - lu - l1 - l2 - l3;
            const std::uint64_t nu = power(lu), n1 = power(l1), n2 = power(l2), n3 = power(l3), nv = power(lv);
            for (std::uint64_t u = 0; u < nu; ++u)
              for (std::uint64_t i1 = 0; i1 < n1; ++i1)
                for (std::uint64_t i2 = 0; i2 < n2; ++i2)
                  for (std::uint64_t i3 = 0; i3 < n3; ++i3)
                    for (std::uint64_t v = 0; v < nv; ++v) {
                      auto code = [&](std::uint64_t a, std::uint64_t na, std::uint64_t b, std::uint64_t nb, std::uint64_t c, std::uint64_t nc) {
                        std::uint64_t mid = (a * nb + b) * nc + c;
                        return (u * na * nb * nc + mid) * nv + v;
                      };
                      linalg::SparseVector<std::uint64_t> row;
                      insert_relation(row, code(i1, n1, i2, n2, i3, n3), 1);
                      insert_relation(row, code(i2, n2, i1, n1, i3, n3), -1);
                      insert_relation(row, code(i3, n3, i1, n1, i2, n2), -1);
                      insert_relation(row, code(i3, n3, i2, n2, i1, n1), 1);
                      ++count;
                      if (!row.empty()) basis.insert(row);
                    }
          }
    finish_degree(d, count);
  }

  int arity_;
  unsigned max_degree_;
  std::vector<linalg::EchelonBasis<std::uint64_t>> relations_;
  std::vector<DegreeStats> stats_;
};

/// Number of normal-form basis elements x^a [x_j,x_i] (at most one basic
/// commutator) and x^a of degree d, for n <= 3.
inline std::uint64_t basis_count(int arity, unsigned d) {
  auto monomials = [&](unsigned deg) {
    // C(deg + n - 1, n - 1)
    std::uint64_t num = 1, den = 1;
    for (int k = 1; k < arity; ++k) {
      num *= deg + k;
      den *= k;
    }
    return num / den;
  };
  std::uint64_t count = monomials(d);
  if (d >= 2) count += static_cast<std::uint64_t>(arity * (arity - 1) / 2) * monomials(d - 2);
  return count;
}

inline bool oracle_equal(const AlgebraElement& u, const AlgebraElement& v, const TruncatedAlgebra& t) { return t.equal(u, v); }

/// x1 x2 [x3,x4] and x2 x1 [x3,x4] differ in F_4, so the commutator ideal is
/// not a K[X_4]-module. Needs arity 4 and degree >= 4.
inline bool witness_non_module_n4(const TruncatedAlgebra& t) {
  if (t.arity() != 4 || t.max_degree() < 4) throw UsageError("non-module witness needs an arity-4 oracle of degree >= 4");
  auto x = [](int i) { return FreeElement::letter(4, i); };
  FreeElement br = commutator(x(2), x(3));
  return !t.equal(x(0) * x(1) * br, x(1) * x(0) * br);
}

/// [x1,x2][x3,x4] survives in F_4.
inline bool bracket_product_nonzero_n4(const TruncatedAlgebra& t) {
  if (t.arity() != 4 || t.max_degree() < 4) throw UsageError("bracket-product check needs an arity-4 oracle of degree >= 4");
  auto x = [](int i) { return FreeElement::letter(4, i); };
  return !t.project(commutator(x(0), x(1)) * commutator(x(2), x(3))).empty();
}

/// Every word of the given degree over `arity` letters.
inline std::vector<Word> all_words(int arity, unsigned degree) {
  std::vector<Word> out;
  std::uint64_t count = 1;
  for (unsigned k = 0; k < degree; ++k) count *= arity;
  for (std::uint64_t code = 0; code < count; ++code) {
    Word w;
    w.letters.resize(degree);
    std::uint64_t c = code;
    for (unsigned k = degree; k-- > 0;) {
      w.letters[k] = static_cast<int>(c % arity);
      c /= arity;
    }
    out.push_back(std::move(w));
  }
  return out;
}

struct SweepResult {
  std::uint64_t exhaustive_pairs = 0;
  std::uint64_t random_pairs = 0;
  std::uint64_t product_checks = 0;
  std::uint64_t disagreements = 0;
  bool dimensions_match = true;
};

/// Compares falg normal forms with the oracle:
///  - every pair of words of equal degree <= sweep_degree, then `samples`
///    random pairs at the degrees above it: nf(u) == nf(v) iff the oracle
///    identifies u and v;
///  - mul(nf(u), nf(v)) is oracle-equal to the word uv for every split of
///    every word of degree <= sweep_degree;
///  - quotient dimension equals the normal-form basis count in each degree.
inline SweepResult agreement_sweep(const TruncatedAlgebra& t, unsigned sweep_degree, unsigned samples, std::uint64_t seed) {
  const int n = t.arity();
  SweepResult r;
  for (const auto& s : t.stats())
    if (s.quotient_dimension != basis_count(n, s.degree)) r.dimensions_match = false;
  auto words_equal_by_falg = [&](const Word& u, const Word& v) { return equals(normalize_word(u, n), normalize_word(v, n)); };
  auto words_equal_by_oracle = [&](const Word& u, const Word& v) {
    return t.equal(FreeElement::word(n, u), FreeElement::word(n, v));
  };
  const unsigned top = std::min(sweep_degree, t.max_degree());
  for (unsigned d = 1; d <= top; ++d) {
    auto words = all_words(n, d);
    std::vector<Coordinates> coords;
    std::vector<AlgebraElement> normal;
    for (const Word& w : words) {
      coords.push_back(t.project(FreeElement::word(n, w)));
      normal.push_back(normalize_word(w, n));
    }
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = 0; j < words.size(); ++j) {
        ++r.exhaustive_pairs;
        if ((normal[i] == normal[j]) != (coords[i] == coords[j])) ++r.disagreements;
      }
    for (const Word& w : words)
      for (unsigned split = 0; split <= d; ++split) {
        Word u{{w.letters.begin(), w.letters.begin() + split}};
        Word v{{w.letters.begin() + split, w.letters.end()}};
        ++r.product_checks;
        AlgebraElement prod = mul(normalize_word(u, n), normalize_word(v, n));
        if (!t.equal(lift(prod), FreeElement::word(n, w))) ++r.disagreements;
      }
  }
  if (t.max_degree() > top && samples > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> degree_dist(top + 1, t.max_degree());
    std::uniform_int_distribution<int> letter(0, n - 1);
    std::bernoulli_distribution permute_only(0.5);
    for (unsigned s = 0; s < samples; ++s) {
      unsigned d = degree_dist(rng);
      Word u, v;
      for (unsigned k = 0; k < d; ++k) u.letters.push_back(letter(rng));
      if (permute_only(rng)) {
        // rearrangements share the scalar part, so they exercise the bracket terms
        v = u;
        std::shuffle(v.letters.begin(), v.letters.end(), rng);
      } else {
        for (unsigned k = 0; k < d; ++k) v.letters.push_back(letter(rng));
      }
      ++r.random_pairs;
      if (words_equal_by_falg(u, v) != words_equal_by_oracle(u, v)) ++r.disagreements;
      // and a product split
      unsigned split = std::uniform_int_distribution<unsigned>(0, d)(rng);
      Word a{{u.letters.begin(), u.letters.begin() + split}}, b{{u.letters.begin() + split, u.letters.end()}};
      ++r.product_checks;
      if (!t.equal(lift(mul(normalize_word(a, n), normalize_word(b, n))), FreeElement::word(n, u))) ++r.disagreements;
    }
  }
  return r;
}

}  // namespace symgrass::oracle

#endif  // SYMGRASS_ORACLE_HPP
