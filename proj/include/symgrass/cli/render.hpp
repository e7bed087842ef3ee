#ifndef SYMGRASS_CLI_RENDER_HPP
#define SYMGRASS_CLI_RENDER_HPP

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symgrass/decomp.hpp"
#include "symgrass/invariants.hpp"

namespace symgrass::cli {

using json = nlohmann::ordered_json;

// sigma polynomials in exponent/coefficient form:
//   [{"exponents": [i, j, k], "coefficient": "p/q"}, ...]  (deglex, leading first)

inline json sigma_to_json(const SigmaPolynomial& g) {
  json terms = json::array();
  const auto& map = g.terms().terms();
  for (auto it = map.rbegin(); it != map.rend(); ++it) {
    json exps = json::array();
    for (int k = 0; k < g.arity(); ++k) exps.push_back(it->first[k]);
    terms.push_back({{"exponents", exps}, {"coefficient", to_string(it->second)}});
  }
  return terms;
}

inline SigmaPolynomial sigma_from_json(const json& terms, int arity = 3) {
  SigmaPolynomial g(arity);
  for (const auto& t : terms) {
    const auto& exps = t.at("exponents");
    if (static_cast<int>(exps.size()) != arity) throw UsageError("sigma term has the wrong number of exponents");
    Monomial m(arity);
    for (int k = 0; k < arity; ++k) m.set(k, exps.at(k).get<unsigned>());
    g += SigmaPolynomial::monomial(m, parse_rational(t.at("coefficient").get<std::string>()));
  }
  return g;
}

inline json combo_to_json(const GeneratorCombo& c) {
  return {{"c010", sigma_to_json(c.c010)}, {"c020", sigma_to_json(c.c020)}, {"c120", sigma_to_json(c.c120)}};
}

inline GeneratorCombo combo_from_json(const json& j) {
  return {sigma_from_json(j.at("c010")), sigma_from_json(j.at("c020")), sigma_from_json(j.at("c120"))};
}

namespace detail {

inline std::string sigma_monomial_text(const Monomial& m, int arity) {
  std::string out;
  for (int k = 0; k < arity; ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += ' ';
    out += SigmaPolynomial::name(arity, k + 1);
    if (m[k] > 1) out += '^' + std::to_string(m[k]);
  }
  return out;
}

struct NuTerm {
  Rational coefficient;
  int k = 0;
  Monomial multiplier;
};

inline std::string render_with_nu(const std::vector<NuTerm>& nus, const SigmaPolynomial& rest) {
  std::string out;
  for (const NuTerm& t : nus) {
    Rational mag = abs(t.coefficient);
    if (out.empty()) {
      if (sgn(t.coefficient) < 0) out += '-';
    } else {
      out += sgn(t.coefficient) < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + ' ';
    out += "nu" + std::to_string(t.k);
    std::string mult = sigma_monomial_text(t.multiplier, 3);
    if (!mult.empty()) out += ' ' + mult;
  }
  if (rest.is_zero()) return out.empty() ? "0" : out;
  std::string tail = to_string(rest);
  if (out.empty()) return tail;
  if (tail.front() == '-') return out + " - " + tail.substr(1);
  return out + " + " + tail;
}

}  // namespace detail

/// Renders g using power sums nu_k (k >= 2) where that takes strictly fewer
/// terms than the plain sigma form. nu_k = sigma1^k + ..., so a candidate
/// nu_k * m is tried for every term c sigma1^k m of g, greedily.
inline std::string render_sigma_nu(const SigmaPolynomial& g) {
  if (g.arity() != 3) return to_string(g);
  std::vector<detail::NuTerm> nus;
  SigmaPolynomial rest = g;
  while (true) {
    std::size_t best_cost = rest.size();
    std::optional<detail::NuTerm> best;
    SigmaPolynomial best_rest(3);
    for (const auto& [m, c] : rest) {
      for (int k = 2; k <= static_cast<int>(m[0]); ++k) {
        Monomial mult = m;
        mult.set(0, m[0] - k);
        SigmaPolynomial candidate = rest - c * power_sum_sigma(k) * SigmaPolynomial::monomial(mult);
        if (candidate.size() + 1 < best_cost) {
          best = detail::NuTerm{c, k, mult};
          best_rest = std::move(candidate);
          best_cost = best_rest.size() + 1;
        }
      }
    }
    if (!best) break;
    nus.push_back(*best);
    rest = std::move(best_rest);
  }
  return detail::render_with_nu(nus, rest);
}

inline std::string render_sigma(const SigmaPolynomial& g, bool nu_rendering) {
  return nu_rendering ? render_sigma_nu(g) : to_string(g);
}

/// "(c010) f(0,1,0) + (c020) f(0,2,0) + (c120) f(1,2,0)", skipping zero
/// coefficients; parses back to the represented element.
inline std::string combo_expression(const GeneratorCombo& c, bool nu_rendering = false) {
  std::string out;
  auto add = [&](const SigmaPolynomial& s, const char* f) {
    if (s.is_zero()) return;
    if (!out.empty()) out += " + ";
    out += "(" + render_sigma(s, nu_rendering) + ") " + f;
  };
  add(c.c010, "f(0,1,0)");
  add(c.c020, "f(0,2,0)");
  add(c.c120, "f(1,2,0)");
  return out.empty() ? "0" : out;
}

inline std::string expansion_expression(const BasisExpansion& e, bool nu_rendering = false) {
  std::string out;
  for (const auto& [idx, delta] : e) {
    if (!out.empty()) out += " + ";
    out += "(" + render_sigma(delta, nu_rendering) + ") " + to_string(idx);
  }
  return out.empty() ? "0" : out;
}

}  // namespace symgrass::cli

#endif  // SYMGRASS_CLI_RENDER_HPP
