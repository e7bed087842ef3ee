#ifndef SYMGRASS_CLI_EVALUATE_HPP
#define SYMGRASS_CLI_EVALUATE_HPP

#include <string>

#include "symgrass/cli/parser.hpp"
#include "symgrass/decomp.hpp"
#include "symgrass/falg.hpp"
#include "symgrass/invariants.hpp"
#include "symgrass/oracle.hpp"

namespace symgrass::cli {

inline constexpr unsigned kDefaultMaxDegree = 64;

namespace detail {

inline void guard_degree(std::size_t degree, unsigned max_degree) {
  if (degree > max_degree)
    throw UsageError("total degree " + std::to_string(degree) + " exceeds the limit " + std::to_string(max_degree) + " (see --max-degree)");
}

/// Named symmetric polynomials as commutative polynomials of the given arity.
inline Polynomial named_polynomial(const Expr& e, int arity) {
  switch (e.kind) {
    case Expr::Kind::Sigma:
      if (e.index > arity) throw UsageError("sigma" + std::to_string(e.index) + " is not defined for arity " + std::to_string(arity));
      return elementary(e.index, arity);
    case Expr::Kind::Nu:
      return power_sum(e.index, arity);
    case Expr::Kind::Elementary2:
      if (arity != 2) throw UsageError("e1, e2 are only defined for arity 2; use sigma1..sigma3 for arity 3");
      return elementary(e.index, 2);
    default:
      throw UsageError("not a named polynomial");
  }
}

}  // namespace detail

/// Folds the expression through the F_n operations (n = 2 or 3).
inline AlgebraElement evaluate(const Expr& e, int arity, unsigned max_degree = kDefaultMaxDegree) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Variable:
      if (e.index >= arity) throw UsageError("x" + std::to_string(e.index + 1) + " is not available at arity " + std::to_string(arity));
      return AlgebraElement::generator(arity, e.index);
    case K::Number:
      return AlgebraElement::from_scalar(Polynomial::constant(arity, e.value));
    case K::Sum: {
      AlgebraElement out(arity);
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        AlgebraElement t = evaluate(e.children[i], arity, max_degree);
        if (e.negated[i]) out -= t; else out += t;
      }
      return out;
    }
    case K::Product: {
      AlgebraElement out = evaluate(e.children.front(), arity, max_degree);
      for (std::size_t i = 1; i < e.children.size(); ++i) {
        AlgebraElement t = evaluate(e.children[i], arity, max_degree);
        if (!out.is_zero() && !t.is_zero()) detail::guard_degree(out.degree() + t.degree(), max_degree);
        out = mul(out, t);
      }
      return out;
    }
    case K::Power: {
      AlgebraElement base = evaluate(e.children.front(), arity, max_degree);
      if (!base.is_zero()) detail::guard_degree(static_cast<std::size_t>(base.degree()) * e.exponent, max_degree);
      return power(base, e.exponent);
    }
    case K::Commutator: {
      AlgebraElement u = evaluate(e.children[0], arity, max_degree);
      AlgebraElement v = evaluate(e.children[1], arity, max_degree);
      if (!u.is_zero() && !v.is_zero()) detail::guard_degree(u.degree() + v.degree(), max_degree);
      return bracket(u, v);
    }
    case K::FSymbol: {
      if (arity != 3) throw UsageError("f(a,b,c) lives in F_3; use --arity 3");
      FIndex idx{e.args[0], e.args[1], e.args[2]};
      detail::guard_degree(idx.a + idx.b + idx.c + 2, max_degree);
      return make_f(idx);
    }
    case K::Sigma:
    case K::Nu:
    case K::Elementary2:
      return AlgebraElement::from_scalar(detail::named_polynomial(e, arity));
  }
  throw UsageError("unsupported expression");
}

/// Evaluates in the free associative algebra (any arity 2..4); used by the
/// oracle commands. Named symbols enter through their sorted-word lifts.
inline oracle::FreeElement evaluate_free(const Expr& e, int arity, unsigned max_degree = kDefaultMaxDegree) {
  using K = Expr::Kind;
  using oracle::FreeElement;
  auto lift_polynomial = [&](const Polynomial& p) {
    FreeElement out(arity);
    for (const auto& [m, c] : p) out.add_term(oracle::sorted_word(m), c);
    return out;
  };
  switch (e.kind) {
    case K::Variable:
      if (e.index >= arity) throw UsageError("x" + std::to_string(e.index + 1) + " is not available at arity " + std::to_string(arity));
      return FreeElement::letter(arity, e.index);
    case K::Number:
      return e.value * FreeElement::one(arity);
    case K::Sum: {
      FreeElement out(arity);
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        FreeElement t = evaluate_free(e.children[i], arity, max_degree);
        if (e.negated[i]) out -= t; else out += t;
      }
      return out;
    }
    case K::Product: {
      FreeElement out = evaluate_free(e.children.front(), arity, max_degree);
      for (std::size_t i = 1; i < e.children.size(); ++i) {
        FreeElement t = evaluate_free(e.children[i], arity, max_degree);
        detail::guard_degree(out.degree() + t.degree(), max_degree);
        out = out * t;
      }
      return out;
    }
    case K::Power: {
      FreeElement base = evaluate_free(e.children.front(), arity, max_degree);
      detail::guard_degree(base.degree() * e.exponent, max_degree);
      FreeElement out = FreeElement::one(arity);
      for (unsigned k = 0; k < e.exponent; ++k) out = out * base;
      return out;
    }
    case K::Commutator: {
      FreeElement u = evaluate_free(e.children[0], arity, max_degree);
      FreeElement v = evaluate_free(e.children[1], arity, max_degree);
      detail::guard_degree(u.degree() + v.degree(), max_degree);
      return oracle::commutator(u, v);
    }
    case K::FSymbol:
      if (arity != 3) throw UsageError("f(a,b,c) lives in F_3; use --arity 3");
      return oracle::lift(make_f({e.args[0], e.args[1], e.args[2]}));
    case K::Sigma:
    case K::Nu:
    case K::Elementary2:
      return lift_polynomial(detail::named_polynomial(e, arity));
  }
  throw UsageError("unsupported expression");
}

}  // namespace symgrass::cli

#endif  // SYMGRASS_CLI_EVALUATE_HPP
