#ifndef SYMGRASS_CLI_APP_HPP
#define SYMGRASS_CLI_APP_HPP

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "symgrass/cli/evaluate.hpp"
#include "symgrass/cli/parser.hpp"
#include "symgrass/cli/render.hpp"
#include "symgrass/decomp.hpp"
#include "symgrass/oracle.hpp"
#include "symgrass/symmetry.hpp"

namespace symgrass::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kInternalError = 3 };

struct Options {
  int arity = 3;
  bool json = false;
  unsigned degree = 0;  // 0: command default
  bool nu_rendering = false;
  unsigned max_degree = kDefaultMaxDegree;
  std::string cache_dir;

  std::string expression;
  std::string second_expression;
  std::vector<std::string> generators;
  bool non_module_witness = false;
  unsigned sweep_degree = 4;
  unsigned samples = 500;
  std::uint64_t seed = 20240601;
};

// reduce_f memo table on disk:
//   [{"index": [a, b, c], "combo": {"c010": [...], "c020": [...], "c120": [...]}}, ...]

inline std::filesystem::path cache_file(const std::string& dir) { return std::filesystem::path(dir) / "reduce_f_cache.json"; }

inline json reducer_table_to_json(const FReducer& reducer) {
  json table = json::array();
  for (const auto& [idx, combo] : reducer.table())
    table.push_back({{"index", {idx.a, idx.b, idx.c}}, {"combo", combo_to_json(combo)}});
  return table;
}

inline std::map<FIndex, GeneratorCombo> reducer_table_from_json(const json& table) {
  std::map<FIndex, GeneratorCombo> out;
  for (const auto& entry : table) {
    const auto& i = entry.at("index");
    out.emplace(FIndex{i.at(0).get<unsigned>(), i.at(1).get<unsigned>(), i.at(2).get<unsigned>()},
                combo_from_json(entry.at("combo")));
  }
  return out;
}

inline void load_cache(const std::string& dir, FReducer& reducer) {
  if (dir.empty()) return;
  auto path = cache_file(dir);
  if (!std::filesystem::exists(path)) return;
  std::ifstream in(path);
  json table;
  try {
    in >> table;
    reducer.preload(reducer_table_from_json(table));
  } catch (const json::exception& e) {
    throw UsageError("unreadable cache " + path.string() + ": " + e.what());
  }
}

inline void save_cache(const std::string& dir, const FReducer& reducer) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  std::ofstream out(cache_file(dir));
  out << reducer_table_to_json(reducer).dump(1) << '\n';
}

namespace detail {

struct Report {
  std::string command;
  json input_normal_form;  // string or null
  json result;
  json sigma_rendering;
  std::string text;
};

inline void emit(const Report& r, const Options& opt, std::ostream& out) {
  if (opt.json) {
    json j{{"command", r.command},
           {"input_normal_form", r.input_normal_form},
           {"result", r.result},
           {"sigma_rendering", r.sigma_rendering}};
    out << j.dump(2) << '\n';
  } else {
    out << r.text;
    if (!r.text.empty() && r.text.back() != '\n') out << '\n';
  }
}

inline AlgebraElement parse_element(const std::string& text, int arity, const Options& opt) {
  return evaluate(parse(text), arity, opt.max_degree);
}

inline const std::string& single_expression(const Options& opt) { return opt.expression; }

inline json combo_rendering(const GeneratorCombo& c, bool nu) {
  return {{"c010", render_sigma(c.c010, nu)}, {"c020", render_sigma(c.c020, nu)}, {"c120", render_sigma(c.c120, nu)}};
}

inline std::string combo_text(const GeneratorCombo& c, bool nu) {
  return "f(0,1,0): " + render_sigma(c.c010, nu) + "\n" + "f(0,2,0): " + render_sigma(c.c020, nu) + "\n" +
         "f(1,2,0): " + render_sigma(c.c120, nu) + "\n";
}

inline int algebra_arity(const Options& opt) {
  if (opt.arity != 2 && opt.arity != 3) throw UsageError("this command works in F_2 or F_3; arity 4 is only available to oracle commands");
  return opt.arity;
}

// ---- commands -------------------------------------------------------------

inline Report cmd_normalize(const Options& opt) {
  AlgebraElement e = parse_element(single_expression(opt), algebra_arity(opt), opt);
  std::string nf = to_string(e);
  return {"normalize", nf, nf, nullptr, nf};
}

inline Report cmd_is_symmetric(const Options& opt) {
  AlgebraElement e = parse_element(single_expression(opt), algebra_arity(opt), opt);
  auto violation = symmetry_violation(e);
  json result{{"symmetric", !violation}, {"violation", violation ? json(violation->cycles()) : json(nullptr)}};
  std::string text = violation ? "not symmetric: changes under " + violation->cycles() : "symmetric";
  return {"is-symmetric", to_string(e), result, nullptr, text};
}

inline Report cmd_symmetrize(const Options& opt) {
  AlgebraElement e = parse_element(single_expression(opt), algebra_arity(opt), opt);
  std::string s = to_string(symmetrize(e));
  return {"symmetrize", to_string(e), s, nullptr, s};
}

inline Report cmd_expand(const Options& opt) {
  if (opt.arity != 3) throw UsageError("expand works in F_3");
  AlgebraElement e = parse_element(single_expression(opt), 3, opt);
  BasisExpansion ex = expand_in_fbasis(e);
  json terms = json::array(), rendering = json::array();
  std::string text;
  for (const auto& [idx, delta] : ex) {
    terms.push_back({{"index", {idx.a, idx.b, idx.c}}, {"coefficient", sigma_to_json(delta)}});
    rendering.push_back(render_sigma(delta, opt.nu_rendering));
    text += to_string(idx) + ": " + render_sigma(delta, opt.nu_rendering) + "\n";
  }
  if (ex.empty()) text = "0\n";
  json result{{"expansion", terms}, {"expression", expansion_expression(ex)}};
  return {"expand", to_string(e), result, rendering, text};
}

inline Report cmd_reduce(const Options& opt) {
  if (opt.arity != 3) throw UsageError("reduce works in F_3");
  AlgebraElement e = parse_element(single_expression(opt), 3, opt);
  GeneratorCombo combo = reduce_symmetric(e);
  if (evaluate(combo) != e) throw ConsistencyError("generator combination does not re-evaluate to the input");
  json result = combo_to_json(combo);
  result["expression"] = combo_expression(combo);
  return {"reduce", to_string(e), result, combo_rendering(combo, opt.nu_rendering), combo_text(combo, opt.nu_rendering)};
}

inline Report cmd_reduce_n2(const Options& opt) {
  AlgebraElement e = parse_element(single_expression(opt), 2, opt);
  SigmaPolynomial q = decompose_n2(e);
  std::string qs = to_string(q);
  json result{{"q", sigma_to_json(q)}, {"expression", "(" + qs + ") (x2 - x1)[x2,x1]"}};
  return {"reduce-n2", to_string(e), result, qs, "q = " + qs + "\nf = q (x2 - x1)[x2,x1]\n"};
}

inline Report cmd_check_freeness(const Options& opt) {
  unsigned D = opt.degree ? opt.degree : 8;
  std::vector<AlgebraElement> gens;
  std::vector<std::string> labels;
  if (opt.generators.empty()) {
    gens = free_generators();
    labels = {"f(0,1,0)", "f(0,2,0)", "f(1,2,0)"};
  } else {
    for (const auto& g : opt.generators) {
      gens.push_back(parse_element(g, 3, opt));
      labels.push_back(g);
    }
  }
  FreenessVerdict v = opt.generators.empty() ? check_freeness(D) : check_freeness(D, gens);
  json result{{"degree", D}, {"generators", labels}, {"independent", v.independent}};
  json rendering = nullptr;
  std::string text;
  if (v.independent) {
    text = "independent: no nontrivial relation among " + std::to_string(gens.size()) + " generators up to degree " + std::to_string(D) + "\n";
    result["witness"] = nullptr;
  } else {
    json w = json::array();
    rendering = json::array();
    text = "dependent: relation in degree " + std::to_string(v.witness_degree) + "\n";
    for (std::size_t i = 0; i < gens.size(); ++i) {
      w.push_back(sigma_to_json(v.witness[i]));
      rendering.push_back(render_sigma(v.witness[i], opt.nu_rendering));
      text += "  " + labels[i] + ": " + render_sigma(v.witness[i], opt.nu_rendering) + "\n";
    }
    result["witness"] = {{"degree", v.witness_degree}, {"coefficients", w}};
  }
  return {"check-freeness", nullptr, result, rendering, text};
}

inline Report cmd_check_minimality(const Options&) {
  auto checks = minimality_checks();
  bool all = true;
  json list = json::array();
  std::string text;
  for (const auto& c : checks) {
    all = all && c.excluded;
    list.push_back({{"generator", {c.generator.a, c.generator.b, c.generator.c}}, {"degree", c.degree}, {"excluded", c.excluded}});
    text += to_string(c.generator) + (c.excluded ? " is not" : " IS") + " in the submodule generated by the other two (degree " +
            std::to_string(c.degree) + ")\n";
  }
  text += all ? "minimal generating set\n" : "not minimal\n";
  return {"check-minimality", nullptr, {{"minimal", all}, {"checks", list}}, nullptr, text};
}

inline json stats_json(const oracle::TruncatedAlgebra& t) {
  json rows = json::array();
  for (const auto& s : t.stats()) {
    json row{{"degree", s.degree}, {"words", s.words}, {"relations", s.relations}, {"rank", s.rank}, {"quotient_dimension", s.quotient_dimension}};
    row["basis_count"] = t.arity() <= 3 ? json(oracle::basis_count(t.arity(), s.degree)) : json(nullptr);
    rows.push_back(row);
  }
  return rows;
}

inline Report cmd_oracle_build(const Options& opt) {
  unsigned D = opt.degree ? opt.degree : oracle::default_degree_cap(opt.arity);
  auto t = oracle::TruncatedAlgebra::build(opt.arity, D);
  std::ostringstream text;
  text << "degree  words  relations  rank  quotient_dim" << (opt.arity <= 3 ? "  basis_count" : "") << "\n";
  for (const auto& s : t.stats()) {
    text << s.degree << "  " << s.words << "  " << s.relations << "  " << s.rank << "  " << s.quotient_dimension;
    if (opt.arity <= 3) text << "  " << oracle::basis_count(opt.arity, s.degree);
    text << "\n";
  }
  return {"oracle-build", nullptr, {{"arity", opt.arity}, {"degree", D}, {"per_degree", stats_json(t)}}, nullptr, text.str()};
}

inline Report cmd_oracle_check(const Options& opt) {
  unsigned D = opt.degree ? opt.degree : (opt.arity == 4 ? 4 : 6);
  auto t = oracle::TruncatedAlgebra::build(opt.arity, D);
  if (opt.non_module_witness) {
    bool witness = oracle::witness_non_module_n4(t);
    bool product = oracle::bracket_product_nonzero_n4(t);
    json result{{"non_module_witness", witness}, {"bracket_product_nonzero", product}};
    if (!(witness && product)) {
      throw ConsistencyError("x1 x2 [x3,x4] and x2 x1 [x3,x4] were identified by the oracle");
    }
    return {"oracle-check", nullptr, result, nullptr, "witness confirmed: x1 x2 [x3,x4] != x2 x1 [x3,x4] and [x1,x2][x3,x4] != 0\n"};
  }
  if (!opt.expression.empty()) {
    if (opt.second_expression.empty()) throw UsageError("oracle-check compares exactly two expressions");
    auto u = evaluate_free(parse(opt.expression), opt.arity, opt.max_degree);
    auto v = evaluate_free(parse(opt.second_expression), opt.arity, opt.max_degree);
    bool oracle_eq = t.equal(u, v);
    json result{{"oracle_equal", oracle_eq}};
    std::string text = oracle_eq ? "equal in the oracle quotient\n" : "not equal in the oracle quotient\n";
    if (opt.arity <= 3) {
      auto a = parse_element(opt.expression, opt.arity, opt);
      auto b = parse_element(opt.second_expression, opt.arity, opt);
      bool falg_eq = equals(a, b);
      result["normal_form_equal"] = falg_eq;
      if (falg_eq != oracle_eq) throw ConsistencyError("normal forms and oracle disagree");
      text += "normal forms agree\n";
    }
    return {"oracle-check", nullptr, result, nullptr, text};
  }
  if (opt.arity == 4) throw UsageError("arity-4 oracle-check needs --non-module-witness or two expressions");
  oracle::SweepResult r = oracle::agreement_sweep(t, opt.sweep_degree, opt.samples, opt.seed);
  json result{{"degree", D},
              {"exhaustive_pairs", r.exhaustive_pairs},
              {"random_pairs", r.random_pairs},
              {"product_checks", r.product_checks},
              {"dimensions_match", r.dimensions_match},
              {"disagreements", r.disagreements}};
  if (r.disagreements || !r.dimensions_match) throw ConsistencyError("normal forms disagree with the oracle: " + result.dump());
  std::ostringstream text;
  text << "agreement: " << r.exhaustive_pairs << " exhaustive pairs, " << r.random_pairs << " random pairs, " << r.product_checks
       << " product checks, quotient dimensions match the normal-form basis up to degree " << D << "\n";
  return {"oracle-check", nullptr, result, nullptr, text.str()};
}

inline Report cmd_verify_paper_example(const Options& opt) {
  const FIndex idx{2, 4, 5};
  GeneratorCombo combo = reduce_f(idx);
  auto s = [](int k) { return SigmaPolynomial::sigma(3, k); };
  const SigmaPolynomial nu3 = power_sum_sigma(3);
  // coefficients as printed, with nu3 kept symbolic until here
  GeneratorCombo printed{
      -(s(1) * s(3).pow(3)) + s(1).pow(2) * s(2) * s(3).pow(2) - s(2).pow(2) * s(3).pow(2),
      nu3 * s(3).pow(2) + Rational(2) * s(1) * s(2) * s(3).pow(2) - Rational(2) * s(3).pow(3) - s(1).pow(3) * s(3).pow(2),
      s(2) * s(3).pow(2)};
  bool matches = combo == printed;
  bool evaluates = evaluate(combo) == make_f(idx);
  json result = combo_to_json(combo);
  result["matches_printed_coefficients"] = matches;
  result["evaluates_to_input"] = evaluates;
  if (!matches || !evaluates) throw ConsistencyError("f(2,4,5) reduction does not match: " + result.dump());
  std::string text = "f(2,4,5) = sigma3^2 f(0,2,3)\n" + combo_text(combo, opt.nu_rendering) + "verified\n";
  return {"verify-paper-example", to_string(make_f(idx)), result, combo_rendering(combo, opt.nu_rendering), text};
}

}  // namespace detail

/// Runs one CLI invocation. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"symgrass: symmetric elements of relatively free Grassmann algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--arity", opt.arity, "number of generators")->check(CLI::IsMember({2, 3, 4}));
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--degree", opt.degree, "degree bound for check-freeness / oracle commands");
  app.add_flag("--nu-rendering", opt.nu_rendering, "render power sums nu_k where shorter");
  app.add_option("--max-degree", opt.max_degree, "guard on the total degree of evaluated expressions");
  app.add_option("--cache-dir", opt.cache_dir, "directory holding the reduce_f memo table");

  auto with_expr = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("expression", opt.expression, "expression")->required();
    return sub;
  };
  with_expr("normalize", "normal form in F_n");
  with_expr("is-symmetric", "test invariance under S_n");
  with_expr("symmetrize", "average over S_n");
  with_expr("expand", "expansion of a symmetric element in the f(a,b,c) with constant coefficients");
  with_expr("reduce", "coefficients on f(0,1,0), f(0,2,0), f(1,2,0)");
  with_expr("reduce-n2", "q with f = q (x2 - x1)[x2,x1] in F_2");
  auto* freeness = app.add_subcommand("check-freeness", "search for relations among generators");
  freeness->add_option("--generator", opt.generators, "candidate generator (repeatable; default: the three free generators)");
  app.add_subcommand("check-minimality", "no generator lies in the submodule of the other two");
  app.add_subcommand("oracle-build", "build the truncated quotient and print its dimensions");
  auto* check = app.add_subcommand("oracle-check", "compare normal forms with the truncated quotient");
  check->add_option("first", opt.expression, "expression to compare");
  check->add_option("second", opt.second_expression, "expression to compare")->needs(check->get_option("first"));
  check->add_flag("--non-module-witness", opt.non_module_witness, "confirm x1 x2 [x3,x4] != x2 x1 [x3,x4] (arity 4)");
  check->add_option("--sweep-degree", opt.sweep_degree, "exhaustive sweep up to this degree");
  check->add_option("--samples", opt.samples, "random pairs above the sweep degree");
  check->add_option("--seed", opt.seed, "random seed");
  app.add_subcommand("verify-paper-example", "reduce f(2,4,5) and compare with the known coefficients");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    load_cache(opt.cache_dir, default_reducer());
    detail::Report report;
    if (command == "normalize") report = detail::cmd_normalize(opt);
    else if (command == "is-symmetric") report = detail::cmd_is_symmetric(opt);
    else if (command == "symmetrize") report = detail::cmd_symmetrize(opt);
    else if (command == "expand") report = detail::cmd_expand(opt);
    else if (command == "reduce") report = detail::cmd_reduce(opt);
    else if (command == "reduce-n2") report = detail::cmd_reduce_n2(opt);
    else if (command == "check-freeness") report = detail::cmd_check_freeness(opt);
    else if (command == "check-minimality") report = detail::cmd_check_minimality(opt);
    else if (command == "oracle-build") report = detail::cmd_oracle_build(opt);
    else if (command == "oracle-check") report = detail::cmd_oracle_check(opt);
    else report = detail::cmd_verify_paper_example(opt);
    save_cache(opt.cache_dir, default_reducer());
    detail::emit(report, opt, out);
    return kOk;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace symgrass::cli

#endif  // SYMGRASS_CLI_APP_HPP
