#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end.  `run()` is the whole program; the binary
 *        in tools/ is a two-line main so tests can drive the CLI in-process.
 *
 * Exit codes: 0 success / all checks passed, 1 a verification failed,
 * 2 usage error or a size bound was exceeded.
 */

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wreath/characters.hpp"
#include "wreath/colored_perm.hpp"
#include "wreath/json_io.hpp"
#include "wreath/model.hpp"
#include "wreath/roots.hpp"
#include "wreath/rsk.hpp"
#include "wreath/verify.hpp"

namespace wreath {
namespace cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct Options {
  int r = 1;
  int n = 1;
  long long max_order = kDefaultMaxOrder;
  unsigned long long seed = 0;
  int jobs = 1;
  std::string format = "json";
  std::string element;
  bool exhaustive = false;
};

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string shape_label(const MultiPartition& mp) {
  return nlohmann::json(mp).dump();
}

inline std::string class_label(const ClassType& ct) {
  return nlohmann::json(ct.cycles_by_color).dump();
}

inline void print_tableau(std::ostream& out, const Tableau& t,
                          const std::string& indent) {
  if (t.empty()) {
    out << indent << "(empty)\n";
    return;
  }
  for (const auto& row : t) {
    out << indent;
    for (size_t j = 0; j < row.size(); ++j)
      out << (j ? " " : "") << row[j];
    out << "\n";
  }
}

inline ColoredPermutation parse_element(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  return j.get<ColoredPermutation>();
}

inline VerifyOptions verify_options(const Options& o) {
  VerifyOptions v;
  v.max_order = o.max_order;
  v.seed = o.seed;
  v.jobs = o.jobs;
  v.exhaustive = o.exhaustive;
  return v;
}

}  // namespace detail

inline int cmd_chartable(const Options& o, std::ostream& out) {
  const CharacterTable table = char_table(o.r, o.n, o.max_order);
  if (o.format == "json") {
    out << nlohmann::json(table).dump(2) << "\n";
    return kExitPass;
  }
  const size_t rows = table.shapes.size();
  const size_t cols = table.classes.types.size();
  if (o.format == "csv") {
    out << "shape";
    for (size_t c = 0; c < cols; ++c)
      out << "," << detail::csv_field(detail::class_label(table.classes.types[c]));
    out << "\n";
    for (size_t i = 0; i < rows; ++i) {
      out << detail::csv_field(detail::shape_label(table.shapes[i]));
      for (size_t c = 0; c < cols; ++c)
        out << "," << detail::csv_field(table.values[i][c].str());
      out << "\n";
    }
    return kExitPass;
  }
  out << "character table, r=" << o.r << " n=" << o.n
      << " order=" << table.order << " (" << rows << " x " << cols << ")\n";
  for (size_t c = 0; c < cols; ++c)
    out << "  class " << c << ": " << detail::class_label(table.classes.types[c])
        << "  size " << table.classes.sizes[c] << "\n";
  for (size_t i = 0; i < rows; ++i) {
    out << detail::shape_label(table.shapes[i]) << ":";
    for (size_t c = 0; c < cols; ++c)
      out << " " << table.values[i][c].str();
    out << "\n";
  }
  return kExitPass;
}

inline int cmd_sqroots(const Options& o, std::ostream& out) {
  if (!o.element.empty()) {
    const ColoredPermutation g = detail::parse_element(o.element);
    if (g.r != o.r || g.n != o.n)
      throw CLI::ValidationError("--element", "element does not match --r/--n");
    const long long brute = count_bruteforce(g, o.max_order);
    const long long formula = count_formula(g);
    const long long char_sum = sum_irr_chars(g);
    const bool pass = (brute == formula && brute == char_sum);
    nlohmann::json j{{"element", g},
                     {"count", brute},
                     {"formula", formula},
                     {"character_sum", char_sum},
                     {"pass", pass}};
    if (o.format == "json")
      out << j.dump(2) << "\n";
    else
      out << "roots of " << o.element << ": count=" << brute
          << " formula=" << formula << " character_sum=" << char_sum << " "
          << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kExitPass : kExitCheckFailed;
  }

  const auto brute = count_bruteforce_by_class(o.r, o.n, o.max_order);
  const ClassData classes = class_data(o.r, o.n, o.max_order);
  bool all_pass = true;
  nlohmann::json rows = nlohmann::json::array();
  for (size_t c = 0; c < classes.types.size(); ++c) {
    const ClassType& ct = classes.types[c];
    const long long b = brute.at(ct);
    const long long f = count_formula_from_cycles(o.r, class_type_to_cycles(ct));
    const long long s = sum_irr_chars(classes.reps[c]);
    const bool pass = (b == f && b == s);
    all_pass = all_pass && pass;
    rows.push_back({{"class", ct.cycles_by_color},
                    {"size", classes.sizes[c]},
                    {"count", b},
                    {"formula", f},
                    {"character_sum", s},
                    {"pass", pass}});
  }
  if (o.format == "json") {
    out << nlohmann::json{{"r", o.r},
                          {"n", o.n},
                          {"order", classes.order},
                          {"classes", rows},
                          {"pass", all_pass}}
               .dump(2)
        << "\n";
  } else if (o.format == "csv") {
    out << "class,size,count,formula,character_sum,pass\n";
    for (const auto& row : rows)
      out << detail::csv_field(row["class"].dump()) << ","
          << row["size"].get<long long>() << ","
          << row["count"].get<long long>() << ","
          << row["formula"].get<long long>() << ","
          << row["character_sum"].get<long long>() << ","
          << (row["pass"].get<bool>() ? "true" : "false") << "\n";
  } else {
    out << "square-root counts by class, r=" << o.r << " n=" << o.n << "\n";
    for (const auto& row : rows)
      out << "  " << row["class"].dump() << " size " << row["size"]
          << ": count=" << row["count"] << " formula=" << row["formula"]
          << " character_sum=" << row["character_sum"] << " "
          << (row["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    out << (all_pass ? "PASS" : "FAIL") << "\n";
  }
  return all_pass ? kExitPass : kExitCheckFailed;
}

inline int cmd_rsk(const Options& o, std::ostream& out) {
  if (o.element.empty())
    throw CLI::RequiredError("--element");
  const ColoredPermutation g = detail::parse_element(o.element);
  if (g.r != o.r || g.n != o.n)
    throw CLI::ValidationError("--element", "element does not match --r/--n");
  const TableauPair pair = colored_rsk(g);
  const ColoredPermutation back = inverse_colored_rsk(pair, g.r, g.n);
  const bool roundtrip = (back == g);
  const bool involution = is_absolute_involution(g);
  nlohmann::json j{{"element", g},
                   {"P", pair.P},
                   {"Q", pair.Q},
                   {"shape", shape_of(pair.P)},
                   {"absolute_involution", involution},
                   {"P_equals_Q", pair.P == pair.Q},
                   {"roundtrip", roundtrip}};
  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << "insertion tableaux for " << o.element << "\n";
    for (int c = 0; c < g.r; ++c) {
      out << "component " << c << " (P | Q):\n";
      detail::print_tableau(out, pair.P[c], "  ");
      out << "  --\n";
      detail::print_tableau(out, pair.Q[c], "  ");
    }
    out << "shape: " << nlohmann::json(shape_of(pair.P)).dump() << "\n";
    out << "roundtrip: " << (roundtrip ? "PASS" : "FAIL") << "\n";
  }
  return roundtrip ? kExitPass : kExitCheckFailed;
}

inline int cmd_model_verify(const Options& o, std::ostream& out) {
  const nlohmann::json report =
      model_verify_report(o.r, o.n, detail::verify_options(o));
  const bool pass = report.at("pass").get<bool>();
  if (o.format == "json") {
    out << report.dump(2) << "\n";
  } else {
    out << "model verification, r=" << o.r << " n=" << o.n << "\n";
    out << "  homomorphism: "
        << (report.at("homomorphism").get<bool>() ? "PASS" : "FAIL") << "\n";
    for (const auto& row : report.at("character_identity"))
      out << "  class " << row.at("class").dump() << ": trace "
          << row.at("trace").get<long long>() << " "
          << (row.at("pass").get<bool>() ? "PASS" : "FAIL") << "\n";
    for (const auto& row : report.at("multiplicities"))
      out << "  shape " << row.at("shape").dump() << ": multiplicity "
          << row.at("multiplicity").get<long long>() << "\n";
    out << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitPass : kExitCheckFailed;
}

inline int cmd_conjecture(const Options& o, std::ostream& out) {
  ConjectureReport report;
  try {
    report = conjecture_experiment(o.r, o.n, o.max_order);
  } catch (const std::logic_error& e) {
    out << nlohmann::json{{"r", o.r},
                          {"n", o.n},
                          {"invariant", false},
                          {"error", e.what()}}
               .dump(2)
        << "\n";
    return kExitCheckFailed;
  }
  if (o.format == "json") {
    out << nlohmann::json(report).dump(2) << "\n";
  } else {
    out << "two-cycle grading experiment, r=" << o.r << " n=" << o.n << "\n";
    for (const auto& g : report.groups)
      out << "  " << g.two_cycles << " two-cycles: size " << g.size << ", "
          << g.shapes.size() << " shapes, character match "
          << (g.character_match ? "yes" : "no") << "\n";
    out << "all groups match: " << (report.all_match ? "yes" : "no") << "\n";
  }
  return kExitPass;
}

inline int cmd_verify_all(const Options& o, std::ostream& out) {
  const std::vector<CheckResult> results =
      run_verifications(o.r, o.n, detail::verify_options(o));
  bool all_pass = true;
  for (const auto& res : results) all_pass = all_pass && res.pass;
  if (o.format == "json") {
    nlohmann::json j{{"r", o.r},
                     {"n", o.n},
                     {"order", group_order(o.r, o.n)},
                     {"checks", results},
                     {"pass", all_pass}};
    out << j.dump(2) << "\n";
  } else {
    for (const auto& res : results) {
      std::ostringstream ms;
      ms << std::fixed << std::setprecision(1) << res.wall_ms;
      out << (res.pass ? "PASS" : "FAIL") << "  " << std::left
          << std::setw(24) << res.name << " " << std::setw(11) << res.scope
          << " " << ms.str() << " ms\n";
      if (!res.pass && res.counterexample)
        out << "      counterexample: " << res.counterexample->dump() << "\n";
      if (!res.pass && !res.detail.empty())
        out << "      " << res.detail << "\n";
    }
    size_t passed = 0;
    for (const auto& res : results) passed += res.pass ? 1 : 0;
    out << "SUMMARY r=" << o.r << " n=" << o.n
        << " order=" << group_order(o.r, o.n) << ": " << passed << "/"
        << results.size() << " checks passed\n";
  }
  return all_pass ? kExitPass : kExitCheckFailed;
}

/// Parses `args` (without the program name) and executes one subcommand,
/// writing reports to `out` and errors to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  Options o;
  CLI::App app{"exact computations with colored permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--r", o.r, "number of colors (cyclic group order)")
      ->check(CLI::PositiveNumber);
  app.add_option("--n", o.n, "number of letters")->check(CLI::NonNegativeNumber);
  app.add_option("--max-order", o.max_order,
                 "largest group/basis size to enumerate")
      ->envname("WREATH_MAX_ORDER")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "seed for sampled checks");
  app.add_option("--jobs", o.jobs, "worker threads for per-class loops")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--exhaustive", o.exhaustive,
               "check all pairs even for large groups");

  CLI::App* chartable =
      app.add_subcommand("chartable", "irreducible character table");
  CLI::App* sqroots = app.add_subcommand(
      "sqroots", "square-root counts for the twisted involution equation");
  sqroots->add_option("--element", o.element,
                      "single element as JSON {r,n,perm,colors}");
  CLI::App* rsk = app.add_subcommand(
      "rsk", "color-separated row insertion for one element");
  rsk->add_option("--element", o.element,
                  "element as JSON {r,n,perm,colors}");
  CLI::App* model = app.add_subcommand("model", "involution-basis module");
  model->require_subcommand(1);
  CLI::App* model_verify =
      model->add_subcommand("verify", "check the module is a sum of all irreducibles");
  CLI::App* model_conjecture = model->add_subcommand(
      "conjecture", "grade the basis by two-cycle count");
  CLI::App* conjecture = app.add_subcommand(
      "conjecture", "alias for `model conjecture`");
  CLI::App* verify_all =
      app.add_subcommand("verify-all", "run the full identity battery");

  std::vector<const char*> argv;
  argv.push_back("wreath");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (chartable->parsed()) return cmd_chartable(o, out);
    if (sqroots->parsed()) return cmd_sqroots(o, out);
    if (rsk->parsed()) return cmd_rsk(o, out);
    if (model->parsed() && model_verify->parsed())
      return cmd_model_verify(o, out);
    if ((model->parsed() && model_conjecture->parsed()) ||
        conjecture->parsed())
      return cmd_conjecture(o, out);
    if (verify_all->parsed()) return cmd_verify_all(o, out);
  } catch (const CLI::RequiredError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bound_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: invalid JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace cli
}  // namespace wreath
