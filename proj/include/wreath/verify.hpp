#pragma once

/**
 * @file verify.hpp
 * @brief The identity-checking battery behind `verify-all` and
 *        `model verify`: every structural fact the library promises,
 *        checked exactly for one (r, n), with timing and counterexamples.
 */

#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "wreath/characters.hpp"
#include "wreath/colored_perm.hpp"
#include "wreath/json_io.hpp"
#include "wreath/model.hpp"
#include "wreath/roots.hpp"
#include "wreath/rsk.hpp"
#include "wreath/shapes.hpp"

namespace wreath {

struct VerifyOptions {
  long long max_order = kDefaultMaxOrder;
  unsigned long long seed = 0;
  int jobs = 1;
  bool exhaustive = false;  // force exhaustive pair checks
};

struct CheckResult {
  std::string name;
  std::string scope;  // "exhaustive" or "sampled"
  bool pass = true;
  double wall_ms = 0.0;
  std::string detail;
  std::optional<nlohmann::json> counterexample;
};

inline void to_json(nlohmann::json& j, const CheckResult& c) {
  j = {{"name", c.name},
       {"scope", c.scope},
       {"pass", c.pass},
       {"wall_ms", c.wall_ms}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (c.counterexample) j["counterexample"] = *c.counterexample;
}

/// Work-sharing loop; fn(i) must be safe to run concurrently.  The first
/// exception thrown by any worker is rethrown on the caller.
inline void parallel_for(int jobs, long long count,
                         const std::function<void(long long)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (long long i = 0; i < count; ++i) fn(i);
    return;
  }
  const int workers = static_cast<int>(
      std::min<long long>(std::max(jobs, 1), count));
  std::atomic<long long> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int t = 0; t < workers; ++t)
    threads.emplace_back([&]() {
      for (;;) {
        const long long i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

namespace detail {

inline std::mt19937_64 seeded_rng(unsigned long long seed) {
  return std::mt19937_64(seed);
}

inline ColoredPermutation random_element(int r, int n, std::mt19937_64& rng) {
  ColoredPermutation g = ColoredPermutation::identity(r, n);
  std::shuffle(g.perm.begin(), g.perm.end(), rng);
  std::uniform_int_distribution<int> color(0, r - 1);
  for (auto& c : g.colors) c = color(rng);
  return g;
}

inline bool matrices_equal(const std::vector<std::vector<CycEl>>& a,
                           const std::vector<std::vector<CycEl>>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  return true;
}

inline std::vector<std::vector<CycEl>> matrix_product(
    const std::vector<std::vector<CycEl>>& a,
    const std::vector<std::vector<CycEl>>& b, int r) {
  const size_t n = a.size();
  std::vector<std::vector<CycEl>> out(n, std::vector<CycEl>(n, CycEl(r)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j)
        out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline bool matrix_symmetric(const std::vector<std::vector<CycEl>>& m) {
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j)
      if (!(m[i][j] == m[j][i])) return false;
  return true;
}

template <typename F>
CheckResult timed_check(const std::string& name, const std::string& scope,
                        F&& body) {
  CheckResult res;
  res.name = name;
  res.scope = scope;
  const auto t0 = std::chrono::steady_clock::now();
  body(res);
  const auto t1 = std::chrono::steady_clock::now();
  res.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return res;
}

}  // namespace detail

inline constexpr long long kExhaustivePairBound = 200;

/// Runs the full battery for one (r, n).  Throws bound_error when the group
/// is larger than opts.max_order.
inline std::vector<CheckResult> run_verifications(int r, int n,
                                                  const VerifyOptions& opts) {
  const long long order = group_order(r, n);
  if (order > opts.max_order)
    throw bound_error("group order " + std::to_string(order) +
                      " exceeds --max-order " + std::to_string(opts.max_order));
  const bool small = opts.exhaustive || order <= kExhaustivePairBound;
  const std::string pair_scope = small ? "exhaustive" : "sampled";
  std::vector<CheckResult> out;

  const std::vector<ColoredPermutation> all = enumerate_group(r, n, opts.max_order);
  const ColoredPermutation id = ColoredPermutation::identity(r, n);

  out.push_back(detail::timed_check(
      "group-axioms", pair_scope, [&](CheckResult& res) {
        for (const auto& g : all) {
          if (!(compose(g, id) == g) || !(compose(id, g) == g) ||
              !compose(g, inverse(g)).is_identity() ||
              !compose(inverse(g), g).is_identity()) {
            res.pass = false;
            res.counterexample = g;
            return;
          }
        }
        auto check_triple = [&](const ColoredPermutation& a,
                                const ColoredPermutation& b,
                                const ColoredPermutation& c) {
          if (!(compose(compose(a, b), c) == compose(a, compose(b, c)))) {
            res.pass = false;
            res.counterexample = nlohmann::json{{"a", a}, {"b", b}, {"c", c}};
            return false;
          }
          return true;
        };
        if (small) {
          for (const auto& a : all)
            for (const auto& b : all)
              for (const auto& c : all)
                if (!check_triple(a, b, c)) return;
        } else {
          auto rng = detail::seeded_rng(opts.seed);
          for (int t = 0; t < 200; ++t) {
            const auto a = detail::random_element(r, n, rng);
            const auto b = detail::random_element(r, n, rng);
            const auto c = detail::random_element(r, n, rng);
            if (!check_triple(a, b, c)) return;
          }
        }
      }));

  out.push_back(detail::timed_check(
      "matrix-homomorphism", pair_scope, [&](CheckResult& res) {
        auto check_pair = [&](const ColoredPermutation& a,
                              const ColoredPermutation& b) {
          const auto lhs = to_monomial_matrix(compose(a, b));
          const auto rhs = detail::matrix_product(to_monomial_matrix(a),
                                                  to_monomial_matrix(b), r);
          if (!detail::matrices_equal(lhs, rhs)) {
            res.pass = false;
            res.counterexample = nlohmann::json{{"a", a}, {"b", b}};
            return false;
          }
          return true;
        };
        if (small) {
          for (const auto& a : all)
            for (const auto& b : all)
              if (!check_pair(a, b)) return;
        } else {
          auto rng = detail::seeded_rng(opts.seed);
          for (int t = 0; t < 200; ++t)
            if (!check_pair(detail::random_element(r, n, rng),
                            detail::random_element(r, n, rng)))
              return;
        }
      }));

  out.push_back(detail::timed_check(
      "involution-symmetry", "exhaustive", [&](CheckResult& res) {
        long long found = 0;
        for (const auto& g : all) {
          const bool inv = is_absolute_involution(g);
          if (inv != detail::matrix_symmetric(to_monomial_matrix(g))) {
            res.pass = false;
            res.counterexample = g;
            return;
          }
          if (inv) ++found;
        }
        if (found != count_absolute_involutions(r, n)) {
          res.pass = false;
          res.detail = "involution count mismatch";
        }
      }));

  const CharacterTable table = char_table(r, n, opts.max_order);
  const size_t num_classes = table.classes.types.size();

  out.push_back(detail::timed_check(
      "root-count-identity", "exhaustive", [&](CheckResult& res) {
        const auto brute = count_bruteforce_by_class(r, n, opts.max_order);
        std::vector<char> ok(num_classes, 1);
        parallel_for(opts.jobs, num_classes, [&](long long c) {
          const ClassType& ct = table.classes.types[c];
          const long long formula =
              count_formula_from_cycles(r, class_type_to_cycles(ct));
          CycEl char_sum(r);
          for (size_t i = 0; i < table.shapes.size(); ++i)
            char_sum += table.values[i][c];
          ok[c] = (brute.at(ct) == formula &&
                   char_sum == CycEl::integer(r, formula));
        });
        for (size_t c = 0; c < num_classes; ++c)
          if (!ok[c]) {
            res.pass = false;
            res.counterexample = table.classes.types[c];
            return;
          }
      }));

  std::vector<long long> model_vals(num_classes, 0);
  out.push_back(detail::timed_check(
      "model-character", "exhaustive", [&](CheckResult& res) {
        std::vector<char> ok(num_classes, 1);
        parallel_for(opts.jobs, num_classes, [&](long long c) {
          model_vals[c] = model_character(table.classes.reps[c], opts.max_order);
          CycEl char_sum(r);
          for (size_t i = 0; i < table.shapes.size(); ++i)
            char_sum += table.values[i][c];
          ok[c] = (char_sum == CycEl::integer(r, model_vals[c]));
        });
        for (size_t c = 0; c < num_classes; ++c)
          if (!ok[c]) {
            res.pass = false;
            res.counterexample = table.classes.types[c];
            return;
          }
      }));

  out.push_back(detail::timed_check(
      "model-homomorphism", pair_scope, [&](CheckResult& res) {
        const ModelBasis basis = ModelBasis::build(r, n, opts.max_order);
        auto check_pair = [&](const ColoredPermutation& a,
                              const ColoredPermutation& b) {
          if (!homomorphism_check(basis, a, b)) {
            res.pass = false;
            res.counterexample = nlohmann::json{{"a", a}, {"b", b}};
            return false;
          }
          return true;
        };
        if (small) {
          for (const auto& a : all)
            for (const auto& b : all)
              if (!check_pair(a, b)) return;
        } else {
          if (n >= 1)
            for (const auto& a : simple_reflections(r, n))
              for (const auto& b : simple_reflections(r, n))
                if (!check_pair(a, b)) return;
          auto rng = detail::seeded_rng(opts.seed);
          for (int t = 0; t < 200; ++t)
            if (!check_pair(detail::random_element(r, n, rng),
                            detail::random_element(r, n, rng)))
              return;
        }
      }));

  out.push_back(detail::timed_check(
      "model-multiplicities", "exhaustive", [&](CheckResult& res) {
        for (size_t i = 0; i < table.shapes.size(); ++i) {
          CycEl acc(r);
          for (size_t c = 0; c < num_classes; ++c)
            acc += table.classes.sizes[c] *
                   (CycEl::integer(r, model_vals[c]) * table.values[i][c].conj());
          long long mult = 0;
          bool exact = true;
          try {
            mult = acc.divide_exact(table.order).as_integer();
          } catch (const std::domain_error&) {
            exact = false;
          }
          if (!exact || mult != 1) {
            res.pass = false;
            res.counterexample = nlohmann::json{{"shape", table.shapes[i]}};
            return;
          }
        }
      }));

  out.push_back(detail::timed_check(
      "dimension-counts", "exhaustive", [&](CheckResult& res) {
        const long long dim = count_absolute_involutions(r, n);
        long long syt_sum = 0, syt_sq_sum = 0;
        for (const auto& mp : multipartitions(r, n)) {
          const long long c = multi_syt_count(mp);
          syt_sum = checked::add(syt_sum, c);
          syt_sq_sum = checked::add(syt_sq_sum, checked::mul(c, c));
        }
        long long enumerated = 0;
        for_each_absolute_involution(
            r, n, [&](const ColoredPermutation&) { ++enumerated; },
            opts.max_order);
        if (dim != syt_sum || dim != enumerated || syt_sq_sum != order ||
            model_character(id, opts.max_order) != dim) {
          res.pass = false;
          res.detail = "dimension identities failed";
        }
      }));

  out.push_back(detail::timed_check(
      "rsk-duality", "exhaustive", [&](CheckResult& res) {
        for (const auto& g : all) {
          const TableauPair p = colored_rsk(g);
          const TableauPair pt = colored_rsk(transpose(g));
          if (!(pt.P == p.Q && pt.Q == p.P) ||
              !(inverse_colored_rsk(p, r, n) == g)) {
            res.pass = false;
            res.counterexample = g;
            return;
          }
        }
      }));

  out.push_back(detail::timed_check(
      "character-resummation", "exhaustive", [&](CheckResult& res) {
        std::vector<char> ok(num_classes, 1);
        parallel_for(opts.jobs, num_classes, [&](long long c) {
          CycEl char_sum(r);
          for (size_t i = 0; i < table.shapes.size(); ++i)
            char_sum += table.values[i][c];
          ok[c] = (char_sum ==
                   CycEl::integer(r, lemma_chi_sum(table.classes.reps[c])));
        });
        for (size_t c = 0; c < num_classes; ++c)
          if (!ok[c]) {
            res.pass = false;
            res.counterexample = table.classes.types[c];
            return;
          }
      }));

  out.push_back(detail::timed_check(
      "row-orthogonality", "exhaustive", [&](CheckResult& res) {
        size_t id_col = 0;
        while (id_col < num_classes &&
               !table.classes.reps[id_col].is_identity())
          ++id_col;
        for (size_t i1 = 0; i1 < table.shapes.size(); ++i1) {
          if (!(table.values[i1][id_col] ==
                CycEl::integer(r, multi_syt_count(table.shapes[i1])))) {
            res.pass = false;
            res.detail = "degree does not match standard filling count";
            res.counterexample = nlohmann::json{{"shape", table.shapes[i1]}};
            return;
          }
          for (size_t i2 = 0; i2 < table.shapes.size(); ++i2) {
            CycEl acc(r);
            for (size_t c = 0; c < num_classes; ++c)
              acc += table.classes.sizes[c] *
                     (table.values[i1][c] * table.values[i2][c].conj());
            const CycEl expect =
                CycEl::integer(r, i1 == i2 ? table.order : 0);
            if (!(acc == expect)) {
              res.pass = false;
              res.counterexample = nlohmann::json{
                  {"shape_a", table.shapes[i1]}, {"shape_b", table.shapes[i2]}};
              return;
            }
          }
        }
      }));

  return out;
}

/// Focused report for `model verify`: homomorphism status, the character
/// identity class by class, and the full multiplicity list.
inline nlohmann::json model_verify_report(int r, int n,
                                          const VerifyOptions& opts) {
  const long long order = group_order(r, n);
  if (order > opts.max_order)
    throw bound_error("group order exceeds --max-order");
  const CharacterTable table = char_table(r, n, opts.max_order);
  const size_t num_classes = table.classes.types.size();

  bool hom_pass = true;
  {
    const ModelBasis basis = ModelBasis::build(r, n, opts.max_order);
    const bool small = opts.exhaustive || order <= kExhaustivePairBound;
    if (small) {
      const auto all = enumerate_group(r, n, opts.max_order);
      for (const auto& a : all) {
        for (const auto& b : all)
          if (!homomorphism_check(basis, a, b)) {
            hom_pass = false;
            break;
          }
        if (!hom_pass) break;
      }
    } else {
      auto rng = detail::seeded_rng(opts.seed);
      if (n >= 1)
        for (const auto& a : simple_reflections(r, n))
          for (const auto& b : simple_reflections(r, n))
            if (!homomorphism_check(basis, a, b)) hom_pass = false;
      for (int t = 0; t < 200 && hom_pass; ++t)
        if (!homomorphism_check(basis, detail::random_element(r, n, rng),
                                detail::random_element(r, n, rng)))
          hom_pass = false;
    }
  }

  std::vector<long long> model_vals(num_classes, 0);
  nlohmann::json per_class = nlohmann::json::array();
  bool char_pass = true;
  parallel_for(opts.jobs, num_classes, [&](long long c) {
    model_vals[c] = model_character(table.classes.reps[c], opts.max_order);
  });
  for (size_t c = 0; c < num_classes; ++c) {
    CycEl char_sum(r);
    for (size_t i = 0; i < table.shapes.size(); ++i)
      char_sum += table.values[i][c];
    const bool ok = (char_sum == CycEl::integer(r, model_vals[c]));
    char_pass = char_pass && ok;
    per_class.push_back({{"class", table.classes.types[c].cycles_by_color},
                         {"trace", model_vals[c]},
                         {"pass", ok}});
  }

  nlohmann::json mults = nlohmann::json::array();
  bool mult_pass = true;
  for (size_t i = 0; i < table.shapes.size(); ++i) {
    CycEl acc(r);
    for (size_t c = 0; c < num_classes; ++c)
      acc += table.classes.sizes[c] *
             (CycEl::integer(r, model_vals[c]) * table.values[i][c].conj());
    long long m = -1;
    try {
      m = acc.divide_exact(table.order).as_integer();
    } catch (const std::domain_error&) {
      m = -1;
    }
    mult_pass = mult_pass && (m == 1);
    mults.push_back({{"shape", table.shapes[i]}, {"multiplicity", m}});
  }

  const bool all_pass = hom_pass && char_pass && mult_pass;
  return nlohmann::json{{"r", r},
                        {"n", n},
                        {"order", order},
                        {"homomorphism", hom_pass},
                        {"character_identity", per_class},
                        {"character_identity_pass", char_pass},
                        {"multiplicities", mults},
                        {"multiplicities_pass", mult_pass},
                        {"pass", all_pass}};
}

}  // namespace wreath
