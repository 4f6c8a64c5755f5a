#pragma once

/**
 * @file roots.hpp
 * @brief Counting solutions of v * bar(v) = g, three independent ways:
 *        brute force over the group, a closed-form product over pair /
 *        singleton partitions of equal-length cycles, and (elsewhere) the
 *        sum of all irreducible characters.
 */

#include <cassert>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "wreath/characters.hpp"
#include "wreath/colored_perm.hpp"

namespace wreath {

inline ColoredPermutation absolute_square(const ColoredPermutation& v) {
  return compose(v, bar(v));
}

/// #\{v : v * bar(v) = g\} by full enumeration.
inline long long count_bruteforce(const ColoredPermutation& g,
                                  long long max_order = kDefaultMaxOrder) {
  long long count = 0;
  for_each_element(
      g.r, g.n,
      [&](const ColoredPermutation& v) {
        if (absolute_square(v) == g) ++count;
      },
      max_order);
  return count;
}

/// One enumeration pass giving the count for every class at once.
inline std::map<ClassType, long long> count_bruteforce_by_class(
    int r, int n, long long max_order = kDefaultMaxOrder) {
  std::map<ClassType, long long> out;
  for (const auto& ct : all_class_types(r, n)) out[ct] = 0;
  for_each_element(
      r, n,
      [&](const ColoredPermutation& v) { ++out[class_type(absolute_square(v))]; },
      max_order);
  // The solution count is a class function, so the per-class tally is
  // (per-element count) * (class size); normalize back down.
  for (auto& [ct, total] : out) {
    const long long size = class_size(ct);
    assert(total % size == 0);
    total /= size;
  }
  return out;
}

/// Partition of an index set into pairs and singletons.
struct PairSingletonPartition {
  std::vector<std::pair<int, int>> pairs;  // (i, j) with i < j
  std::vector<int> singletons;

  int n2() const { return static_cast<int>(pairs.size()); }
  int n1() const { return static_cast<int>(singletons.size()); }
};

/**
 * All pair/singleton partitions of {0, ..., m-1} (m = colors.size())
 * honoring the color constraints: a pair (i, j) requires
 * colors[i] + colors[j] = 0 mod r, a singleton i requires colors[i] = 0
 * mod r, and singletons may be forbidden wholesale.
 */
inline std::vector<PairSingletonPartition> enumerate_pair_singleton_partitions(
    int r, const std::vector<int>& colors, bool allow_singletons) {
  const int m = static_cast<int>(colors.size());
  std::vector<PairSingletonPartition> out;
  PairSingletonPartition cur;
  std::vector<char> used(m, 0);
  std::function<void()> rec = [&]() {
    int i = 0;
    while (i < m && used[i]) ++i;
    if (i == m) {
      out.push_back(cur);
      return;
    }
    used[i] = 1;
    if (allow_singletons && colors[i] % r == 0) {
      cur.singletons.push_back(i);
      rec();
      cur.singletons.pop_back();
    }
    for (int j = i + 1; j < m; ++j) {
      if (used[j] || (colors[i] + colors[j]) % r != 0) continue;
      used[j] = 1;
      cur.pairs.emplace_back(i, j);
      rec();
      cur.pairs.pop_back();
      used[j] = 0;
    }
    used[i] = 0;
  };
  rec();
  return out;
}

/**
 * Closed-form count of v * bar(v) = g.  Cycles of g are grouped by length
 * d; within a group, sum (d r)^{#pairs} r^{#singletons} over constrained
 * pair/singleton partitions (pairs only when d is even), and multiply the
 * per-length factors.  An empty group contributes 1.
 */
inline long long count_formula_from_cycles(int r,
                                           const std::vector<ColoredCycle>& cycles) {
  std::map<int, std::vector<int>> colors_by_length;
  for (const auto& c : cycles) colors_by_length[c.length].push_back(c.color);
  long long total = 1;
  for (const auto& [d, colors] : colors_by_length) {
    const bool odd = (d % 2 == 1);
    long long nd = 0;
    for (const auto& p :
         enumerate_pair_singleton_partitions(r, colors, /*allow_singletons=*/odd)) {
      long long term = checked::pow(checked::mul(d, r), p.n2());
      term = checked::mul(term, checked::pow(r, p.n1()));
      nd = checked::add(nd, term);
    }
    total = checked::mul(total, nd);
  }
  return total;
}

inline long long count_formula(const ColoredPermutation& g) {
  return count_formula_from_cycles(g.r, colored_cycles(g));
}

/// Uncolored specialization: #\{v in S_n : v^2 = sigma\} as a product over
/// cycle lengths of sums of d^{#pairs} (pairs only for even d).
inline long long count_sqroots_sn(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  ColoredPermutation g(1, n, sigma, std::vector<int>(n, 0));
  std::map<int, int> mult;  // cycle length -> multiplicity
  for (const auto& c : colored_cycles(g)) ++mult[c.length];
  long long total = 1;
  for (auto [d, m] : mult) {
    const bool odd = (d % 2 == 1);
    std::vector<int> zeros(m, 0);
    long long nd = 0;
    for (const auto& p : enumerate_pair_singleton_partitions(1, zeros, odd))
      nd = checked::add(nd, checked::pow(d, p.n2()));
    total = checked::mul(total, nd);
  }
  return total;
}

}  // namespace wreath
