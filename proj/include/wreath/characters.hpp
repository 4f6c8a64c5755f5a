#pragma once

/**
 * @file characters.hpp
 * @brief Irreducible characters of the colored permutation group, exactly.
 *
 * Irreducibles are indexed by r-component partition tuples of n; conjugacy
 * classes by the same data (cycle lengths sub-classified by total cycle
 * color).  Character values are computed by the border-strip recursion in
 * two independent ways: a direct sum over strip fillings (the definition)
 * and a memoized peel-one-strip recursion (the fast path).  All values are
 * exact elements of Z[w].
 */

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "wreath/colored_perm.hpp"
#include "wreath/cyclotomic.hpp"
#include "wreath/shapes.hpp"

namespace wreath {

// ---- symmetric group characters ----

/// chi^shape at a permutation with the given cycle lengths, by direct
/// enumeration of border-strip fillings.
inline long long chi_sn_enumerated(const Partition& shape,
                                   const std::vector<int>& lengths) {
  int total = 0;
  for (int l : lengths) total += l;
  if (total != partition_size(shape))
    throw std::invalid_argument("chi_sn: cycle lengths must sum to |shape|");
  long long acc = 0;
  for (const auto& t : enumerate_multi_rht(MultiPartition{shape}, lengths)) {
    int ht = 0;
    for (const auto& s : t.steps) ht += s.height;
    acc = checked::add(acc, (ht % 2 == 0) ? 1 : -1);
  }
  return acc;
}

/// Same value via the memoized recursion peeling the last strip.
inline long long chi_sn(const Partition& shape,
                        const std::vector<int>& lengths) {
  int total = 0;
  for (int l : lengths) {
    if (l < 1) throw std::invalid_argument("chi_sn: cycle lengths must be >= 1");
    total += l;
  }
  if (total != partition_size(shape))
    throw std::invalid_argument("chi_sn: cycle lengths must sum to |shape|");
  std::map<std::pair<Partition, int>, long long> memo;
  std::function<long long(const Partition&, int)> eval =
      [&](const Partition& cur, int i) -> long long {
    if (i == 0) return cur.empty() ? 1 : 0;
    const auto key = std::make_pair(cur, i);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long long acc = 0;
    for (const auto& rem : rim_hook_removals(cur, lengths[i - 1])) {
      const long long sub = eval(rem.rest, i - 1);
      acc = checked::add(acc, (rem.height % 2 == 0) ? sub : -sub);
    }
    memo.emplace(key, acc);
    return acc;
  };
  return eval(shape, static_cast<int>(lengths.size()));
}

// ---- wreath product characters ----

/// chi^mp at an element whose colored cycles are given, by direct
/// enumeration of r-component border-strip fillings.
inline CycEl chi_grn_enumerated(const MultiPartition& mp,
                                const std::vector<ColoredCycle>& cycles) {
  const int r = static_cast<int>(mp.size());
  std::vector<int> lengths;
  for (const auto& c : cycles) lengths.push_back(c.length);
  CycEl acc(r);
  for (const auto& t : enumerate_multi_rht(mp, lengths)) {
    int ht = 0;
    long long alpha = 0;
    for (size_t i = 0; i < t.steps.size(); ++i) {
      ht += t.steps[i].height;
      alpha += static_cast<long long>(t.steps[i].component) * cycles[i].color;
    }
    CycEl term = CycEl::omega_pow(r, alpha);
    acc += (ht % 2 == 0) ? term : -term;
  }
  return acc;
}

/// Same value via the memoized recursion: peel the last cycle's strip from
/// every component j, weighting by (-1)^height w^{j * color}.
inline CycEl chi_grn(const MultiPartition& mp,
                     const std::vector<ColoredCycle>& cycles) {
  const int r = static_cast<int>(mp.size());
  if (r < 1) throw std::invalid_argument("chi_grn: shape needs >= 1 component");
  int total = 0;
  for (const auto& c : cycles) {
    if (c.length < 1) throw std::invalid_argument("chi_grn: cycle length must be >= 1");
    total += c.length;
  }
  if (total != multipartition_size(mp))
    throw std::invalid_argument("chi_grn: cycle lengths must sum to |shape|");
  std::map<std::pair<MultiPartition, int>, CycEl> memo;
  std::function<CycEl(const MultiPartition&, int)> eval =
      [&](const MultiPartition& cur, int i) -> CycEl {
    if (i == 0) return CycEl::integer(r, 1);
    const auto key = std::make_pair(cur, i);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    CycEl acc(r);
    const ColoredCycle& cyc = cycles[i - 1];
    for (int j = 0; j < r; ++j) {
      const CycEl w = CycEl::omega_pow(r, static_cast<long long>(j) * cyc.color);
      for (const auto& rem : rim_hook_removals(cur[j], cyc.length)) {
        MultiPartition next = cur;
        next[j] = rem.rest;
        const CycEl sub = w * eval(next, i - 1);
        acc += (rem.height % 2 == 0) ? sub : -sub;
      }
    }
    memo.emplace(key, acc);
    return acc;
  };
  return eval(mp, static_cast<int>(cycles.size()));
}

// ---- conjugacy class machinery ----

/// Abstract cycles of a class: one cycle per part, supports filled with
/// consecutive integers, total color placed on the first support element.
inline std::vector<ColoredCycle> class_type_to_cycles(const ClassType& ct) {
  std::vector<ColoredCycle> out;
  int pos = 1;
  for (int a = 0; a < ct.r; ++a) {
    for (int len : ct.cycles_by_color[a]) {
      ColoredCycle c;
      c.length = len;
      c.color = a;
      for (int t = 0; t < len; ++t) c.support.push_back(pos++);
      out.push_back(std::move(c));
    }
  }
  return out;
}

/// Canonical representative: consecutive-block cycles, each cycle's color
/// concentrated on its smallest element.
inline ColoredPermutation class_representative(const ClassType& ct) {
  ColoredPermutation g = ColoredPermutation::identity(ct.r, ct.n);
  for (const auto& c : class_type_to_cycles(ct)) {
    const int first = c.support.front(), last = c.support.back();
    for (int p = first; p < last; ++p) g.perm[p - 1] = p + 1;
    g.perm[last - 1] = first;
    g.colors[first - 1] = c.color;
  }
  g.validate();
  return g;
}

/// Centralizer order: product over (length k, color a) of m! (k r)^m with
/// m the multiplicity of that pair.
inline long long centralizer_order(const ClassType& ct) {
  long long out = 1;
  for (int a = 0; a < ct.r; ++a) {
    std::map<int, int> mult;
    for (int len : ct.cycles_by_color[a]) ++mult[len];
    for (auto [k, m] : mult) {
      out = checked::mul(out, checked::factorial(m));
      out = checked::mul(out, checked::pow(checked::mul(k, ct.r), m));
    }
  }
  return out;
}

inline long long class_size(const ClassType& ct) {
  const long long order = group_order(ct.r, ct.n);
  const long long cent = centralizer_order(ct);
  if (order % cent != 0)
    throw std::logic_error("class_size: centralizer does not divide group order");
  return order / cent;
}

/// All class labels, in the multipartition enumeration order.
inline std::vector<ClassType> all_class_types(int r, int n) {
  std::vector<ClassType> out;
  for (auto& mp : multipartitions(r, n)) out.push_back(ClassType{r, n, mp});
  return out;
}

/// Conjugation orbits, computed by closure under conjugation by the
/// generators.  Orbits are listed by their smallest member in enumeration
/// order; each orbit is sorted.
inline std::vector<std::vector<ColoredPermutation>> conjugacy_classes_bruteforce(
    int r, int n, long long max_order = kDefaultMaxOrder) {
  std::vector<ColoredPermutation> all = enumerate_group(r, n, max_order);
  const auto gens = n >= 1 ? simple_reflections(r, n)
                           : std::vector<ColoredPermutation>{};
  std::set<ColoredPermutation> visited;
  std::vector<std::vector<ColoredPermutation>> orbits;
  for (const auto& g : all) {
    if (visited.count(g)) continue;
    std::vector<ColoredPermutation> orbit{g};
    std::set<ColoredPermutation> seen{g};
    for (size_t i = 0; i < orbit.size(); ++i) {
      const ColoredPermutation cur = orbit[i];
      for (const auto& h : gens) {
        ColoredPermutation c = conjugate(h, cur);
        if (seen.insert(c).second) orbit.push_back(std::move(c));
      }
    }
    std::vector<ColoredPermutation> sorted(seen.begin(), seen.end());
    visited.insert(seen.begin(), seen.end());
    orbits.push_back(std::move(sorted));
  }
  return orbits;
}

/// Class labels with representatives and sizes, ready for summation over the
/// group.  Brute-force orbits below the crossover order, the centralizer
/// formula above it; the two agree on their overlap (tested).
struct ClassData {
  int r = 1, n = 0;
  long long order = 1;
  std::vector<ClassType> types;
  std::vector<ColoredPermutation> reps;
  std::vector<long long> sizes;
};

inline constexpr long long kClassBruteforceCrossover = 10000;

inline ClassData class_data(int r, int n,
                            long long max_order = kDefaultMaxOrder) {
  ClassData out;
  out.r = r;
  out.n = n;
  out.order = group_order(r, n);
  if (out.order > max_order)
    throw bound_error("group order exceeds bound in class_data");
  out.types = all_class_types(r, n);
  if (out.order <= kClassBruteforceCrossover) {
    std::map<ClassType, std::pair<ColoredPermutation, long long>> found;
    for (const auto& orbit : conjugacy_classes_bruteforce(r, n, max_order))
      found.emplace(class_type(orbit.front()),
                    std::make_pair(orbit.front(), (long long)orbit.size()));
    if (found.size() != out.types.size())
      throw std::logic_error("class_data: orbit count does not match type count");
    for (const auto& t : out.types) {
      auto it = found.find(t);
      if (it == found.end())
        throw std::logic_error("class_data: class type missing among orbits");
      out.reps.push_back(it->second.first);
      out.sizes.push_back(it->second.second);
    }
  } else {
    for (const auto& t : out.types) {
      out.reps.push_back(class_representative(t));
      out.sizes.push_back(class_size(t));
    }
  }
  long long total = 0;
  for (long long s : out.sizes) total = checked::add(total, s);
  if (total != out.order)
    throw std::logic_error("class_data: class sizes do not sum to group order");
  return out;
}

// ---- the character table ----

struct CharacterTable {
  int r = 1, n = 0;
  long long order = 1;
  std::vector<MultiPartition> shapes;  // row labels
  ClassData classes;                   // column labels, reps, sizes
  std::vector<std::vector<CycEl>> values;  // values[row][col]
};

inline CharacterTable char_table(int r, int n,
                                 long long max_order = kDefaultMaxOrder) {
  CharacterTable t;
  t.r = r;
  t.n = n;
  t.order = group_order(r, n);
  t.shapes = multipartitions(r, n);
  t.classes = class_data(r, n, max_order);
  t.values.resize(t.shapes.size());
  for (size_t i = 0; i < t.shapes.size(); ++i) {
    t.values[i].reserve(t.classes.types.size());
    for (const auto& ct : t.classes.types)
      t.values[i].push_back(chi_grn(t.shapes[i], class_type_to_cycles(ct)));
  }
  return t;
}

// ---- summed characters and the resummation identity ----

/// Sum of all irreducible character values at the class of g.  Always a
/// rational integer; a non-integer result throws (and is a test failure).
inline long long sum_irr_chars_from_cycles(int r, int n,
                                           const std::vector<ColoredCycle>& cycles) {
  CycEl acc(r);
  for (const auto& mp : multipartitions(r, n)) acc += chi_grn(mp, cycles);
  return acc.as_integer();
}

inline long long sum_irr_chars(const ColoredPermutation& g) {
  return sum_irr_chars_from_cycles(g.r, g.n, colored_cycles(g));
}

/**
 * The same sum evaluated by resummation: distribute the cycles of g over
 * the r colors in every possible way f, weight by w^{sum f(i) color_i}, and
 * multiply per color the full symmetric group character sums of the induced
 * cycle types.
 */
inline long long lemma_chi_sum(const ColoredPermutation& g) {
  const int r = g.r;
  const auto cycles = colored_cycles(g);
  const int m = static_cast<int>(cycles.size());
  // memo: sum over all partitions of chi_sn at a fixed cycle type
  std::map<std::vector<int>, long long> sn_sum_memo;
  auto sn_char_sum = [&](std::vector<int> lengths) -> long long {
    std::sort(lengths.begin(), lengths.end());
    auto it = sn_sum_memo.find(lengths);
    if (it != sn_sum_memo.end()) return it->second;
    int k = 0;
    for (int l : lengths) k += l;
    long long acc = 0;
    for (const auto& lam : partitions(k))
      acc = checked::add(acc, chi_sn(lam, lengths));
    sn_sum_memo.emplace(std::move(lengths), acc);
    return acc;
  };
  CycEl acc(r);
  std::vector<int> f(m, 0);
  for (;;) {
    long long alpha = 0;
    std::vector<std::vector<int>> lengths_by_color(r);
    for (int i = 0; i < m; ++i) {
      alpha += static_cast<long long>(f[i]) * cycles[i].color;
      lengths_by_color[f[i]].push_back(cycles[i].length);
    }
    long long prod = 1;
    for (int j = 0; j < r; ++j)
      prod = checked::mul(prod, sn_char_sum(lengths_by_color[j]));
    acc += CycEl::omega_pow(r, alpha) * prod;
    int i = m - 1;
    while (i >= 0 && f[i] == r - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  return acc.as_integer();
}

// ---- inner products and indicators ----

/// Class function: one exact value per class label.
using ClassFunction = std::map<ClassType, CycEl>;

/// (1/|G|) sum over classes of size * f1 * conj(f2); the division must be
/// exact, otherwise this throws.
inline CycEl inner_product(const ClassFunction& f1, const ClassFunction& f2) {
  if (f1.empty() || f1.size() != f2.size())
    throw std::invalid_argument("inner_product: class functions must cover the same classes");
  const int r = f1.begin()->first.r;
  const int n = f1.begin()->first.n;
  CycEl acc(r);
  for (const auto& ct : all_class_types(r, n)) {
    auto i1 = f1.find(ct), i2 = f2.find(ct);
    if (i1 == f1.end() || i2 == f2.end())
      throw std::invalid_argument("inner_product: missing class value");
    acc += class_size(ct) * (i1->second * i2->second.conj());
  }
  return acc.divide_exact(group_order(r, n));
}

/// Frobenius-Schur indicator of chi^mp: (1/|G|) sum over g of chi(g^2),
/// evaluated class by class.  Lands in {1, -1, 0}.
inline CycEl fs_indicator(const MultiPartition& mp, int r, int n,
                          long long max_order = kDefaultMaxOrder) {
  const ClassData cd = class_data(r, n, max_order);
  CycEl acc(r);
  for (size_t i = 0; i < cd.types.size(); ++i) {
    const ColoredPermutation sq = compose(cd.reps[i], cd.reps[i]);
    acc += cd.sizes[i] * chi_grn(mp, colored_cycles(sq));
  }
  return acc.divide_exact(cd.order);
}

}  // namespace wreath
