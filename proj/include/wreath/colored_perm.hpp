#pragma once

/**
 * @file colored_perm.hpp
 * @brief The wreath product of a cyclic color group of order r with the
 *        symmetric group on n letters, realized as colored permutations.
 *
 * An element is a pair (perm, colors): perm holds 1-based images, colors[k]
 * is the color attached to input position k+1.  The normative semantics is
 * the monomial matrix action  e_j -> w^{colors[j]} e_{perm[j]}  with w an
 * abstract r-th root of unity; composition is DEFINED so that
 * to_monomial_matrix is a homomorphism, which forces
 *
 *   (a*b).perm[k]   = a.perm[b.perm[k]]
 *   (a*b).colors[k] = a.colors[b.perm[k]] + b.colors[k]  (mod r).
 */

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "wreath/cyclotomic.hpp"

namespace wreath {

/// Thrown when a requested enumeration exceeds the configured size bound.
struct bound_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr long long kDefaultMaxOrder = 100000;

struct ColoredPermutation {
  int r = 1;
  int n = 0;
  std::vector<int> perm;    // 1-based images: perm[k] = image of position k+1
  std::vector<int> colors;  // colors[k] in [0, r)

  ColoredPermutation() = default;

  ColoredPermutation(int r_, int n_, std::vector<int> perm_,
                     std::vector<int> colors_)
      : r(r_), n(n_), perm(std::move(perm_)), colors(std::move(colors_)) {
    validate();
  }

  static ColoredPermutation identity(int r, int n) {
    ColoredPermutation out;
    out.r = r;
    out.n = n;
    out.perm.resize(n);
    std::iota(out.perm.begin(), out.perm.end(), 1);
    out.colors.assign(n, 0);
    out.validate();
    return out;
  }

  void validate() const {
    if (r < 1) throw std::invalid_argument("ColoredPermutation: r must be >= 1");
    if (n < 0) throw std::invalid_argument("ColoredPermutation: n must be >= 0");
    if (perm.size() != static_cast<size_t>(n) ||
        colors.size() != static_cast<size_t>(n))
      throw std::invalid_argument("ColoredPermutation: vector lengths must equal n");
    std::vector<char> seen(n, 0);
    for (int v : perm) {
      if (v < 1 || v > n || seen[v - 1])
        throw std::invalid_argument("ColoredPermutation: perm is not a bijection on 1..n");
      seen[v - 1] = 1;
    }
    for (int c : colors)
      if (c < 0 || c >= r)
        throw std::invalid_argument("ColoredPermutation: color out of range [0, r)");
  }

  /// Image of 1-based position i under the underlying permutation.
  int image(int i) const { return perm[i - 1]; }
  /// Color at 1-based position i.
  int color_at(int i) const { return colors[i - 1]; }

  bool is_identity() const {
    for (int i = 1; i <= n; ++i)
      if (image(i) != i || color_at(i) != 0) return false;
    return true;
  }

  // Canonical basis order: lexicographic on (perm, colors) for fixed (r, n).
  friend auto operator<=>(const ColoredPermutation&,
                          const ColoredPermutation&) = default;
};

inline void check_compatible(const ColoredPermutation& a,
                             const ColoredPermutation& b) {
  if (a.r != b.r || a.n != b.n)
    throw std::invalid_argument("colored permutations have mismatched (r, n)");
}

/// Group law: apply b first, then a (matrix product convention).
inline ColoredPermutation compose(const ColoredPermutation& a,
                                  const ColoredPermutation& b) {
  check_compatible(a, b);
  ColoredPermutation out;
  out.r = a.r;
  out.n = a.n;
  out.perm.resize(a.n);
  out.colors.resize(a.n);
  for (int k = 0; k < a.n; ++k) {
    const int t = b.perm[k];  // 1-based
    out.perm[k] = a.perm[t - 1];
    out.colors[k] = (a.colors[t - 1] + b.colors[k]) % a.r;
  }
  return out;
}

inline ColoredPermutation inverse(const ColoredPermutation& a) {
  ColoredPermutation out;
  out.r = a.r;
  out.n = a.n;
  out.perm.resize(a.n);
  out.colors.resize(a.n);
  for (int k = 0; k < a.n; ++k) out.perm[a.perm[k] - 1] = k + 1;
  for (int k = 0; k < a.n; ++k)
    out.colors[k] = (a.r - a.colors[out.perm[k] - 1]) % a.r;
  return out;
}

/// Color negation; entrywise conjugation of the monomial matrix.
inline ColoredPermutation bar(const ColoredPermutation& a) {
  ColoredPermutation out = a;
  for (auto& c : out.colors) c = (a.r - c) % a.r;
  return out;
}

/// Matrix transpose: inverse of bar.
inline ColoredPermutation transpose(const ColoredPermutation& a) {
  return inverse(bar(a));
}

/// h g h^{-1}.
inline ColoredPermutation conjugate(const ColoredPermutation& h,
                                    const ColoredPermutation& g) {
  return compose(compose(h, g), inverse(h));
}

/// True iff a * bar(a) is the identity, i.e. the monomial matrix is symmetric.
inline bool is_absolute_involution(const ColoredPermutation& a) {
  return compose(a, bar(a)).is_identity();
}

struct ColoredCycle {
  std::vector<int> support;  // positions in traversal order, starting at min
  int length = 0;
  int color = 0;             // sum of colors over the support, mod r
};

/// Cycles of the underlying permutation, each carrying its total color.
/// Ordered by smallest element of support.
inline std::vector<ColoredCycle> colored_cycles(const ColoredPermutation& a) {
  std::vector<ColoredCycle> out;
  std::vector<char> seen(a.n, 0);
  for (int i = 1; i <= a.n; ++i) {
    if (seen[i - 1]) continue;
    ColoredCycle cyc;
    int j = i;
    do {
      seen[j - 1] = 1;
      cyc.support.push_back(j);
      cyc.color = (cyc.color + a.color_at(j)) % a.r;
      j = a.image(j);
    } while (j != i);
    cyc.length = static_cast<int>(cyc.support.size());
    out.push_back(std::move(cyc));
  }
  return out;
}

/**
 * Conjugacy class label: for each color a in [0, r), the multiset of cycle
 * lengths whose total color is a, as a partition (weakly decreasing).
 */
struct ClassType {
  int r = 1;
  int n = 0;
  std::vector<std::vector<int>> cycles_by_color;  // length r

  friend auto operator<=>(const ClassType&, const ClassType&) = default;
};

inline ClassType class_type(const ColoredPermutation& a) {
  ClassType out;
  out.r = a.r;
  out.n = a.n;
  out.cycles_by_color.assign(a.r, {});
  for (const auto& c : colored_cycles(a))
    out.cycles_by_color[c.color].push_back(c.length);
  for (auto& part : out.cycles_by_color)
    std::sort(part.begin(), part.end(), std::greater<int>());
  return out;
}

/// r^n * n! with overflow detection.
inline long long group_order(int r, int n) {
  return checked::mul(checked::pow(r, n), checked::factorial(n));
}

/// Number of elements a with a * bar(a) = id, computed by the fixed-point /
/// 2-cycle count: sum over k of n! / (k! 2^k (n-2k)!) * r^{n-k}.
inline long long count_absolute_involutions(int r, int n) {
  long long total = 0;
  for (int k = 0; 2 * k <= n; ++k) {
    long long ways = checked::factorial(n);
    ways /= checked::factorial(k);
    ways /= checked::pow(2, k);
    ways /= checked::factorial(n - 2 * k);
    total = checked::add(total, checked::mul(ways, checked::pow(r, n - k)));
  }
  return total;
}

/// Streams every group element in lexicographic (perm, colors) order.
inline void for_each_element(
    int r, int n, const std::function<void(const ColoredPermutation&)>& fn,
    long long max_order = kDefaultMaxOrder) {
  const long long order = group_order(r, n);
  if (order > max_order)
    throw bound_error("group order " + std::to_string(order) +
                      " exceeds enumeration bound " + std::to_string(max_order));
  ColoredPermutation el = ColoredPermutation::identity(r, n);
  do {
    std::fill(el.colors.begin(), el.colors.end(), 0);
    for (;;) {
      fn(el);
      // odometer on colors, leftmost digit most significant
      int k = n - 1;
      while (k >= 0 && el.colors[k] == r - 1) el.colors[k--] = 0;
      if (k < 0) break;
      ++el.colors[k];
    }
  } while (std::next_permutation(el.perm.begin(), el.perm.end()));
}

inline std::vector<ColoredPermutation> enumerate_group(
    int r, int n, long long max_order = kDefaultMaxOrder) {
  std::vector<ColoredPermutation> out;
  out.reserve(static_cast<size_t>(group_order(r, n) <= max_order
                                      ? group_order(r, n)
                                      : 0));
  for_each_element(r, n, [&](const ColoredPermutation& g) { out.push_back(g); },
                   max_order);
  return out;
}

namespace detail {

// Involutions of the underlying permutation in lexicographic one-line order;
// colors run through an odometer over free positions (fixed points and cycle
// minima), so the overall stream is in canonical basis order.
inline void stream_absolute_involutions(
    int r, int n, const std::function<void(const ColoredPermutation&)>& fn) {
  ColoredPermutation el;
  el.r = r;
  el.n = n;
  el.perm.assign(n, 0);
  el.colors.assign(n, 0);
  std::vector<int> free_pos;   // 1-based positions with a free color
  std::vector<int> mirror_of;  // for pair maxima: index of the cycle minimum

  std::function<void()> emit_colors = [&]() {
    std::vector<int> digits(free_pos.size(), 0);
    for (;;) {
      for (size_t t = 0; t < free_pos.size(); ++t)
        el.colors[free_pos[t] - 1] = digits[t];
      for (int k = 0; k < n; ++k)
        if (mirror_of[k] >= 0) el.colors[k] = el.colors[mirror_of[k]];
      fn(el);
      int t = static_cast<int>(digits.size()) - 1;
      while (t >= 0 && digits[t] == r - 1) digits[t--] = 0;
      if (t < 0) return;
      ++digits[t];
    }
  };

  std::function<void(int)> build = [&](int i) {
    while (i <= n && el.perm[i - 1] != 0) ++i;
    if (i > n) {
      emit_colors();
      return;
    }
    // fixed point
    el.perm[i - 1] = i;
    free_pos.push_back(i);
    build(i + 1);
    free_pos.pop_back();
    el.perm[i - 1] = 0;
    // 2-cycle with each larger unused j, ascending
    for (int j = i + 1; j <= n; ++j) {
      if (el.perm[j - 1] != 0) continue;
      el.perm[i - 1] = j;
      el.perm[j - 1] = i;
      free_pos.push_back(i);
      mirror_of[j - 1] = i - 1;
      build(i + 1);
      mirror_of[j - 1] = -1;
      free_pos.pop_back();
      el.perm[i - 1] = 0;
      el.perm[j - 1] = 0;
    }
  };

  mirror_of.assign(n, -1);
  build(1);
}

}  // namespace detail

/// Streams all absolute involutions in canonical basis order.
inline void for_each_absolute_involution(
    int r, int n, const std::function<void(const ColoredPermutation&)>& fn,
    long long max_count = kDefaultMaxOrder) {
  const long long count = count_absolute_involutions(r, n);
  if (count > max_count)
    throw bound_error("absolute involution count " + std::to_string(count) +
                      " exceeds enumeration bound " + std::to_string(max_count));
  detail::stream_absolute_involutions(r, n, fn);
}

/// All absolute involutions, sorted by the canonical basis order.
inline std::vector<ColoredPermutation> enumerate_absolute_involutions(
    int r, int n, long long max_count = kDefaultMaxOrder) {
  std::vector<ColoredPermutation> out;
  for_each_absolute_involution(
      r, n, [&](const ColoredPermutation& g) { out.push_back(g); }, max_count);
  return out;
}

/// The n x n monomial matrix over Z[w]: entry (perm[j], j) holds w^{colors[j]}.
inline std::vector<std::vector<CycEl>> to_monomial_matrix(
    const ColoredPermutation& a) {
  std::vector<std::vector<CycEl>> m(
      a.n, std::vector<CycEl>(a.n, CycEl(a.r)));
  for (int j = 1; j <= a.n; ++j)
    m[a.image(j) - 1][j - 1] = CycEl::omega_pow(a.r, a.color_at(j));
  return m;
}

/**
 * Generators: index 0 is the color generator (identity permutation, color 1
 * at position 1); index i in 1..n-1 swaps positions i and i+1 with all
 * colors zero.  Returns n generators; requires n >= 1.
 */
inline std::vector<ColoredPermutation> simple_reflections(int r, int n) {
  if (n < 1)
    throw std::invalid_argument("simple_reflections: requires n >= 1");
  std::vector<ColoredPermutation> out;
  ColoredPermutation s0 = ColoredPermutation::identity(r, n);
  s0.colors[0] = 1 % r;
  out.push_back(std::move(s0));
  for (int i = 1; i < n; ++i) {
    ColoredPermutation si = ColoredPermutation::identity(r, n);
    std::swap(si.perm[i - 1], si.perm[i]);
    out.push_back(std::move(si));
  }
  return out;
}

}  // namespace wreath
