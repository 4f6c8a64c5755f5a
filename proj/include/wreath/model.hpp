#pragma once

/**
 * @file model.hpp
 * @brief The signed conjugation representation on absolute involutions:
 *        rho(pi) C_w = sign(pi, w) C_{pi w pi^t}, with the sign chosen by
 *        the parity of r.  Its character matches the sum of all
 *        irreducible characters, making the space a model.
 *
 * Sign conventions:
 *  - odd r:  (-1)^{# inversions of |pi| supported on 2-cycles of |w|};
 *  - even r: the same factor times (-1)^{#B(pi, w)}, where B collects the
 *    |w|-fixed positions whose odd w-color k-decomposes against pi's color
 *    into the upper half of the color circle.
 */

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wreath/characters.hpp"
#include "wreath/colored_perm.hpp"
#include "wreath/rsk.hpp"

namespace wreath {

// ---- signs ----

/// Generator-level sign of the action of generator i on basis vector v:
/// for i >= 1, -1 exactly when |v| swaps i and i+1; for i = 0, -1 exactly
/// when r is even, |v| fixes 1 and the color there is r - 1.
inline int sign_generator(int i, const ColoredPermutation& v) {
  if (i < 0 || i >= v.n)
    throw std::invalid_argument("sign_generator: generator index out of range");
  if (i == 0)
    return (v.r % 2 == 0 && v.image(1) == 1 && v.color_at(1) == v.r - 1) ? -1
                                                                         : 1;
  return (v.image(i) == i + 1 && v.image(i + 1) == i) ? -1 : 1;
}

/// Parity of |pi|-inversions lying on 2-cycles of |w|.
inline int sign_o(const ColoredPermutation& pi, const ColoredPermutation& w) {
  check_compatible(pi, w);
  int count = 0;
  for (int i = 1; i <= w.n; ++i) {
    const int j = w.image(i);
    if (j > i && pi.image(i) > pi.image(j)) ++count;
  }
  return count % 2 == 0 ? 1 : -1;
}

/// Even-r sign: sign_o times the parity of B(pi, w).  A |w|-fixed position
/// i with odd color 2k+1 enters B when (k + pi's color at i) mod r lands in
/// the upper half [r/2, r).
inline int sign_e(const ColoredPermutation& pi, const ColoredPermutation& w) {
  check_compatible(pi, w);
  if (pi.r % 2 != 0)
    throw std::invalid_argument("sign_e: requires even r");
  const int r = pi.r;
  int count = 0;
  for (int i = 1; i <= w.n; ++i) {
    if (w.image(i) != i) continue;
    const int z = w.color_at(i);
    if (z % 2 == 0) continue;
    const int k = (z - 1) / 2;  // in [0, r/2)
    if ((k + pi.color_at(i)) % r >= r / 2) ++count;
  }
  return (count % 2 == 0 ? 1 : -1) * sign_o(pi, w);
}

/// The sign the model uses: parity dispatch on r.
inline int model_sign(const ColoredPermutation& pi, const ColoredPermutation& w) {
  return pi.r % 2 == 0 ? sign_e(pi, w) : sign_o(pi, w);
}

/// pi w pi^t, the conjugation the model acts by.  Preserves absolute
/// involutions (symmetric matrices stay symmetric).
inline ColoredPermutation model_conjugate(const ColoredPermutation& pi,
                                          const ColoredPermutation& w) {
  return compose(compose(pi, w), transpose(pi));
}

// ---- the representation ----

/// Basis of all absolute involutions in canonical order, with index lookup.
struct ModelBasis {
  int r = 1, n = 0;
  std::vector<ColoredPermutation> elements;

  static ModelBasis build(int r, int n, long long max_count = kDefaultMaxOrder) {
    ModelBasis b;
    b.r = r;
    b.n = n;
    b.elements = enumerate_absolute_involutions(r, n, max_count);
    return b;
  }

  int size() const { return static_cast<int>(elements.size()); }

  int index_of(const ColoredPermutation& w) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), w);
    if (it == elements.end() || !(*it == w))
      throw std::invalid_argument("ModelBasis: element is not a basis vector");
    return static_cast<int>(it - elements.begin());
  }
};

/// A matrix with one +-1 entry per column: column j maps to row target[j]
/// with coefficient sign[j].
struct SignedPermMatrix {
  std::vector<int> target;
  std::vector<signed char> sign;

  static SignedPermMatrix identity(int dim) {
    SignedPermMatrix m;
    m.target.resize(dim);
    m.sign.assign(dim, 1);
    for (int i = 0; i < dim; ++i) m.target[i] = i;
    return m;
  }

  int dim() const { return static_cast<int>(target.size()); }

  /// Columns must form a bijection; checked on demand.
  bool is_monomial() const {
    std::vector<char> hit(target.size(), 0);
    for (size_t j = 0; j < target.size(); ++j) {
      if (target[j] < 0 || target[j] >= dim() || hit[target[j]]) return false;
      if (sign[j] != 1 && sign[j] != -1) return false;
      hit[target[j]] = 1;
    }
    return true;
  }

  long long trace() const {
    long long t = 0;
    for (int j = 0; j < dim(); ++j)
      if (target[j] == j) t += sign[j];
    return t;
  }

  friend bool operator==(const SignedPermMatrix& a, const SignedPermMatrix& b) {
    return a.target == b.target && a.sign == b.sign;
  }
};

/// a * b as linear maps (b applied first).
inline SignedPermMatrix multiply(const SignedPermMatrix& a,
                                 const SignedPermMatrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("SignedPermMatrix: dimension mismatch");
  SignedPermMatrix out;
  out.target.resize(a.dim());
  out.sign.resize(a.dim());
  for (int j = 0; j < a.dim(); ++j) {
    out.target[j] = a.target[b.target[j]];
    out.sign[j] = static_cast<signed char>(b.sign[j] * a.sign[b.target[j]]);
  }
  return out;
}

/// The action of pi on the model basis as a signed permutation matrix.
inline SignedPermMatrix rho(const ModelBasis& basis,
                            const ColoredPermutation& pi) {
  if (pi.r != basis.r || pi.n != basis.n)
    throw std::invalid_argument("rho: element does not match basis (r, n)");
  SignedPermMatrix m;
  m.target.resize(basis.size());
  m.sign.resize(basis.size());
  for (int j = 0; j < basis.size(); ++j) {
    const ColoredPermutation& w = basis.elements[j];
    m.target[j] = basis.index_of(model_conjugate(pi, w));
    m.sign[j] = static_cast<signed char>(model_sign(pi, w));
  }
  return m;
}

/// Does rho respect the product pi1 * pi2?
inline bool homomorphism_check(const ModelBasis& basis,
                               const ColoredPermutation& pi1,
                               const ColoredPermutation& pi2) {
  return rho(basis, compose(pi1, pi2)) ==
         multiply(rho(basis, pi1), rho(basis, pi2));
}

/// Fixed basis vectors of the conjugation (indices into no basis: the
/// elements themselves), in canonical order.
inline std::vector<ColoredPermutation> fix_set(
    const ColoredPermutation& pi, long long max_count = kDefaultMaxOrder) {
  std::vector<ColoredPermutation> out;
  for_each_absolute_involution(
      pi.r, pi.n,
      [&](const ColoredPermutation& w) {
        if (model_conjugate(pi, w) == w) out.push_back(w);
      },
      max_count);
  return out;
}

/// Trace of rho(pi), computed matrix-free as a signed count of fixed basis
/// vectors.
inline long long model_character(const ColoredPermutation& pi,
                                 long long max_count = kDefaultMaxOrder) {
  long long acc = 0;
  for_each_absolute_involution(
      pi.r, pi.n,
      [&](const ColoredPermutation& w) {
        if (model_conjugate(pi, w) == w) acc += model_sign(pi, w);
      },
      max_count);
  return acc;
}

// ---- the toggle involution behind the character identity ----

/**
 * For the cancellation argument pi must be in toggle-normal form: underlying
 * cycles are the consecutive blocks (1..d)(d+1..2d)... of a common even
 * length d, and each cycle's color is concentrated on its smallest element.
 */
inline bool is_toggle_normalized(const ColoredPermutation& pi, int d) {
  if (d < 2 || d % 2 != 0 || pi.n == 0 || pi.n % d != 0) return false;
  for (int start = 1; start <= pi.n; start += d) {
    for (int p = start; p < start + d - 1; ++p)
      if (pi.image(p) != p + 1) return false;
    if (pi.image(start + d - 1) != start) return false;
    for (int p = start + 1; p < start + d; ++p)
      if (pi.color_at(p) != 0) return false;
  }
  return true;
}

namespace detail {

/// 1: |w| fixes the block pointwise; 3: |w| pairs the block with itself
/// (shift by d/2); 2: |w| maps it onto a different block.
inline int block_case(const ColoredPermutation& w, int start, int d) {
  const int img = w.image(start);
  if (img == start) return 1;
  if (img >= start && img < start + d) {
    if (img != start + d / 2)
      throw std::logic_error("block_case: self-paired block with bad shift");
    return 3;
  }
  return 2;
}

}  // namespace detail

/**
 * Sign-reversing involution on the fixed set of a toggle-normalized pi of
 * cycle type d^m, d even.  The first block not paired with another block is
 * toggled: pointwise-fixed blocks with cycle color 0 trade places with
 * self-paired blocks (colors kept); for even r, a pointwise-fixed block
 * whose cycle color is r/2 instead flips the low bit of its constant color.
 * Elements whose blocks are all paired with other blocks are fixed.
 */
inline ColoredPermutation phi_toggle(const ColoredPermutation& pi,
                                     const ColoredPermutation& w) {
  check_compatible(pi, w);
  const int n = pi.n, r = pi.r;
  int d = -1;
  for (int cand = 2; cand <= n; cand += 2)
    if (is_toggle_normalized(pi, cand)) {
      d = cand;
      break;
    }
  if (d < 0)
    throw std::invalid_argument("phi_toggle: pi is not in toggle-normal form");
  if (!is_absolute_involution(w) || !(model_conjugate(pi, w) == w))
    throw std::invalid_argument("phi_toggle: w is not a fixed absolute involution");
  const int e = d / 2;
  for (int start = 1; start <= n; start += d) {
    const int c = detail::block_case(w, start, d);
    if (c == 2) continue;
    ColoredPermutation out = w;
    if (c == 1 && pi.color_at(start) != 0) {
      // color r/2 block: flip the low bit of the constant color throughout
      if (r % 2 != 0 || pi.color_at(start) != r / 2)
        throw std::logic_error("phi_toggle: unexpected block color");
      for (int p = start; p < start + d; ++p)
        out.colors[p - 1] ^= 1;
      return out;
    }
    if (c == 1) {
      for (int t = 0; t < e; ++t) {
        out.perm[start + t - 1] = start + t + e;
        out.perm[start + t + e - 1] = start + t;
      }
    } else {
      for (int t = 0; t < d; ++t) out.perm[start + t - 1] = start + t;
    }
    return out;
  }
  return w;  // every block is paired with another block
}

// ---- decomposition and the cycle-count experiment ----

struct ModelDecomposition {
  std::vector<MultiPartition> shapes;
  std::vector<long long> multiplicities;
};

/// Multiplicity of every irreducible inside the model, by exact inner
/// products of the model character against the table rows.
inline ModelDecomposition decompose_model(int r, int n,
                                          long long max_order = kDefaultMaxOrder) {
  const CharacterTable table = char_table(r, n, max_order);
  std::vector<long long> model_vals;
  for (const auto& rep : table.classes.reps)
    model_vals.push_back(model_character(rep, max_order));
  ModelDecomposition out;
  out.shapes = table.shapes;
  for (size_t i = 0; i < table.shapes.size(); ++i) {
    CycEl acc(r);
    for (size_t c = 0; c < table.classes.types.size(); ++c)
      acc += table.classes.sizes[c] *
             (CycEl::integer(r, model_vals[c]) * table.values[i][c].conj());
    out.multiplicities.push_back(acc.divide_exact(table.order).as_integer());
  }
  return out;
}

struct ConjectureGroupReport {
  int two_cycles = 0;     // 2-cycles of |w| shared by the span's vectors
  int total_cycles = 0;   // cycles of |w|, = n - two_cycles
  long long size = 0;     // number of basis vectors in the span
  bool invariant = false; // span preserved by all generators
  std::vector<MultiPartition> shapes;  // distinct insertion shapes in the span
  bool character_match = false;  // restricted trace vs sum over those shapes
};

struct ConjectureReport {
  int r = 1, n = 0;
  std::vector<ConjectureGroupReport> groups;
  bool all_match = false;
};

/**
 * Splits the basis by the number of 2-cycles of |w|, asserts each span is
 * invariant (that much is a theorem), and reports per span whether its
 * character equals the multiplicity-free sum over the distinct insertion
 * shapes of its vectors.  Comparison failures are reported, never thrown.
 */
inline ConjectureReport conjecture_experiment(int r, int n,
                                              long long max_order = kDefaultMaxOrder) {
  const ModelBasis basis = ModelBasis::build(r, n, max_order);
  const auto two_cycles_of = [](const ColoredPermutation& w) {
    int k = 0;
    for (int i = 1; i <= w.n; ++i)
      if (w.image(i) > i) ++k;
    return k;
  };
  std::map<int, std::vector<int>> by_count;  // 2-cycle count -> basis indices
  for (int j = 0; j < basis.size(); ++j)
    by_count[two_cycles_of(basis.elements[j])].push_back(j);

  const auto gens = n >= 1 ? simple_reflections(r, n)
                           : std::vector<ColoredPermutation>{};
  const CharacterTable table = char_table(r, n, max_order);

  ConjectureReport report;
  report.r = r;
  report.n = n;
  report.all_match = true;
  for (const auto& [k, indices] : by_count) {
    ConjectureGroupReport g;
    g.two_cycles = k;
    g.total_cycles = n - k;
    g.size = static_cast<long long>(indices.size());
    g.invariant = true;
    for (int j : indices)
      for (const auto& s : gens)
        if (two_cycles_of(model_conjugate(s, basis.elements[j])) != k)
          g.invariant = false;
    if (!g.invariant)
      throw std::logic_error(
          "conjecture_experiment: cycle-count span not invariant");

    std::vector<MultiPartition> shapes;
    for (int j : indices) shapes.push_back(shape_of_involution(basis.elements[j]));
    std::sort(shapes.begin(), shapes.end());
    shapes.erase(std::unique(shapes.begin(), shapes.end()), shapes.end());
    g.shapes = shapes;

    g.character_match = true;
    for (size_t c = 0; c < table.classes.reps.size(); ++c) {
      const ColoredPermutation& rep = table.classes.reps[c];
      long long restricted = 0;
      for (int j : indices) {
        const ColoredPermutation& w = basis.elements[j];
        if (model_conjugate(rep, w) == w) restricted += model_sign(rep, w);
      }
      CycEl expected(r);
      for (const auto& mp : shapes)
        expected += chi_grn(mp, class_type_to_cycles(table.classes.types[c]));
      if (!(expected == CycEl::integer(r, restricted))) {
        g.character_match = false;
        break;
      }
    }
    if (!g.character_match) report.all_match = false;
    report.groups.push_back(std::move(g));
  }
  return report;
}

}  // namespace wreath
