#pragma once

/**
 * @file rsk.hpp
 * @brief Color-separated row insertion: a bijection between colored
 *        permutations and pairs of equal-shape r-component standard
 *        tableaux.
 *
 * Scanning input positions j = 1..n, the letter perm[j] is row-inserted
 * into the insertion component selected by the color at position j, and j
 * itself is recorded in the matching recording component.  Transposing the
 * element swaps the roles of the two tableau families.
 */

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wreath/colored_perm.hpp"
#include "wreath/shapes.hpp"

namespace wreath {

/// Row-inserts v, bumping strictly larger entries downward; returns the
/// (row, col) of the cell the tableau grew by.  Entries must stay distinct.
inline std::pair<int, int> rs_insert(Tableau& t, int v) {
  for (auto& row : t)
    for (int x : row)
      if (x == v) throw std::invalid_argument("rs_insert: duplicate value");
  for (size_t i = 0;; ++i) {
    if (i == t.size()) {
      t.push_back({v});
      return {static_cast<int>(i), 0};
    }
    auto it = std::upper_bound(t[i].begin(), t[i].end(), v);
    if (it == t[i].end()) {
      t[i].push_back(v);
      return {static_cast<int>(i), static_cast<int>(t[i].size()) - 1};
    }
    std::swap(*it, v);
  }
}

/// Undoes an insertion ending at corner (row, col); returns the letter that
/// was originally inserted.
inline int reverse_insert(Tableau& t, int row, int col) {
  if (row < 0 || static_cast<size_t>(row) >= t.size() ||
      col != static_cast<int>(t[row].size()) - 1)
    throw std::invalid_argument("reverse_insert: cell is not a row corner");
  int v = t[row].back();
  t[row].pop_back();
  if (t[row].empty()) t.pop_back();
  for (int i = row - 1; i >= 0; --i) {
    auto it = std::lower_bound(t[i].begin(), t[i].end(), v);
    if (it == t[i].begin())
      throw std::invalid_argument("reverse_insert: no entry to unbump");
    --it;
    std::swap(*it, v);
  }
  return v;
}

struct TableauPair {
  std::vector<Tableau> P;  // insertion components, indexed by color
  std::vector<Tableau> Q;  // recording components
};

inline MultiPartition shape_of(const std::vector<Tableau>& mt) {
  MultiPartition mp;
  for (const auto& t : mt) {
    Partition p;
    for (const auto& row : t) p.push_back(static_cast<int>(row.size()));
    mp.push_back(std::move(p));
  }
  return mp;
}

/// Which color an inserted letter carries.  kPositionColor is the normative
/// convention (the matrix column color); kValueColor indexes the color by
/// the letter value instead and exists only so tests can exhibit that it
/// breaks transpose duality.
enum class ColorAttachment { kPositionColor, kValueColor };

inline TableauPair colored_rsk(
    const ColoredPermutation& pi,
    ColorAttachment attachment = ColorAttachment::kPositionColor) {
  TableauPair out;
  out.P.assign(pi.r, {});
  out.Q.assign(pi.r, {});
  for (int j = 1; j <= pi.n; ++j) {
    const int letter = pi.image(j);
    const int c = attachment == ColorAttachment::kPositionColor
                      ? pi.color_at(j)
                      : pi.color_at(letter);
    auto [row, col] = rs_insert(out.P[c], letter);
    if (row == static_cast<int>(out.Q[c].size()))
      out.Q[c].push_back({});
    if (col != static_cast<int>(out.Q[c][row].size()))
      throw std::logic_error("colored_rsk: recording cell is not a corner");
    out.Q[c][row].push_back(j);
  }
  return out;
}

namespace detail {

inline void validate_standard_component(const Tableau& t) {
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i].empty())
      throw std::invalid_argument("tableau pair: empty row");
    if (i > 0 && t[i].size() > t[i - 1].size())
      throw std::invalid_argument("tableau pair: row lengths must decrease");
    for (size_t c = 0; c < t[i].size(); ++c) {
      if (c > 0 && t[i][c] <= t[i][c - 1])
        throw std::invalid_argument("tableau pair: rows must increase");
      if (i > 0 && t[i][c] <= t[i - 1][c])
        throw std::invalid_argument("tableau pair: columns must increase");
    }
  }
}

}  // namespace detail

/// Inverts colored_rsk under the normative convention.
inline ColoredPermutation inverse_colored_rsk(const TableauPair& pair, int r,
                                              int n) {
  if (static_cast<int>(pair.P.size()) != r ||
      static_cast<int>(pair.Q.size()) != r)
    throw std::invalid_argument("inverse_colored_rsk: need r components in P and Q");
  std::vector<Tableau> p = pair.P, q = pair.Q;
  int cells = 0;
  std::vector<char> p_seen(n, 0), q_seen(n, 0);
  for (int c = 0; c < r; ++c) {
    detail::validate_standard_component(p[c]);
    detail::validate_standard_component(q[c]);
    if (shape_of({p[c]}) != shape_of({q[c]}))
      throw std::invalid_argument("inverse_colored_rsk: component shapes differ");
    for (const auto& row : p[c])
      for (int v : row) {
        if (v < 1 || v > n || p_seen[v - 1])
          throw std::invalid_argument("inverse_colored_rsk: bad insertion entries");
        p_seen[v - 1] = 1;
        ++cells;
      }
    for (const auto& row : q[c])
      for (int v : row) {
        if (v < 1 || v > n || q_seen[v - 1])
          throw std::invalid_argument("inverse_colored_rsk: bad recording entries");
        q_seen[v - 1] = 1;
      }
  }
  if (cells != n)
    throw std::invalid_argument("inverse_colored_rsk: total cells must equal n");

  ColoredPermutation out;
  out.r = r;
  out.n = n;
  out.perm.assign(n, 0);
  out.colors.assign(n, 0);
  for (int t = n; t >= 1; --t) {
    int comp = -1, row = -1, col = -1;
    for (int c = 0; c < r && comp < 0; ++c)
      for (size_t i = 0; i < q[c].size() && comp < 0; ++i)
        for (size_t k = 0; k < q[c][i].size(); ++k)
          if (q[c][i][k] == t) {
            comp = c;
            row = static_cast<int>(i);
            col = static_cast<int>(k);
            break;
          }
    if (comp < 0)
      throw std::invalid_argument("inverse_colored_rsk: missing recording entry");
    if (col != static_cast<int>(q[comp][row].size()) - 1 ||
        (row + 1 < static_cast<int>(q[comp].size()) &&
         static_cast<int>(q[comp][row + 1].size()) > col))
      throw std::invalid_argument("inverse_colored_rsk: entry is not at a corner");
    q[comp][row].pop_back();
    if (q[comp][row].empty()) q[comp].pop_back();
    out.perm[t - 1] = reverse_insert(p[comp], row, col);
    out.colors[t - 1] = comp;
  }
  out.validate();
  return out;
}

/// Common shape of the tableau pair of an absolute involution (for which
/// insertion and recording tableaux coincide).
inline MultiPartition shape_of_involution(const ColoredPermutation& w) {
  if (!is_absolute_involution(w))
    throw std::invalid_argument("shape_of_involution: not an absolute involution");
  return shape_of(colored_rsk(w).P);
}

}  // namespace wreath
