#pragma once

/**
 * @file shapes.hpp
 * @brief Integer partitions, r-component partition tuples, standard Young
 *        tableaux and border strips (rim hooks), with exact counting.
 */

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wreath/cyclotomic.hpp"

namespace wreath {

/// Weakly decreasing positive parts.  The empty vector is the partition of 0.
using Partition = std::vector<int>;

/// Tuple of r partitions, component j holding shape lambda_j.
using MultiPartition = std::vector<Partition>;

/// Filling of a shape by rows; entries are positive and distinct.
using Tableau = std::vector<std::vector<int>>;

inline bool is_valid_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

inline int partition_size(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

inline int multipartition_size(const MultiPartition& mp) {
  int s = 0;
  for (const auto& p : mp) s += partition_size(p);
  return s;
}

/// Part of p at row i (0-based), zero beyond the last row.
inline int part_at(const Partition& p, size_t i) {
  return i < p.size() ? p[i] : 0;
}

inline bool fits_inside(const Partition& inner, const Partition& outer) {
  for (size_t i = 0; i < inner.size(); ++i)
    if (inner[i] > part_at(outer, i)) return false;
  return true;
}

/// All partitions of n, largest-first lexicographic:
/// (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions: n must be >= 0");
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rem, int max_part) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// All r-tuples of partitions with total size n.  Component-major order:
/// component 0's size runs n down to 0, partitions of each size in
/// partitions() order, later components recursively likewise.
inline std::vector<MultiPartition> multipartitions(int r, int n) {
  if (r < 1) throw std::invalid_argument("multipartitions: r must be >= 1");
  if (n < 0) throw std::invalid_argument("multipartitions: n must be >= 0");
  std::vector<MultiPartition> out;
  MultiPartition cur(r);
  std::function<void(int, int)> rec = [&](int comp, int rem) {
    if (comp == r) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    if (comp == r - 1) {
      for (const auto& p : partitions(rem)) {
        cur[comp] = p;
        rec(comp + 1, 0);
      }
      cur[comp].clear();
      return;
    }
    for (int k = rem; k >= 0; --k) {
      for (const auto& p : partitions(k)) {
        cur[comp] = p;
        rec(comp + 1, rem - k);
      }
    }
    cur[comp].clear();
  };
  rec(0, n);
  return out;
}

// ---- border strips ----

/// Border strip: edge-connected cell set with no 2x2 square.  Cells are
/// (row, col), 0-based; length and height are recomputed, never stored.
struct RimHook {
  std::vector<std::pair<int, int>> cells;
  int component = 0;

  int length() const { return static_cast<int>(cells.size()); }

  int height() const {
    std::vector<int> rows;
    for (auto& c : cells) rows.push_back(c.first);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return static_cast<int>(rows.size()) - 1;
  }
};

inline bool cells_connected(const std::vector<std::pair<int, int>>& cells) {
  if (cells.empty()) return false;
  std::vector<char> seen(cells.size(), 0);
  std::vector<size_t> stack{0};
  seen[0] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    auto [ri, ci] = cells[stack.back()];
    stack.pop_back();
    for (size_t j = 0; j < cells.size(); ++j) {
      if (seen[j]) continue;
      const int dr = cells[j].first - ri, dc = cells[j].second - ci;
      if (dr * dr + dc * dc == 1) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == cells.size();
}

inline bool cells_contain_square(const std::vector<std::pair<int, int>>& cells) {
  auto has = [&](int r, int c) {
    for (auto& x : cells)
      if (x.first == r && x.second == c) return true;
    return false;
  };
  for (auto& [r, c] : cells)
    if (has(r, c + 1) && has(r + 1, c) && has(r + 1, c + 1)) return true;
  return false;
}

inline bool is_rim_hook_cells(const std::vector<std::pair<int, int>>& cells) {
  return cells_connected(cells) && !cells_contain_square(cells);
}

struct RimHookRemoval {
  Partition rest;                            // shape left after removal
  std::vector<std::pair<int, int>> cells;    // removed cells
  int height = 0;                            // occupied rows minus one
};

/// All ways to remove a border strip of size d from shape, by brute
/// enumeration of subshapes followed by the strip predicates.
inline std::vector<RimHookRemoval> rim_hook_removals(const Partition& shape,
                                                     int d) {
  if (!is_valid_partition(shape))
    throw std::invalid_argument("rim_hook_removals: invalid partition");
  if (d < 1) throw std::invalid_argument("rim_hook_removals: d must be >= 1");
  std::vector<RimHookRemoval> out;
  const int total = partition_size(shape);
  if (d > total) return out;
  for (const auto& inner : partitions(total - d)) {
    if (!fits_inside(inner, shape)) continue;
    RimHookRemoval rem;
    rem.rest = inner;
    for (size_t i = 0; i < shape.size(); ++i)
      for (int c = part_at(inner, i); c < shape[i]; ++c)
        rem.cells.emplace_back(static_cast<int>(i), c);
    if (!is_rim_hook_cells(rem.cells)) continue;
    RimHook hook{rem.cells, 0};
    rem.height = hook.height();
    out.push_back(std::move(rem));
  }
  return out;
}

// ---- standard Young tableaux ----

/// Number of standard fillings by the hook length formula, exactly.
inline long long syt_count(const Partition& shape) {
  if (!is_valid_partition(shape))
    throw std::invalid_argument("syt_count: invalid partition");
  const int n = partition_size(shape);
  std::vector<int> col_len;  // conjugate parts
  for (size_t i = 0; i < shape.size(); ++i)
    for (int c = 0; c < shape[i]; ++c) {
      if (static_cast<size_t>(c) >= col_len.size()) col_len.push_back(0);
      ++col_len[c];
    }
  long long hooks = 1;
  for (size_t i = 0; i < shape.size(); ++i)
    for (int c = 0; c < shape[i]; ++c) {
      const long long arm = shape[i] - c - 1;
      const long long leg = col_len[c] - static_cast<long long>(i) - 1;
      hooks = checked::mul(hooks, arm + leg + 1);
    }
  const long long fact = checked::factorial(n);
  if (fact % hooks != 0)
    throw std::logic_error("syt_count: hook product does not divide n!");
  return fact / hooks;
}

/// All standard tableaux of the given shape, by growth (entry t at any
/// addable cell of the current subshape, rows scanned top to bottom).
inline std::vector<Tableau> enumerate_syt(const Partition& shape) {
  if (!is_valid_partition(shape))
    throw std::invalid_argument("enumerate_syt: invalid partition");
  const int n = partition_size(shape);
  std::vector<Tableau> out;
  Tableau t(shape.size());
  for (size_t i = 0; i < shape.size(); ++i) t[i].reserve(shape[i]);
  std::function<void(int)> rec = [&](int entry) {
    if (entry > n) {
      out.push_back(t);
      return;
    }
    for (size_t i = 0; i < shape.size(); ++i) {
      const size_t len = t[i].size();
      if (static_cast<int>(len) >= shape[i]) continue;
      if (i > 0 && t[i - 1].size() <= len) continue;
      t[i].push_back(entry);
      rec(entry + 1);
      t[i].pop_back();
    }
  };
  rec(1);
  return out;
}

/// Standard fillings of an r-component shape: entries 1..n distributed over
/// the components, each component standard.  Count = multinomial times the
/// per-component hook counts.
inline long long multi_syt_count(const MultiPartition& mp) {
  const int n = multipartition_size(mp);
  long long count = checked::factorial(n);
  for (const auto& p : mp) {
    const long long f = checked::factorial(partition_size(p));
    if (count % f != 0) throw std::logic_error("multi_syt_count: division fault");
    count /= f;
  }
  for (const auto& p : mp) count = checked::mul(count, syt_count(p));
  return count;
}

using MultiTableau = std::vector<Tableau>;

/// Direct enumeration of r-component standard fillings, for cross-checks.
inline std::vector<MultiTableau> enumerate_multi_syt(const MultiPartition& mp) {
  const int n = multipartition_size(mp);
  std::vector<MultiTableau> out;
  MultiTableau t(mp.size());
  for (size_t j = 0; j < mp.size(); ++j) t[j].resize(mp[j].size());
  std::function<void(int)> rec = [&](int entry) {
    if (entry > n) {
      out.push_back(t);
      return;
    }
    for (size_t j = 0; j < mp.size(); ++j) {
      for (size_t i = 0; i < mp[j].size(); ++i) {
        const size_t len = t[j][i].size();
        if (static_cast<int>(len) >= mp[j][i]) continue;
        if (i > 0 && t[j][i - 1].size() <= len) continue;
        t[j][i].push_back(entry);
        rec(entry + 1);
        t[j][i].pop_back();
      }
    }
  };
  rec(1);
  return out;
}

// ---- border strip tableaux over r components ----

/**
 * A filling of an r-component shape by successive border strips.  Step i
 * records which component received strip i, its cells, and its height;
 * steps are stored in insertion order.
 */
struct MultiRimHookTableau {
  struct Step {
    int component = 0;
    std::vector<std::pair<int, int>> cells;
    int height = 0;
  };
  MultiPartition shape;
  std::vector<Step> steps;
};

/// All border-strip fillings of mp whose strip sizes follow `lengths`
/// (strip i has size lengths[i]).  Empty result when sizes cannot match.
inline std::vector<MultiRimHookTableau> enumerate_multi_rht(
    const MultiPartition& mp, const std::vector<int>& lengths) {
  int total = 0;
  for (int l : lengths) {
    if (l < 1)
      throw std::invalid_argument("enumerate_multi_rht: lengths must be >= 1");
    total += l;
  }
  std::vector<MultiRimHookTableau> out;
  if (total != multipartition_size(mp)) return out;
  const int m = static_cast<int>(lengths.size());
  MultiPartition cur = mp;
  std::vector<MultiRimHookTableau::Step> steps(m);
  // peel strips from the last to the first
  std::function<void(int)> rec = [&](int i) {
    if (i == 0) {
      MultiRimHookTableau t;
      t.shape = mp;
      t.steps = steps;
      out.push_back(std::move(t));
      return;
    }
    for (size_t j = 0; j < cur.size(); ++j) {
      for (auto& rem : rim_hook_removals(cur[j], lengths[i - 1])) {
        steps[i - 1] = {static_cast<int>(j), rem.cells, rem.height};
        Partition saved = std::move(cur[j]);
        cur[j] = rem.rest;
        rec(i - 1);
        cur[j] = std::move(saved);
      }
    }
  };
  rec(m);
  return out;
}

}  // namespace wreath
