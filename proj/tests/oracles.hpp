#pragma once

// Brute-force references used only by the tests. Everything here works on the
// Young diagram as a set of cells and never touches beta-sets or abaci.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "diaghook/partition.hpp"

namespace oracle {

using diaghook::Int;
using diaghook::Partition;
using Cell = std::pair<Int, Int>;

inline std::set<Cell> cells(const Partition& lambda) {
  std::set<Cell> out;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (Int j = 1; j <= lambda.parts()[i]; ++j) out.insert({static_cast<Int>(i + 1), j});
  return out;
}

inline Partition from_cells(const std::set<Cell>& cs) {
  std::vector<Int> rows;
  for (const auto& [i, j] : cs) {
    if (static_cast<Int>(rows.size()) < i) rows.resize(static_cast<std::size_t>(i), 0);
    rows[static_cast<std::size_t>(i - 1)] = std::max(rows[static_cast<std::size_t>(i - 1)], j);
  }
  return Partition(rows);
}

inline Partition transpose(const Partition& lambda) {
  std::set<Cell> t;
  for (const auto& [i, j] : cells(lambda)) t.insert({j, i});
  return from_cells(t);
}

struct Hook {
  Int arm, leg;
  Int length() const { return arm + leg + 1; }
};

inline Hook hook(const std::set<Cell>& cs, Int i, Int j) {
  Hook h{0, 0};
  while (cs.contains({i, j + h.arm + 1})) ++h.arm;
  while (cs.contains({i + h.leg + 1, j})) ++h.leg;
  return h;
}

inline std::vector<Int> hook_lengths(const Partition& lambda) {
  const auto cs = cells(lambda);
  std::vector<Int> out;
  for (const auto& [i, j] : cs) out.push_back(hook(cs, i, j).length());
  std::sort(out.begin(), out.end());
  return out;
}

/// (leg, arm) of the diagonal cells, top-left first.
inline std::vector<std::pair<Int, Int>> diagonal(const Partition& lambda) {
  const auto cs = cells(lambda);
  std::vector<std::pair<Int, Int>> out;
  for (Int i = 1; cs.contains({i, i}); ++i) {
    const Hook h = hook(cs, i, i);
    out.emplace_back(h.leg, h.arm);
  }
  return out;
}

/// Removes the rim hook whose corner is (i, j): walk the rim from the end of
/// row i down to the bottom of column j.
inline Partition remove_rim_hook(const Partition& lambda, Int i, Int j) {
  auto cs = cells(lambda);
  const Hook h = hook(cs, i, j);
  std::set<Cell> rim;
  for (const auto& c : cs) {
    const auto [r, col] = c;
    if (r < i || r > i + h.leg || col < j) continue;
    // (r, col) is on the rim iff (r+1, col+1) is not a cell.
    if (!cs.contains({r + 1, col + 1})) rim.insert(c);
  }
  for (const auto& c : rim) cs.erase(c);
  return from_cells(cs);
}

inline bool has_hook_of_length(const Partition& lambda, Int len) {
  const auto cs = cells(lambda);
  for (const auto& [i, j] : cs)
    if (hook(cs, i, j).length() == len) return true;
  return false;
}

inline Partition p_core(Partition lambda, Int p) {
  for (;;) {
    const auto cs = cells(lambda);
    bool removed = false;
    for (const auto& [i, j] : cs)
      if (hook(cs, i, j).length() == p) {
        lambda = remove_rim_hook(lambda, i, j);
        removed = true;
        break;
      }
    if (!removed) return lambda;
  }
}

/// Number of partitions of each n <= n_max (parts-DP).
inline std::vector<Int> partition_counts(Int n_max) {
  std::vector<Int> c(static_cast<std::size_t>(n_max + 1), 0);
  c[0] = 1;
  for (Int part = 1; part <= n_max; ++part)
    for (Int n = part; n <= n_max; ++n) c[static_cast<std::size_t>(n)] += c[static_cast<std::size_t>(n - part)];
  return c;
}

/// Number of partitions of each n <= n_max into distinct odd parts.
inline std::vector<Int> distinct_odd_counts(Int n_max) {
  std::vector<Int> c(static_cast<std::size_t>(n_max + 1), 0);
  c[0] = 1;
  for (Int part = 1; part <= n_max; part += 2)
    for (Int n = n_max; n >= part; --n) c[static_cast<std::size_t>(n)] += c[static_cast<std::size_t>(n - part)];
  return c;
}

}  // namespace oracle
