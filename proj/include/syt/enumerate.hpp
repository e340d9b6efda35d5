#pragma once

/*
 * Enumeration and exact counting of standard Young tableaux.
 *
 * The enumeration order is part of the public contract: tableaux are visited
 * in lexicographic order of their row words R(1),...,R(N). The enumerator is
 * an iterative backtracking insertion: entry i may go to row r when row r
 * still has space and sits strictly left of the frontier of row r-1.
 */

#include <cstdint>
#include <optional>
#include <type_traits>
#include <vector>

#include "syt/base.hpp"
#include "syt/partition.hpp"
#include "syt/tableau.hpp"

namespace syt {

// Hook length formula, exact. The division is asserted to be exact.
inline Int count_syt(const Partition& shape) {
  Int numerator = 1;
  for (int i = 2; i <= shape.cells(); ++i) numerator *= i;
  Int denominator = 1;
  for (int h : shape.hooks()) denominator *= h;
  Int q, r;
  boost::multiprecision::divide_qr(numerator, denominator, q, r);
  check_internal(r == 0, "hook length formula division is not exact");
  return q;
}

// Visits every row word of the shape in lexicographic order. The visitor may
// return void, or bool where false stops the sweep early.
template <class F>
inline void for_each_row_word(const Partition& shape, F&& visit) {
  const int k = shape.rows();
  const int n_cells = shape.cells();
  RowWord word(static_cast<std::size_t>(n_cells));
  std::vector<int> front(static_cast<std::size_t>(k + 1), 0);

  int i = 0;
  int start = 1;
  while (true) {
    int chosen = 0;
    for (int r = start; r <= k; ++r) {
      if (front[static_cast<std::size_t>(r)] < shape.part(r) &&
          (r == 1 || front[static_cast<std::size_t>(r - 1)] > front[static_cast<std::size_t>(r)])) {
        chosen = r;
        break;
      }
    }
    if (chosen == 0) {
      if (i == 0) return;
      --i;
      start = word[static_cast<std::size_t>(i)] + 1;
      --front[word[static_cast<std::size_t>(i)]];
      continue;
    }
    word[static_cast<std::size_t>(i)] = static_cast<unsigned char>(chosen);
    ++front[static_cast<std::size_t>(chosen)];
    if (i + 1 == n_cells) {
      if constexpr (std::is_same_v<std::invoke_result_t<F&, const RowWord&>, bool>) {
        if (!visit(static_cast<const RowWord&>(word))) return;
      } else {
        visit(static_cast<const RowWord&>(word));
      }
      --front[static_cast<std::size_t>(chosen)];
      start = chosen + 1;
    } else {
      ++i;
      start = 1;
    }
  }
}

template <class F>
inline void for_each_tableau(const Partition& shape, F&& visit) {
  for_each_row_word(shape, [&](const RowWord& w) {
    return visit(tableau_from_row_word(shape, w));
  });
}

// Materializes the enumeration, optionally truncated to the first `limit`
// tableaux. Without a limit the predicted count must stay within `budget`
// (guards against accidentally materializing astronomically many tableaux).
inline std::vector<Tableau> enumerate_syt(const Partition& shape,
                                          std::optional<std::uint64_t> limit = std::nullopt,
                                          std::uint64_t budget = 5'000'000) {
  if (!limit) {
    Int total = count_syt(shape);
    if (total > budget)
      fail(errc::budget_exceeded, "shape " + shape.to_string() + " has " + total.str() +
                                      " tableaux, budget is " + std::to_string(budget));
  }
  std::vector<Tableau> out;
  for_each_row_word(shape, [&](const RowWord& w) -> bool {
    if (limit && out.size() >= *limit) return false;
    out.push_back(tableau_from_row_word(shape, w));
    return true;
  });
  return out;
}

// All partition shapes with exactly `n_cells` cells, in lexicographically
// decreasing part order starting from the single row.
inline std::vector<Partition> shapes_with_cells(int n_cells) {
  std::vector<Partition> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(Partition(parts));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  if (n_cells > 0) rec(rec, n_cells, n_cells);
  return out;
}

}  // namespace syt
