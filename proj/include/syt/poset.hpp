#pragma once

/*
 * Descent transport between two natural labelings of a shape's cell poset.
 *
 * A natural labeling assigns 1..N to the cells so that labels grow to the
 * right and down. The descent set of a tableau with respect to a labeling w
 * is {i : w(cell of i) > w(cell of i+1)}; the row-reading labeling sees
 * exactly the ascents and the column-reading labeling exactly the high
 * descents.
 *
 * block_resort (the containment step): given S with Des_w(T) inside S, split
 * the values 1..N at the elements of S and re-sort each value block by the
 * second labeling, keeping each block's value range. Its inverse is itself
 * with the labelings swapped.
 *
 * transport_descents (the exact step): iterate block_resort against
 * recursively corrected remainders until the output's descent set under the
 * second labeling equals Des_w(T) exactly. The recursion is on proper
 * subsets, results are memoized per (subset, direction, input) within one
 * call tree, and a generous iteration guard turns any non-termination bug
 * into a loud error. The inverse map is the same procedure with the two
 * labelings swapped, which round-trip tests confirm.
 *
 * asc_to_hdes is the (row-reading, column-reading) instance: it carries
 * Asc(T) to HDes(output) as sets, not just in cardinality.
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "syt/base.hpp"
#include "syt/enumerate.hpp"
#include "syt/partition.hpp"
#include "syt/tableau.hpp"

namespace syt {

class NaturalLabeling {
 public:
  // Validates that the grid is shaped like a partition and is an
  // order-preserving bijection onto 1..N (right and down neighbors larger).
  static NaturalLabeling from_grid(const std::vector<std::vector<int>>& grid) {
    std::vector<int> parts;
    for (const auto& row : grid) parts.push_back(static_cast<int>(row.size()));
    Partition shape(parts);
    int n_cells = shape.cells();
    std::vector<bool> seen(static_cast<std::size_t>(n_cells + 1), false);
    for (int r = 1; r <= shape.rows(); ++r)
      for (int c = 1; c <= shape.part(r); ++c) {
        int v = grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
        if (v < 1 || v > n_cells || seen[static_cast<std::size_t>(v)])
          fail(errc::bad_labeling, "labels must be a permutation of 1.." + std::to_string(n_cells));
        seen[static_cast<std::size_t>(v)] = true;
      }
    for (int r = 1; r <= shape.rows(); ++r)
      for (int c = 1; c <= shape.part(r); ++c) {
        int v = grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
        if (shape.contains_cell(r, c + 1) && grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] < v)
          fail(errc::bad_labeling, "labeling decreases along row " + std::to_string(r));
        if (shape.contains_cell(r + 1, c) && grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] < v)
          fail(errc::bad_labeling, "labeling decreases down column " + std::to_string(c));
      }
    return NaturalLabeling(std::move(shape), grid);
  }

  // Lexicographic row reading: row 1 left to right, then row 2, ...
  static NaturalLabeling row_reading(const Partition& shape) {
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(shape.rows()));
    int next = 1;
    for (int r = 1; r <= shape.rows(); ++r)
      for (int c = 1; c <= shape.part(r); ++c)
        grid[static_cast<std::size_t>(r - 1)].push_back(next++);
    return NaturalLabeling(shape, std::move(grid));
  }

  // Lexicographic column reading: column 1 top to bottom, then column 2, ...
  static NaturalLabeling column_reading(const Partition& shape) {
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(shape.rows()));
    for (int r = 1; r <= shape.rows(); ++r)
      grid[static_cast<std::size_t>(r - 1)].resize(static_cast<std::size_t>(shape.part(r)));
    Partition conj = shape.conjugate();
    int next = 1;
    for (int c = 1; c <= shape.part(1); ++c)
      for (int r = 1; r <= conj.part(c); ++r)
        grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = next++;
    return NaturalLabeling(shape, std::move(grid));
  }

  const Partition& shape() const { return shape_; }
  int at(int r, int c) const { return grid_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]; }
  int at(const Cell& cell) const { return at(cell.row, cell.col); }

 private:
  NaturalLabeling(Partition shape, std::vector<std::vector<int>> grid)
      : shape_(std::move(shape)), grid_(std::move(grid)) {}
  Partition shape_;
  std::vector<std::vector<int>> grid_;
};

inline std::vector<int> descent_set(const Tableau& t, const NaturalLabeling& w) {
  check_internal(t.shape() == w.shape(), "labeling shape mismatch");
  std::vector<int> out;
  for (int i = 1; i < t.size(); ++i)
    if (w.at(t.cell_of(i)) > w.at(t.cell_of(i + 1))) out.push_back(i);
  return out;
}

// Optional counters surfaced by the verification harness; the worst-case
// iteration behavior of the exact transport is an open measurement.
struct TransportStats {
  long long resort_calls = 0;
  long long correction_rounds = 0;  // while-loop turns across the call tree
  long long max_rounds_single = 0;  // worst single while-loop
};

namespace detail {

inline Tableau block_resort_impl(const Tableau& t, const std::vector<int>& s_sorted,
                                 const NaturalLabeling& w, const NaturalLabeling& w2,
                                 TransportStats* stats) {
  if (stats) ++stats->resort_calls;
  std::vector<int> des = descent_set(t, w);
  if (!std::includes(s_sorted.begin(), s_sorted.end(), des.begin(), des.end()))
    fail(errc::descents_not_contained, "block resort requires Des(T) inside S");

  int n_cells = t.size();
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(t.rows()));
  for (int r = 1; r <= t.rows(); ++r)
    grid[static_cast<std::size_t>(r - 1)].resize(static_cast<std::size_t>(t.shape().part(r)));

  std::vector<int> bounds = s_sorted;
  bounds.push_back(n_cells);
  int value = 1;
  int block_start = 1;
  std::vector<std::pair<int, Cell>> block;  // (w2 label, cell)
  for (int bound : bounds) {
    block.clear();
    for (int v = block_start; v <= bound; ++v) {
      Cell cell = t.cell_of(v);
      block.emplace_back(w2.at(cell), cell);
    }
    std::sort(block.begin(), block.end());
    for (const auto& [label, cell] : block)
      grid[static_cast<std::size_t>(cell.row - 1)][static_cast<std::size_t>(cell.col - 1)] = value++;
    block_start = bound + 1;
  }
  // Re-sorting a block by a natural labeling keeps it a linear extension,
  // so validation cannot fire here.
  return make_tableau(grid);
}

using TransportKey = std::tuple<std::vector<int>, bool, RowWord>;

struct TransportCtx {
  const NaturalLabeling* w = nullptr;   // forward direction: w -> w2
  const NaturalLabeling* w2 = nullptr;
  TransportStats* stats = nullptr;
  bool memoize = true;
  long long guard = 0;
  std::map<TransportKey, Tableau> memo;
};

// swapped = false transports Des_w -> Des_w2, swapped = true the reverse;
// the reverse direction is exactly the inverse map.
inline Tableau transport_exact(const Tableau& t, const std::vector<int>& s_sorted,
                               bool swapped, TransportCtx& ctx) {
  const NaturalLabeling& from = swapped ? *ctx.w2 : *ctx.w;
  const NaturalLabeling& to = swapped ? *ctx.w : *ctx.w2;

  TransportKey key;
  if (ctx.memoize) {
    key = TransportKey{s_sorted, swapped, t.row_word()};
    auto it = ctx.memo.find(key);
    if (it != ctx.memo.end()) return it->second;
  }

  Tableau out = block_resort_impl(t, s_sorted, from, to, ctx.stats);
  long long rounds = 0;
  while (true) {
    std::vector<int> reached = descent_set(out, to);
    if (reached == s_sorted) break;
    if (++rounds > ctx.guard)
      fail(errc::iteration_guard, "descent transport exceeded its iteration guard");
    // reached is a proper subset of s_sorted, so the nested call recurses on
    // a strictly smaller exact problem.
    Tableau pulled_back = transport_exact(out, reached, !swapped, ctx);
    out = block_resort_impl(pulled_back, s_sorted, from, to, ctx.stats);
  }
  if (ctx.stats) {
    ctx.stats->correction_rounds += rounds;
    ctx.stats->max_rounds_single = std::max(ctx.stats->max_rounds_single, rounds);
  }
  if (ctx.memoize) ctx.memo.emplace(std::move(key), out);
  return out;
}

inline Tableau transport_run(const Tableau& t, const NaturalLabeling& w,
                             const NaturalLabeling& w2, bool swapped,
                             TransportStats* stats, bool memoize) {
  check_internal(t.shape() == w.shape() && t.shape() == w2.shape(),
                 "labeling shape mismatch");
  TransportCtx ctx;
  ctx.w = &w;
  ctx.w2 = &w2;
  ctx.stats = stats;
  ctx.memoize = memoize;
  std::vector<int> s = descent_set(t, swapped ? w2 : w);
  // Every correction round lands on a distinct extension of the target side,
  // so the number of linear extensions bounds each loop; the guard only
  // turns a true non-termination bug into an error. Single loops needing
  // thousands of rounds do occur (shape (5,4,2,1) already needs > 1024).
  Int extensions = count_syt(t.shape());
  long long limit = std::numeric_limits<long long>::max();
  ctx.guard = extensions > Int(limit) ? limit
                                      : std::max<long long>(1024, static_cast<long long>(extensions));
  return transport_exact(t, s, swapped, ctx);
}

}  // namespace detail

// f_subset: one containment resort step.
inline Tableau block_resort(const Tableau& t, std::vector<int> s,
                            const NaturalLabeling& w, const NaturalLabeling& w2) {
  check_internal(t.shape() == w.shape() && t.shape() == w2.shape(),
                 "labeling shape mismatch");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int v : s)
    if (v < 1 || v >= t.size()) fail(errc::bad_argument, "descent positions must lie in 1..N-1");
  return detail::block_resort_impl(t, s, w, w2, nullptr);
}

// f_equal: Des_w(T) becomes Des_w2(output) exactly.
inline Tableau transport_descents(const Tableau& t, const NaturalLabeling& w,
                                  const NaturalLabeling& w2,
                                  TransportStats* stats = nullptr, bool memoize = true) {
  return detail::transport_run(t, w, w2, /*swapped=*/false, stats, memoize);
}

inline Tableau transport_descents_inverse(const Tableau& t, const NaturalLabeling& w,
                                          const NaturalLabeling& w2,
                                          TransportStats* stats = nullptr, bool memoize = true) {
  return detail::transport_run(t, w, w2, /*swapped=*/true, stats, memoize);
}

// Asc(T) = HDes(asc_to_hdes(T)) as sets.
inline Tableau asc_to_hdes(const Tableau& t, TransportStats* stats = nullptr) {
  return transport_descents(t, NaturalLabeling::row_reading(t.shape()),
                            NaturalLabeling::column_reading(t.shape()), stats);
}

inline Tableau asc_to_hdes_inverse(const Tableau& t, TransportStats* stats = nullptr) {
  return transport_descents_inverse(t, NaturalLabeling::row_reading(t.shape()),
                                    NaturalLabeling::column_reading(t.shape()), stats);
}

}  // namespace syt
