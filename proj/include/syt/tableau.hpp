#pragma once

/*
 * Standard Young tableaux and their descent statistics.
 *
 * Conventions (fixed across the whole library):
 *   - English notation, row 1 on top, entries 1..N strictly increasing along
 *     rows and down columns.
 *   - i is a DESCENT of T when row(i) < row(i+1), i.e. i+1 sits in a lower
 *     row; i is an ASCENT when row(i) > row(i+1).
 *   - A descent i is a HIGH descent when i+1 is strictly to the left of i.
 *   - maj(T) is the sum of the descents.
 *
 * A tableau is determined by its row word (the row of each entry in order);
 * hot loops work on row words, the Tableau class keeps the grid and the
 * cell positions for direct lookups.
 */

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "syt/base.hpp"
#include "syt/partition.hpp"

namespace syt {

// word[i-1] is the 1-based row of entry i.
using RowWord = std::vector<unsigned char>;

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell& a, const Cell& b) {
    return a.row == b.row && a.col == b.col;
  }
  friend bool operator<(const Cell& a, const Cell& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  }
};

class Tableau {
 public:
  const Partition& shape() const { return shape_; }
  int rows() const { return shape_.rows(); }
  int size() const { return shape_.cells(); }

  int at(int r, int c) const { return grid_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]; }
  const std::vector<std::vector<int>>& grid() const { return grid_; }

  Cell cell_of(int entry) const { return pos_[static_cast<std::size_t>(entry - 1)]; }
  int row_of(int entry) const { return pos_[static_cast<std::size_t>(entry - 1)].row; }

  RowWord row_word() const {
    RowWord w(static_cast<std::size_t>(size()));
    for (int i = 1; i <= size(); ++i)
      w[static_cast<std::size_t>(i - 1)] = static_cast<unsigned char>(row_of(i));
    return w;
  }

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.grid_ == b.grid_;
  }
  friend bool operator!=(const Tableau& a, const Tableau& b) { return !(a == b); }
  friend bool operator<(const Tableau& a, const Tableau& b) {
    return a.grid_ < b.grid_;
  }

  friend Tableau make_tableau(const std::vector<std::vector<int>>& grid);

 private:
  Tableau(Partition shape, std::vector<std::vector<int>> grid, std::vector<Cell> pos)
      : shape_(std::move(shape)), grid_(std::move(grid)), pos_(std::move(pos)) {}

  Partition shape_;
  std::vector<std::vector<int>> grid_;
  std::vector<Cell> pos_;  // pos_[i-1] = cell of entry i
};

// Validates and builds a standard Young tableau. Each failure mode is
// reported with its own error kind: bad shape, entries not a permutation of
// 1..N, a non-increasing row, or a non-increasing column.
inline Tableau make_tableau(const std::vector<std::vector<int>>& grid) {
  std::vector<int> parts;
  parts.reserve(grid.size());
  for (const auto& row : grid) parts.push_back(static_cast<int>(row.size()));
  Partition shape(parts);  // throws bad_shape for non-partitions

  int n_cells = shape.cells();
  std::vector<Cell> pos(static_cast<std::size_t>(n_cells), Cell{});
  for (int r = 1; r <= shape.rows(); ++r) {
    for (int c = 1; c <= shape.part(r); ++c) {
      int v = grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
      if (v < 1 || v > n_cells)
        fail(errc::bad_entries, "entry " + std::to_string(v) + " outside 1.." + std::to_string(n_cells));
      Cell& p = pos[static_cast<std::size_t>(v - 1)];
      if (p.row != 0)
        fail(errc::bad_entries, "entry " + std::to_string(v) + " appears twice");
      p = Cell{r, c};
    }
  }
  for (int r = 1; r <= shape.rows(); ++r)
    for (int c = 2; c <= shape.part(r); ++c)
      if (grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 2)] >=
          grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)])
        fail(errc::row_order, "row " + std::to_string(r) + " not increasing at column " + std::to_string(c));
  Partition conj = shape.conjugate();
  for (int c = 1; c <= shape.part(1); ++c)
    for (int r = 2; r <= conj.part(c); ++r)
      if (grid[static_cast<std::size_t>(r - 2)][static_cast<std::size_t>(c - 1)] >=
          grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)])
        fail(errc::column_order, "column " + std::to_string(c) + " not increasing at row " + std::to_string(r));
  return Tableau(std::move(shape), grid, std::move(pos));
}

// Trusted path from the enumerator: the word is already a valid row word of
// the given shape, so the grid is rebuilt without re-validation.
inline Tableau tableau_from_row_word(const Partition& shape, const RowWord& word) {
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(shape.rows()));
  for (int r = 1; r <= shape.rows(); ++r)
    grid[static_cast<std::size_t>(r - 1)].reserve(static_cast<std::size_t>(shape.part(r)));
  for (int i = 1; i <= static_cast<int>(word.size()); ++i)
    grid[static_cast<std::size_t>(word[static_cast<std::size_t>(i - 1)] - 1)].push_back(i);
  return make_tableau(grid);
}

// ---- statistics ------------------------------------------------------------

struct StatRecord {
  std::vector<int> des_set;
  std::vector<int> asc_set;
  std::vector<int> hdes_set;  // always a subset of des_set
  long long maj = 0;

  int des() const { return static_cast<int>(des_set.size()); }
  int asc() const { return static_cast<int>(asc_set.size()); }
  int hdes() const { return static_cast<int>(hdes_set.size()); }
};

inline StatRecord stats(const Tableau& t) {
  StatRecord s;
  for (int i = 1; i < t.size(); ++i) {
    Cell a = t.cell_of(i), b = t.cell_of(i + 1);
    if (a.row < b.row) {
      s.des_set.push_back(i);
      s.maj += i;
      if (b.col < a.col) s.hdes_set.push_back(i);
    } else if (a.row > b.row) {
      s.asc_set.push_back(i);
    }
  }
  return s;
}

// Unordered cell pair {cell(i), cell(i+1)}, stored sorted for set semantics.
using CellPair = std::pair<Cell, Cell>;

inline CellPair make_cell_pair(Cell a, Cell b) {
  return b < a ? CellPair{b, a} : CellPair{a, b};
}

inline std::vector<CellPair> asc_cells(const Tableau& t) {
  std::vector<CellPair> out;
  for (int i : stats(t).asc_set) out.push_back(make_cell_pair(t.cell_of(i), t.cell_of(i + 1)));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<CellPair> hdes_cells(const Tableau& t) {
  std::vector<CellPair> out;
  for (int i : stats(t).hdes_set) out.push_back(make_cell_pair(t.cell_of(i), t.cell_of(i + 1)));
  std::sort(out.begin(), out.end());
  return out;
}

// ---- symmetries ------------------------------------------------------------

inline Tableau conjugate(const Tableau& t) {
  Partition conj = t.shape().conjugate();
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(conj.rows()));
  for (int r = 1; r <= conj.rows(); ++r) {
    grid[static_cast<std::size_t>(r - 1)].resize(static_cast<std::size_t>(conj.part(r)));
    for (int c = 1; c <= conj.part(r); ++c)
      grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = t.at(c, r);
  }
  return make_tableau(grid);
}

// 180-degree rotation with complemented entries; rectangles only.
inline Tableau rotate(const Tableau& t) {
  if (!t.shape().rectangular()) fail(errc::not_rectangular, "rotate requires a rectangular shape");
  int k = t.rows(), n = t.shape().part(1), total = k * n;
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n)));
  for (int r = 1; r <= k; ++r)
    for (int c = 1; c <= n; ++c)
      grid[static_cast<std::size_t>(k - r)][static_cast<std::size_t>(n - c)] = total + 1 - t.at(r, c);
  return make_tableau(grid);
}

// ---- serialization ---------------------------------------------------------

// Text format: one row per line, entries space-separated, trailing newline.
inline std::string to_text(const Tableau& t) {
  std::string out;
  for (int r = 1; r <= t.rows(); ++r) {
    for (int c = 1; c <= t.shape().part(r); ++c) {
      if (c > 1) out += ' ';
      out += std::to_string(t.at(r, c));
    }
    out += '\n';
  }
  return out;
}

inline Tableau parse_tableau(const std::string& text) {
  std::vector<std::vector<int>> grid;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row_in(line);
    std::vector<int> row;
    int v;
    while (row_in >> v) row.push_back(v);
    if (!row_in.eof())
      fail(errc::bad_argument, "tableau line is not a list of integers: " + line);
    if (!row.empty()) grid.push_back(std::move(row));
  }
  if (grid.empty()) fail(errc::bad_argument, "no tableau rows found");
  return make_tableau(grid);
}

}  // namespace syt
