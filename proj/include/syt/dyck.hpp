#pragma once

/*
 * Dyck paths as balanced U/D words, with the lattice rendering used for
 * peak and valley coordinates: the path runs from (0,0) to (n,n) weakly
 * above the diagonal, U is the unit north step and D the unit east step.
 *
 * Two-row rectangular tableaux correspond to Dyck paths: step i is U exactly
 * when entry i sits in row 1. Under this map ascents become valleys (DU
 * corners) and descents become peaks (UD corners).
 */

#include <string>
#include <utility>
#include <vector>

#include "syt/base.hpp"
#include "syt/partition.hpp"
#include "syt/tableau.hpp"

namespace syt {

class DyckPath {
 public:
  // Accepts a word over {U, D} (case-insensitive); it must be balanced and
  // every prefix must contain at least as many U as D.
  explicit DyckPath(const std::string& word) {
    int height = 0;
    for (char ch : word) {
      if (ch == 'U' || ch == 'u') {
        steps_.push_back(true);
        ++height;
      } else if (ch == 'D' || ch == 'd') {
        steps_.push_back(false);
        --height;
        if (height < 0) fail(errc::bad_dyck, "path dips below the diagonal");
      } else {
        fail(errc::bad_dyck, std::string("bad step character: ") + ch);
      }
    }
    if (height != 0) fail(errc::bad_dyck, "path is not balanced");
    if (steps_.empty()) fail(errc::bad_dyck, "empty path");
  }

  int semilength() const { return static_cast<int>(steps_.size()) / 2; }
  int length() const { return static_cast<int>(steps_.size()); }
  bool is_up(int i) const { return steps_[static_cast<std::size_t>(i - 1)]; }  // 1-based

  std::string word() const {
    std::string w;
    w.reserve(steps_.size());
    for (bool up : steps_) w += up ? 'U' : 'D';
    return w;
  }

  // UD corners in the lattice rendering; x counts D steps, y counts U steps.
  std::vector<std::pair<int, int>> peaks() const { return corners(true); }
  // DU corners.
  std::vector<std::pair<int, int>> valleys() const { return corners(false); }

  friend bool operator==(const DyckPath& a, const DyckPath& b) { return a.steps_ == b.steps_; }
  friend bool operator!=(const DyckPath& a, const DyckPath& b) { return !(a == b); }

 private:
  std::vector<std::pair<int, int>> corners(bool up_then_down) const {
    std::vector<std::pair<int, int>> out;
    int x = 0, y = 0;
    for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
      if (steps_[i]) ++y; else ++x;
      if (steps_[i] == up_then_down && steps_[i + 1] != up_then_down)
        out.emplace_back(x, y);
    }
    return out;
  }

  std::vector<bool> steps_;  // true = U
};

// Two-row rectangle to path: step i is U exactly when i is in row 1.
inline DyckPath to_dyck(const Tableau& t) {
  if (t.rows() != 2 || !t.shape().rectangular())
    fail(errc::bad_shape, "to_dyck requires a 2-row rectangular tableau");
  std::string w;
  for (int i = 1; i <= t.size(); ++i) w += t.row_of(i) == 1 ? 'U' : 'D';
  return DyckPath(w);
}

inline Tableau from_dyck(const DyckPath& d) {
  std::vector<std::vector<int>> grid(2);
  for (int i = 1; i <= d.length(); ++i)
    grid[d.is_up(i) ? 0 : 1].push_back(i);
  return make_tableau(grid);
}

}  // namespace syt
