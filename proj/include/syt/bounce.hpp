#pragma once

/*
 * Bounce matrices. For a k-row tableau, b(r, s) counts the entries i < N
 * with i in row r and i+1 in row s. Descents are the strictly-upper part,
 * ascents the strictly-lower part, and the whole matrix always sums to N-1.
 *
 * sigma_descents generalizes both: given a permutation sigma of 1..k it sums
 * b(r, s) over the pairs with sigma(r) > sigma(s); the identity gives asc,
 * the reversal k..1 gives des.
 */

#include <string>
#include <vector>

#include "syt/base.hpp"
#include "syt/tableau.hpp"

namespace syt {

class BounceMatrix {
 public:
  explicit BounceMatrix(int k) : k_(k), data_(static_cast<std::size_t>(k * k), 0) {}

  int size() const { return k_; }
  int at(int r, int s) const { return data_[idx(r, s)]; }
  void add(int r, int s, int v) { data_[idx(r, s)] += v; }

  int row_sum(int r) const {
    int total = 0;
    for (int s = 1; s <= k_; ++s) total += at(r, s);
    return total;
  }
  int col_sum(int s) const {
    int total = 0;
    for (int r = 1; r <= k_; ++r) total += at(r, s);
    return total;
  }
  int total() const {
    int sum = 0;
    for (int v : data_) sum += v;
    return sum;
  }

  friend bool operator==(const BounceMatrix& a, const BounceMatrix& b) {
    return a.k_ == b.k_ && a.data_ == b.data_;
  }
  friend bool operator!=(const BounceMatrix& a, const BounceMatrix& b) { return !(a == b); }
  friend bool operator<(const BounceMatrix& a, const BounceMatrix& b) {
    return a.data_ < b.data_;
  }

  std::string to_string() const {
    std::string out;
    for (int r = 1; r <= k_; ++r) {
      for (int s = 1; s <= k_; ++s) {
        if (s > 1) out += ' ';
        out += std::to_string(at(r, s));
      }
      out += '\n';
    }
    return out;
  }

 private:
  std::size_t idx(int r, int s) const {
    return static_cast<std::size_t>((r - 1) * k_ + (s - 1));
  }
  int k_;
  std::vector<int> data_;
};

inline BounceMatrix bounce_matrix(const Tableau& t) {
  BounceMatrix b(t.rows());
  for (int i = 1; i < t.size(); ++i) b.add(t.row_of(i), t.row_of(i + 1), 1);
  return b;
}

inline void require_sigma(const std::vector<int>& sigma, int k) {
  if (static_cast<int>(sigma.size()) != k)
    fail(errc::bad_sigma, "permutation length " + std::to_string(sigma.size()) +
                              " does not match row count " + std::to_string(k));
  std::vector<bool> seen(static_cast<std::size_t>(k + 1), false);
  for (int v : sigma) {
    if (v < 1 || v > k || seen[static_cast<std::size_t>(v)])
      fail(errc::bad_sigma, "not a permutation of 1.." + std::to_string(k));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

// Sum of b(r, s) over pairs with sigma[r] > sigma[s] (1-based sigma).
inline int sigma_descents(const Tableau& t, const std::vector<int>& sigma) {
  int k = t.rows();
  require_sigma(sigma, k);
  BounceMatrix b = bounce_matrix(t);
  int total = 0;
  for (int r = 1; r <= k; ++r)
    for (int s = 1; s <= k; ++s)
      if (sigma[static_cast<std::size_t>(r - 1)] > sigma[static_cast<std::size_t>(s - 1)])
        total += b.at(r, s);
  return total;
}

}  // namespace syt
