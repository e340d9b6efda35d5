#pragma once

/*
 * Integer partitions in English convention: parts are weakly decreasing
 * positive row lengths, row 1 on top. Indices are 1-based throughout the
 * public interface, matching the serialization formats.
 */

#include <algorithm>
#include <string>
#include <vector>

#include "syt/base.hpp"

namespace syt {

class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) fail(errc::bad_shape, "shape must have at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        fail(errc::bad_shape, "parts must be positive at row " + std::to_string(i + 1));
      if (i > 0 && parts_[i] > parts_[i - 1])
        fail(errc::bad_shape, "parts must be weakly decreasing at row " + std::to_string(i + 1));
    }
  }

  static Partition rectangle(int n, int k) {
    if (n <= 0 || k <= 0) fail(errc::bad_shape, "rectangle needs n >= 1 and k >= 1");
    return Partition(std::vector<int>(static_cast<std::size_t>(k), n));
  }

  // Truncated staircase (n, n-1, ..., n-k+1).
  static Partition staircase(int n, int k) {
    if (k <= 0 || n < k) fail(errc::bad_shape, "staircase needs 1 <= k <= n");
    std::vector<int> p(static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r) p[static_cast<std::size_t>(r)] = n - r;
    return Partition(std::move(p));
  }

  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int r) const { return parts_[static_cast<std::size_t>(r - 1)]; }
  const std::vector<int>& parts() const { return parts_; }

  int cells() const {
    int total = 0;
    for (int p : parts_) total += p;
    return total;
  }

  bool rectangular() const { return parts_.front() == parts_.back(); }

  bool distinct() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
      if (parts_[i] >= parts_[i - 1]) return false;
    return true;
  }

  bool contains_cell(int r, int c) const {
    return r >= 1 && r <= rows() && c >= 1 && c <= part(r);
  }

  Partition conjugate() const {
    std::vector<int> q(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
      for (int c = 0; c < p; ++c) ++q[static_cast<std::size_t>(c)];
    return Partition(std::move(q));
  }

  // Hook length of cell (r, c): arm + leg + 1.
  int hook(int r, int c) const {
    int leg = 0;
    for (int rr = r + 1; rr <= rows(); ++rr)
      if (part(rr) >= c) ++leg;
    return (part(r) - c) + leg + 1;
  }

  std::vector<int> hooks() const {
    std::vector<int> h;
    h.reserve(static_cast<std::size_t>(cells()));
    Partition conj = conjugate();
    for (int r = 1; r <= rows(); ++r)
      for (int c = 1; c <= part(r); ++c)
        h.push_back((part(r) - c) + (conj.part(c) - r) + 1);
    return h;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

 private:
  std::vector<int> parts_;
};

// Parses "4,3,2" or the rectangle shorthand "6x5" meaning 5 rows of length 6.
inline Partition parse_shape(const std::string& text) {
  if (text.empty()) fail(errc::bad_argument, "empty shape");
  auto x = text.find('x');
  if (x != std::string::npos) {
    try {
      int n = std::stoi(text.substr(0, x));
      int k = std::stoi(text.substr(x + 1));
      return Partition::rectangle(n, k);
    } catch (const error&) {
      throw;
    } catch (const std::exception&) {
      fail(errc::bad_argument, "bad rectangle shorthand: " + text);
    }
  }
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    try {
      parts.push_back(std::stoi(text.substr(pos, comma - pos)));
    } catch (const std::exception&) {
      fail(errc::bad_argument, "bad shape: " + text);
    }
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace syt
