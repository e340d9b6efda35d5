#pragma once

/*
 * Arrow encodings of standard Young tableaux.
 *
 * A tableau of shape lambda is encoded as an array of short alternating
 * sequences over {u, d}, one sequence A(r, c) per row r and column index
 * c = 0..lambda_r. Column 0 is a first-class index: it carries the fixed
 * left-border u for every row below the first.
 *
 * Encoding walks the entries 1..N. With max_r = rightmost filled column of
 * row r after placing i:
 *   - row(i) < row(i+1): append d to A(r, max_r) for row(i) <= r < row(i+1)
 *   - row(i) > row(i+1): append u to A(r, max_r) for row(i) >= r > row(i+1)
 * and finally d is appended to A(r, lambda_r) for row(N) <= r < k.
 *
 * Validity is five independently reported conditions:
 *   left border  - A(1,0) empty, A(r,0) = u for r >= 2
 *   right border - A(r, lambda_r) ends with d for r < k
 *   alternation  - no sequence has two equal adjacent arrows
 *   matching     - per row pair, #d above equals #u below; row 1 has no u,
 *                  row k has no d
 *   ballot       - prefix counts: #d in A(r, 1..c) <= #u in A(r+1, 1..c)
 *                  for 1 <= c <= min(lambda_r - 1, lambda_{r+1})
 * For rectangles the validator also reports (without requiring) that the
 * interior right border is exactly one d per row above the last and empty on
 * the last row; that this follows from validity is a tested fact, not an
 * assumption.
 *
 * Decoding replays the walk by consuming arrows left to right; it refuses
 * invalid arrays up front, and any escape from the shape aborts loudly since
 * it would mean the codec itself is broken.
 */

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "syt/base.hpp"
#include "syt/partition.hpp"
#include "syt/tableau.hpp"

namespace syt {

enum class Arrow : unsigned char { up = 0, down = 1 };

using ArrowSeq = std::vector<Arrow>;

class ArrowArray {
 public:
  explicit ArrowArray(Partition shape) : shape_(std::move(shape)) {
    rows_.resize(static_cast<std::size_t>(shape_.rows()));
    for (int r = 1; r <= shape_.rows(); ++r)
      rows_[static_cast<std::size_t>(r - 1)].resize(static_cast<std::size_t>(shape_.part(r) + 1));
  }

  const Partition& shape() const { return shape_; }
  int rows() const { return shape_.rows(); }
  int cols(int r) const { return shape_.part(r); }  // sequences run c = 0..cols(r)

  const ArrowSeq& seq(int r, int c) const { return rows_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)]; }
  ArrowSeq& seq(int r, int c) { return rows_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)]; }

  // Clears all sequences but keeps their allocations; shape must match.
  void clear() {
    for (auto& row : rows_)
      for (auto& s : row) s.clear();
  }

  friend bool operator==(const ArrowArray& a, const ArrowArray& b) {
    return a.shape_ == b.shape_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const ArrowArray& a, const ArrowArray& b) { return !(a == b); }

 private:
  Partition shape_;
  std::vector<std::vector<ArrowSeq>> rows_;
};

// ---- validation ------------------------------------------------------------

struct Validity {
  bool left_border = true;
  bool right_border = true;
  bool alternation = true;
  bool matching = true;
  bool ballot = true;
  // Rectangles only, informational: interior right border is exactly one d
  // per row except the last, which is empty.
  bool rect_right_border = true;
  std::string detail;  // first violation, empty when fully valid

  bool ok() const { return left_border && right_border && alternation && matching && ballot; }
};

inline Validity validate(const ArrowArray& a) {
  Validity v;
  const Partition& shape = a.shape();
  int k = shape.rows();
  auto note = [&](std::string msg) {
    if (v.detail.empty()) v.detail = std::move(msg);
  };

  if (!a.seq(1, 0).empty()) {
    v.left_border = false;
    note("left border: A(1,0) must be empty");
  }
  for (int r = 2; r <= k; ++r)
    if (a.seq(r, 0) != ArrowSeq{Arrow::up}) {
      v.left_border = false;
      note("left border: A(" + std::to_string(r) + ",0) must be a single u");
    }

  for (int r = 1; r <= k - 1; ++r) {
    const ArrowSeq& s = a.seq(r, shape.part(r));
    if (s.empty() || s.back() != Arrow::down) {
      v.right_border = false;
      note("right border: A(" + std::to_string(r) + "," + std::to_string(shape.part(r)) + ") must end with d");
    }
  }

  for (int r = 1; r <= k; ++r)
    for (int c = 0; c <= shape.part(r); ++c) {
      const ArrowSeq& s = a.seq(r, c);
      for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] == s[i - 1]) {
          v.alternation = false;
          note("alternation fails in A(" + std::to_string(r) + "," + std::to_string(c) + ")");
        }
    }

  std::vector<int> downs(static_cast<std::size_t>(k + 1), 0), ups(static_cast<std::size_t>(k + 1), 0);
  for (int r = 1; r <= k; ++r)
    for (int c = 0; c <= shape.part(r); ++c)
      for (Arrow x : a.seq(r, c))
        ++(x == Arrow::down ? downs : ups)[static_cast<std::size_t>(r)];
  if (ups[1] != 0) {
    v.matching = false;
    note("matching: row 1 contains a u");
  }
  if (downs[static_cast<std::size_t>(k)] != 0) {
    v.matching = false;
    note("matching: last row contains a d");
  }
  for (int r = 1; r <= k - 1; ++r)
    if (downs[static_cast<std::size_t>(r)] != ups[static_cast<std::size_t>(r + 1)]) {
      v.matching = false;
      note("matching: #d in row " + std::to_string(r) + " differs from #u in row " + std::to_string(r + 1));
    }

  for (int r = 1; r <= k - 1; ++r) {
    int limit = std::min(shape.part(r) - 1, shape.part(r + 1));
    int d_prefix = 0, u_prefix = 0;
    for (int c = 1; c <= limit; ++c) {
      for (Arrow x : a.seq(r, c))
        if (x == Arrow::down) ++d_prefix;
      for (Arrow x : a.seq(r + 1, c))
        if (x == Arrow::up) ++u_prefix;
      if (d_prefix > u_prefix) {
        v.ballot = false;
        note("ballot fails for rows " + std::to_string(r) + "/" + std::to_string(r + 1) +
             " at column " + std::to_string(c));
        break;
      }
    }
  }

  if (shape.rectangular()) {
    int n = shape.part(1);
    for (int r = 1; r <= k - 1; ++r)
      if (a.seq(r, n) != ArrowSeq{Arrow::down}) v.rect_right_border = false;
    if (!a.seq(k, n).empty()) v.rect_right_border = false;
  }
  return v;
}

// ---- codec -----------------------------------------------------------------

// Stateful encoder/decoder for one shape. The scratch buffers live in the
// object so exhaustive sweeps can run without per-tableau allocation; the
// free functions below wrap it for one-shot use.
class ArrowCodec {
 public:
  explicit ArrowCodec(Partition shape)
      : shape_(std::move(shape)),
        rowmax_(static_cast<std::size_t>(shape_.rows() + 2), 0),
        offset_(static_cast<std::size_t>(shape_.rows() + 1), 0) {
    int base = 0;
    for (int r = 1; r <= shape_.rows(); ++r) {
      offset_[static_cast<std::size_t>(r)] = base;
      base += shape_.part(r) + 1;
    }
    readpos_.resize(static_cast<std::size_t>(base), 0);
  }

  const Partition& shape() const { return shape_; }

  // word must be a row word of this shape (trusted; the enumerator and
  // Tableau both guarantee it).
  void encode(const RowWord& word, ArrowArray& out) {
    check_internal(out.shape() == shape_, "encode target has the wrong shape");
    out.clear();
    const int k = shape_.rows();
    const int n_cells = shape_.cells();
    for (int r = 2; r <= k; ++r) out.seq(r, 0).push_back(Arrow::up);
    std::fill(rowmax_.begin(), rowmax_.end(), 0);
    for (int i = 1; i <= n_cells; ++i) {
      int r = word[static_cast<std::size_t>(i - 1)];
      ++rowmax_[static_cast<std::size_t>(r)];
      if (i == n_cells) break;
      int r2 = word[static_cast<std::size_t>(i)];
      if (r < r2) {
        for (int rr = r; rr < r2; ++rr)
          out.seq(rr, rowmax_[static_cast<std::size_t>(rr)]).push_back(Arrow::down);
      } else if (r > r2) {
        for (int rr = r; rr > r2; --rr)
          out.seq(rr, rowmax_[static_cast<std::size_t>(rr)]).push_back(Arrow::up);
      }
    }
    int last = word[static_cast<std::size_t>(n_cells - 1)];
    for (int r = last; r <= k - 1; ++r)
      out.seq(r, shape_.part(r)).push_back(Arrow::down);
  }

  // Validates, then replays the walk. Throws invalid_arrows when validation
  // fails; any escape from the shape during the walk is a loud internal
  // abort because a valid array can never escape.
  void decode(const ArrowArray& a, RowWord& out) {
    Validity v = validate(a);
    if (!v.ok()) fail(errc::invalid_arrows, "invalid arrow array: " + v.detail);
    decode_walk(a, out, /*trusted=*/false);
  }

  // Skips re-validation; used by the involution pipeline whose outputs are
  // valid by construction. Still fully bounds-guarded: malformed input ends
  // in errc::invalid_arrows, never in undefined behavior.
  void decode_trusted(const ArrowArray& a, RowWord& out) {
    decode_walk(a, out, /*trusted=*/true);
  }

 private:
  int unread(const ArrowArray& a, int r, int c) const {
    return static_cast<int>(a.seq(r, c).size()) -
           readpos_[static_cast<std::size_t>(offset_[static_cast<std::size_t>(r)] + c)];
  }
  Arrow take(const ArrowArray& a, int r, int c) {
    int& pos = readpos_[static_cast<std::size_t>(offset_[static_cast<std::size_t>(r)] + c)];
    return a.seq(r, c)[static_cast<std::size_t>(pos++)];
  }

  void decode_walk(const ArrowArray& a, RowWord& out, bool trusted) {
    check_internal(a.shape() == shape_, "decode source has the wrong shape");
    const int k = shape_.rows();
    const int n_cells = shape_.cells();
    // After a successful validation the walk can never fail; if it does, the
    // codec itself is broken. Without prior validation the same conditions
    // just mean the input was bad.
    const errc kind = trusted ? errc::invalid_arrows : errc::internal;
    out.resize(static_cast<std::size_t>(n_cells));
    std::fill(rowmax_.begin(), rowmax_.end(), 0);
    std::fill(readpos_.begin(), readpos_.end(), 0);
    int consumed = 0;
    for (int r = 2; r <= k; ++r) {
      // The left-border u of each lower row counts as read from the start.
      if (a.seq(r, 0).empty()) fail(kind, "decode: missing left border");
      readpos_[static_cast<std::size_t>(offset_[static_cast<std::size_t>(r)])] = 1;
      ++consumed;
    }
    out[0] = 1;
    rowmax_[1] = 1;
    for (int i = 1; i < n_cells; ++i) {
      int r = out[static_cast<std::size_t>(i - 1)];
      int next_row;
      if (unread(a, r, rowmax_[static_cast<std::size_t>(r)]) == 0) {
        next_row = r;
      } else {
        Arrow first = take(a, r, rowmax_[static_cast<std::size_t>(r)]);
        ++consumed;
        int step = first == Arrow::up ? -1 : +1;
        int rr = r + step;
        while (true) {
          if (rr < 1 || rr > k) fail(kind, "decode: walk escaped the shape");
          if (unread(a, rr, rowmax_[static_cast<std::size_t>(rr)]) == 0) break;
          Arrow x = take(a, rr, rowmax_[static_cast<std::size_t>(rr)]);
          ++consumed;
          if (x != first) fail(kind, "decode: walk met an opposing arrow");
          rr += step;
        }
        next_row = rr;
      }
      int c_new = rowmax_[static_cast<std::size_t>(next_row)] + 1;
      if (c_new > shape_.part(next_row)) fail(kind, "decode: row overflow");
      if (next_row > 1 && c_new > rowmax_[static_cast<std::size_t>(next_row - 1)])
        fail(kind, "decode: placement breaks the column condition");
      out[static_cast<std::size_t>(i)] = static_cast<unsigned char>(next_row);
      rowmax_[static_cast<std::size_t>(next_row)] = c_new;
    }
    // The encoder ends every row from the last entry's row down to k-1 with
    // one border d; consume them so the full-read check below is exact.
    for (int r = out[static_cast<std::size_t>(n_cells - 1)]; r <= k - 1; ++r) {
      if (unread(a, r, shape_.part(r)) == 0) fail(kind, "decode: missing right border");
      Arrow x = take(a, r, shape_.part(r));
      ++consumed;
      if (x != Arrow::down) fail(kind, "decode: right border is not d");
    }
    int total_arrows = 0;
    for (int r = 1; r <= k; ++r)
      for (int c = 0; c <= shape_.part(r); ++c)
        total_arrows += static_cast<int>(a.seq(r, c).size());
    if (consumed != total_arrows) fail(kind, "decode: arrows left unread");
  }

  Partition shape_;
  std::vector<int> rowmax_;
  std::vector<int> offset_;
  std::vector<int> readpos_;
};

inline ArrowArray encode(const Tableau& t) {
  ArrowCodec codec(t.shape());
  ArrowArray out(t.shape());
  RowWord w = t.row_word();
  codec.encode(w, out);
  return out;
}

inline Tableau decode(const ArrowArray& a) {
  ArrowCodec codec(a.shape());
  RowWord w;
  codec.decode(a, w);
  return tableau_from_row_word(a.shape(), w);
}

// ---- per-row leading/trailing sets ------------------------------------------

// Column indices c in 0..lambda_r whose sequence starts with the given arrow.
inline std::vector<int> leading_cols(const ArrowArray& a, int r, Arrow x) {
  std::vector<int> out;
  for (int c = 0; c <= a.cols(r); ++c)
    if (!a.seq(r, c).empty() && a.seq(r, c).front() == x) out.push_back(c);
  return out;
}

// Column indices whose sequence ends with the given arrow.
inline std::vector<int> trailing_cols(const ArrowArray& a, int r, Arrow x) {
  std::vector<int> out;
  for (int c = 0; c <= a.cols(r); ++c)
    if (!a.seq(r, c).empty() && a.seq(r, c).back() == x) out.push_back(c);
  return out;
}

// ---- reversal ----------------------------------------------------------------

inline void reverse_row(ArrowArray& a, int r) {
  if (!a.shape().rectangular()) fail(errc::not_rectangular, "reverse_row requires a rectangle");
  if (r < 1 || r > a.rows()) fail(errc::bad_argument, "row out of range");
  for (int c = 0; c <= a.cols(r); ++c)
    std::reverse(a.seq(r, c).begin(), a.seq(r, c).end());
}

// Reverses every sequence. Rows 1 and k only ever hold sequences of length
// at most one, so this equals reversing the interior rows.
inline void reverse_all(ArrowArray& a) {
  if (!a.shape().rectangular()) fail(errc::not_rectangular, "reverse_all requires a rectangle");
  for (int r = 1; r <= a.rows(); ++r)
    for (int c = 0; c <= a.cols(r); ++c)
      std::reverse(a.seq(r, c).begin(), a.seq(r, c).end());
}

// ---- text fixtures -----------------------------------------------------------

// One line per sequence: "r c SEQ" with SEQ a word over {u, d}, or "-" for
// the empty sequence. Lines are emitted row-major, c = 0 first.
inline std::string to_text(const ArrowArray& a) {
  std::string out;
  for (int r = 1; r <= a.rows(); ++r)
    for (int c = 0; c <= a.cols(r); ++c) {
      out += std::to_string(r) + " " + std::to_string(c) + " ";
      const ArrowSeq& s = a.seq(r, c);
      if (s.empty()) {
        out += '-';
      } else {
        for (Arrow x : s) out += x == Arrow::up ? 'u' : 'd';
      }
      out += '\n';
    }
  return out;
}

inline ArrowArray arrow_array_from_text(const std::string& text) {
  struct Entry { int r, c; ArrowSeq seq; };
  std::vector<Entry> entries;
  std::istringstream in(text);
  std::string line;
  int max_row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    Entry e;
    std::string seq_text;
    if (!(ls >> e.r >> e.c >> seq_text))
      fail(errc::bad_argument, "bad arrow fixture line: " + line);
    if (e.r < 1 || e.c < 0) fail(errc::bad_argument, "bad arrow fixture indices: " + line);
    if (seq_text != "-") {
      for (char ch : seq_text) {
        if (ch == 'u') e.seq.push_back(Arrow::up);
        else if (ch == 'd') e.seq.push_back(Arrow::down);
        else fail(errc::bad_argument, "bad arrow character in: " + line);
      }
    }
    max_row = std::max(max_row, e.r);
    entries.push_back(std::move(e));
  }
  if (entries.empty()) fail(errc::bad_argument, "empty arrow fixture");
  std::vector<int> parts(static_cast<std::size_t>(max_row), 0);
  for (const Entry& e : entries) {
    if (e.r > max_row) fail(errc::bad_argument, "row index out of range");
    parts[static_cast<std::size_t>(e.r - 1)] = std::max(parts[static_cast<std::size_t>(e.r - 1)], e.c);
  }
  ArrowArray a{Partition(parts)};
  for (const Entry& e : entries) a.seq(e.r, e.c) = e.seq;
  return a;
}

}  // namespace syt
