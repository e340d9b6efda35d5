#pragma once

/*
 * Statistic-controlling involutions on tableaux, implemented as local edits
 * on arrow encodings: every tableau-level map is encode, transform, decode.
 *
 * complement_descents (rectangles): per row pair (r, r+1) and every column
 * c = 0..n, either remove a leading d above together with a trailing u
 * below, or, when neither is present, insert both. Complements des:
 * des(T) + des(out) = (k-1)(n+1). The per-row edits commute, so the full
 * map applies them row by row in one sweep.
 *
 * complement_ascents (rectangles): the mirrored edit, trailing d above and
 * leading u below. Complements asc: asc(T) + asc(out) = (k-1)(n-1).
 *
 * complement_ascents_distinct (strictly decreasing parts): the same edit
 * restricted to columns c = 0..lambda_{r+1}.
 *
 * reverse_arrows (rectangles): reverses every sequence; swaps the roles of
 * descents and ascents up to the k-1 shift.
 *
 * rowmotion (rectangles): reverse, complement descents, conjugate, reverse,
 * conjugate. Sends asc to hdes.
 *
 * lalanne_kreweras: the classical involution on Dyck paths, computed from
 * peak coordinates; equals complement_descents on two-row rectangles under
 * the path correspondence.
 */

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "syt/arrow.hpp"
#include "syt/base.hpp"
#include "syt/dyck.hpp"
#include "syt/tableau.hpp"

namespace syt {

namespace detail {

inline bool leading_is(const ArrowSeq& s, Arrow x) { return !s.empty() && s.front() == x; }
inline bool trailing_is(const ArrowSeq& s, Arrow x) { return !s.empty() && s.back() == x; }

inline void drop_leading(ArrowSeq& s) { s.erase(s.begin()); }
inline void drop_trailing(ArrowSeq& s) { s.pop_back(); }
inline void put_leading(ArrowSeq& s, Arrow x) { s.insert(s.begin(), x); }
inline void put_trailing(ArrowSeq& s, Arrow x) { s.push_back(x); }

// Shared edit for both complement maps. For each column c in 0..c_max:
// if the chosen end of the upper sequence is d and the opposite end of the
// lower sequence is u, remove both; if neither is present, insert both.
// at_leading_upper selects which variant: true edits leading-above with
// trailing-below (descent complement), false the mirror (ascent complement).
inline void complement_pair(ArrowArray& a, int r, int c_max, bool at_leading_upper) {
  for (int c = 0; c <= c_max; ++c) {
    ArrowSeq& upper = a.seq(r, c);
    ArrowSeq& lower = a.seq(r + 1, c);
    bool has_d, has_u;
    if (at_leading_upper) {
      has_d = leading_is(upper, Arrow::down);
      has_u = trailing_is(lower, Arrow::up);
    } else {
      has_d = trailing_is(upper, Arrow::down);
      has_u = leading_is(lower, Arrow::up);
    }
    if (has_d && has_u) {
      if (at_leading_upper) {
        drop_leading(upper);
        drop_trailing(lower);
      } else {
        drop_trailing(upper);
        drop_leading(lower);
      }
    } else if (!has_d && !has_u) {
      if (at_leading_upper) {
        put_leading(upper, Arrow::down);
        put_trailing(lower, Arrow::up);
      } else {
        put_trailing(upper, Arrow::down);
        put_leading(lower, Arrow::up);
      }
    }
  }
}

inline void require_row_pair(const ArrowArray& a, int r) {
  if (r < 1 || r >= a.rows()) fail(errc::bad_argument, "row pair index out of range");
}

}  // namespace detail

// ---- arrow-level maps --------------------------------------------------------

inline void complement_descents_at(ArrowArray& a, int r) {
  if (!a.shape().rectangular()) fail(errc::not_rectangular, "descent complement requires a rectangle");
  detail::require_row_pair(a, r);
  detail::complement_pair(a, r, a.cols(r), /*at_leading_upper=*/true);
}

inline void complement_descents(ArrowArray& a) {
  if (!a.shape().rectangular()) fail(errc::not_rectangular, "descent complement requires a rectangle");
  // The per-pair edits commute, so one ascending sweep equals applying them
  // simultaneously.
  for (int r = 1; r < a.rows(); ++r) detail::complement_pair(a, r, a.cols(r), true);
}

inline void complement_ascents_at(ArrowArray& a, int r) {
  if (!a.shape().rectangular()) fail(errc::not_rectangular, "ascent complement requires a rectangle");
  detail::require_row_pair(a, r);
  detail::complement_pair(a, r, a.cols(r), /*at_leading_upper=*/false);
}

inline void complement_ascents(ArrowArray& a) {
  if (!a.shape().rectangular()) fail(errc::not_rectangular, "ascent complement requires a rectangle");
  for (int r = 1; r < a.rows(); ++r) detail::complement_pair(a, r, a.cols(r), false);
}

inline void complement_ascents_distinct_at(ArrowArray& a, int r) {
  if (!a.shape().distinct()) fail(errc::not_distinct, "this ascent complement requires strictly decreasing parts");
  detail::require_row_pair(a, r);
  detail::complement_pair(a, r, a.cols(r + 1), /*at_leading_upper=*/false);
}

inline void complement_ascents_distinct(ArrowArray& a) {
  if (!a.shape().distinct()) fail(errc::not_distinct, "this ascent complement requires strictly decreasing parts");
  for (int r = 1; r < a.rows(); ++r) detail::complement_pair(a, r, a.cols(r + 1), false);
}

// ---- tableau-level wrappers ----------------------------------------------------

namespace detail {

template <class Transform>
inline Tableau via_arrows(const Tableau& t, Transform&& transform) {
  ArrowCodec codec(t.shape());
  ArrowArray a(t.shape());
  RowWord w = t.row_word();
  codec.encode(w, a);
  transform(a);
  codec.decode(a, w);  // transforms preserve validity; decode re-checks it
  return tableau_from_row_word(t.shape(), w);
}

}  // namespace detail

inline Tableau complement_descents(const Tableau& t) {
  return detail::via_arrows(t, [](ArrowArray& a) { complement_descents(a); });
}
inline Tableau complement_descents_at(const Tableau& t, int r) {
  return detail::via_arrows(t, [r](ArrowArray& a) { complement_descents_at(a, r); });
}
inline Tableau complement_ascents(const Tableau& t) {
  return detail::via_arrows(t, [](ArrowArray& a) { complement_ascents(a); });
}
inline Tableau complement_ascents_at(const Tableau& t, int r) {
  return detail::via_arrows(t, [r](ArrowArray& a) { complement_ascents_at(a, r); });
}
inline Tableau complement_ascents_distinct(const Tableau& t) {
  return detail::via_arrows(t, [](ArrowArray& a) { complement_ascents_distinct(a); });
}
inline Tableau complement_ascents_distinct_at(const Tableau& t, int r) {
  return detail::via_arrows(t, [r](ArrowArray& a) { complement_ascents_distinct_at(a, r); });
}
inline Tableau reverse_arrows(const Tableau& t) {
  return detail::via_arrows(t, [](ArrowArray& a) { reverse_all(a); });
}
inline Tableau reverse_arrows_at(const Tableau& t, int r) {
  return detail::via_arrows(t, [r](ArrowArray& a) { reverse_row(a, r); });
}

// reverse, descent complement, conjugate, reverse, conjugate.
inline Tableau rowmotion(const Tableau& t) {
  if (!t.shape().rectangular()) fail(errc::not_rectangular, "rowmotion requires a rectangular shape");
  Tableau x = reverse_arrows(t);
  x = complement_descents(x);
  x = conjugate(x);
  x = reverse_arrows(x);
  return conjugate(x);
}

// ---- Lalanne-Kreweras on Dyck paths ---------------------------------------------

// Peaks of the input at (x_i, y_i); the output is the path whose UD corners,
// rendered below the diagonal with the step roles swapped, sit at the sorted
// complements of the x and y coordinate lists in {0..n}.
inline DyckPath lalanne_kreweras(const DyckPath& d) {
  int n = d.semilength();
  auto pk = d.peaks();
  std::vector<bool> used_x(static_cast<std::size_t>(n + 1), false),
      used_y(static_cast<std::size_t>(n + 1), false);
  for (auto [x, y] : pk) {
    used_x[static_cast<std::size_t>(x)] = true;
    used_y[static_cast<std::size_t>(y)] = true;
  }
  std::vector<int> cx, cy;
  for (int v = 0; v <= n; ++v) {
    if (!used_x[static_cast<std::size_t>(v)]) cx.push_back(v);
    if (!used_y[static_cast<std::size_t>(v)]) cy.push_back(v);
  }
  check_internal(cx.size() == cy.size() && !cx.empty(), "peak complement sizes differ");
  // Below-diagonal rendering: runs of east steps to each new corner x, then
  // north steps to the next corner's height. Reading east as U and north as
  // D yields the U/D word.
  std::string word;
  int px = 0;
  for (std::size_t j = 0; j < cx.size(); ++j) {
    word.append(static_cast<std::size_t>(cx[j] - px), 'U');
    px = cx[j];
    int y_next = j + 1 < cy.size() ? cy[j + 1] : n;
    word.append(static_cast<std::size_t>(y_next - cy[j]), 'D');
  }
  return DyckPath(word);
}

}  // namespace syt
