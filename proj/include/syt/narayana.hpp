#pragma once

/*
 * Generalized Narayana numbers N(k, n, h): the number of standard Young
 * tableaux of the k x n rectangle with exactly h ascents (equivalently,
 * h + k - 1 descents). Evaluated by the closed alternating sum
 *
 *   N(k, n, h) = sum_{l=0..h} (-1)^(h-l) C(kn+1, h-l)
 *                 prod_{i=0..n-1} prod_{j=0..k-1} (i+j+1+l)/(i+j+1)
 *
 * computed in exact rational arithmetic; each product term counts plane
 * partitions in a box and must be an integer, which is asserted. Terms are
 * accumulated with l ascending.
 *
 * Outside 0 <= h <= (k-1)(n-1) the value is 0 by convention; callers that
 * care can ask narayana_in_range.
 */

#include <algorithm>
#include <vector>

#include "syt/base.hpp"
#include "syt/polynomial.hpp"

namespace syt {

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    Int q, rem;
    boost::multiprecision::divide_qr(r, Int(i), q, rem);
    check_internal(rem == 0, "binomial accumulation not integral");
    r = q;
  }
  return r;
}

inline bool narayana_in_range(int k, int n, int h) {
  return h >= 0 && h <= (k - 1) * (n - 1);
}

inline Int narayana(int k, int n, int h) {
  if (k < 1 || n < 1) fail(errc::bad_argument, "narayana needs k >= 1 and n >= 1");
  if (!narayana_in_range(k, n, h)) return 0;
  Int total = 0;
  for (int l = 0; l <= h; ++l) {
    Rat box = 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j)
        box *= Rat(i + j + 1 + l, i + j + 1);
    check_internal(boost::multiprecision::denominator(box) == 1,
                   "box product term is not an integer");
    Int term = binomial(k * n + 1, h - l) * boost::multiprecision::numerator(box);
    total += ((h - l) % 2 == 0) ? term : -term;
  }
  return total;
}

// sum_h N(k, n, h) q^h.
inline IntPolynomial narayana_polynomial(int k, int n) {
  if (k < 1 || n < 1) fail(errc::bad_argument, "narayana needs k >= 1 and n >= 1");
  std::vector<Int> c;
  for (int h = 0; h <= (k - 1) * (n - 1); ++h) c.push_back(narayana(k, n, h));
  return IntPolynomial(std::move(c));
}

// sum over permutations of 1..k of q^des, by direct enumeration.
inline IntPolynomial eulerian_polynomial(int k) {
  if (k < 1) fail(errc::bad_argument, "eulerian_polynomial needs k >= 1");
  if (k > 8) fail(errc::bad_argument, "eulerian_polynomial supports k <= 8");
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Int> c(static_cast<std::size_t>(k), Int(0));
  do {
    int des = 0;
    for (int i = 0; i + 1 < k; ++i)
      if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(i + 1)]) ++des;
    ++c[static_cast<std::size_t>(des)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return IntPolynomial(std::move(c));
}

}  // namespace syt
