#pragma once

/*
 * Canon words: shuffles of k voices that all sing the same line. A pair
 * (sigma, T) with sigma a permutation of 1..k and T a k x n rectangular
 * tableau composes to the word whose i-th letter is sigma(row of i in T);
 * each letter then appears exactly n times and the subsequence of j-th
 * copies is the same for every j (it is sigma read once). Decomposition
 * validates exactly that and inverts the construction.
 *
 * The descent count of the word equals sigma_descents(T, sigma), so the
 * descent histogram over all canon words factors as the Eulerian polynomial
 * of k times the Narayana polynomial of the k x n rectangle; enumeration
 * always goes through compose over the product space, never by filtering
 * arbitrary words.
 */

#include <algorithm>
#include <string>
#include <vector>

#include "syt/base.hpp"
#include "syt/bounce.hpp"
#include "syt/distribution.hpp"
#include "syt/enumerate.hpp"
#include "syt/narayana.hpp"
#include "syt/partition.hpp"
#include "syt/polynomial.hpp"
#include "syt/tableau.hpp"

namespace syt {

struct CanonWord {
  std::vector<int> letters;  // values in 1..k

  int descents() const {
    int d = 0;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
      if (letters[i] > letters[i + 1]) ++d;
    return d;
  }

  // Digits for k <= 9, comma-separated otherwise.
  std::string to_string() const {
    int k = letters.empty() ? 0 : *std::max_element(letters.begin(), letters.end());
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (k > 9 && i) out += ',';
      out += std::to_string(letters[i]);
    }
    return out;
  }

  static CanonWord parse(const std::string& text) {
    CanonWord w;
    if (text.find(',') != std::string::npos) {
      std::size_t pos = 0;
      while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        try {
          w.letters.push_back(std::stoi(text.substr(pos, comma - pos)));
        } catch (const std::exception&) {
          fail(errc::bad_argument, "bad canon word: " + text);
        }
        pos = comma + 1;
      }
    } else {
      for (char ch : text) {
        if (ch < '1' || ch > '9') fail(errc::bad_argument, "bad canon word digit");
        w.letters.push_back(ch - '0');
      }
    }
    if (w.letters.empty()) fail(errc::bad_argument, "empty canon word");
    return w;
  }

  friend bool operator==(const CanonWord& a, const CanonWord& b) {
    return a.letters == b.letters;
  }
};

inline CanonWord canon_compose(const std::vector<int>& sigma, const Tableau& t) {
  if (!t.shape().rectangular()) fail(errc::not_rectangular, "canon words need rectangular tableaux");
  require_sigma(sigma, t.rows());
  CanonWord w;
  w.letters.reserve(static_cast<std::size_t>(t.size()));
  for (int i = 1; i <= t.size(); ++i)
    w.letters.push_back(sigma[static_cast<std::size_t>(t.row_of(i) - 1)]);
  return w;
}

struct CanonDecomposition {
  std::vector<int> sigma;
  Tableau tableau;
};

// Validates that the word is a canon (every letter 1..k appears exactly n
// times and every copy-layer spells the same permutation) and returns the
// unique preimage. Errors name the first offending copy index.
inline CanonDecomposition canon_decompose(const CanonWord& w) {
  int k = *std::max_element(w.letters.begin(), w.letters.end());
  int total = static_cast<int>(w.letters.size());
  if (total % k != 0)
    fail(errc::bad_canon_word, "length " + std::to_string(total) + " is not a multiple of " + std::to_string(k));
  int n = total / k;

  std::vector<int> seen(static_cast<std::size_t>(k + 1), 0);
  std::vector<std::vector<int>> copy_layer(static_cast<std::size_t>(n + 1));
  for (int i = 0; i < total; ++i) {
    int letter = w.letters[static_cast<std::size_t>(i)];
    if (letter < 1 || letter > k) fail(errc::bad_canon_word, "letter outside 1..k");
    int copy = ++seen[static_cast<std::size_t>(letter)];
    if (copy > n)
      fail(errc::bad_canon_word, "letter " + std::to_string(letter) + " appears more than " + std::to_string(n) + " times");
    copy_layer[static_cast<std::size_t>(copy)].push_back(letter);
  }
  for (int j = 1; j <= k; ++j)
    if (seen[static_cast<std::size_t>(j)] != n)
      fail(errc::bad_canon_word, "letter " + std::to_string(j) + " appears " +
                                     std::to_string(seen[static_cast<std::size_t>(j)]) + " times, expected " + std::to_string(n));
  for (int j = 2; j <= n; ++j)
    if (copy_layer[static_cast<std::size_t>(j)] != copy_layer[1])
      fail(errc::bad_canon_word, "copy " + std::to_string(j) + " spells a different permutation than copy 1");

  const std::vector<int>& sigma = copy_layer[1];
  std::vector<int> inverse(static_cast<std::size_t>(k + 1), 0);
  for (int r = 1; r <= k; ++r) inverse[static_cast<std::size_t>(sigma[static_cast<std::size_t>(r - 1)])] = r;

  std::vector<std::vector<int>> grid(static_cast<std::size_t>(k));
  for (int i = 1; i <= total; ++i) {
    int r = inverse[static_cast<std::size_t>(w.letters[static_cast<std::size_t>(i - 1)])];
    grid[static_cast<std::size_t>(r - 1)].push_back(i);
  }
  // Equal copy layers force the column condition, so this cannot throw.
  return CanonDecomposition{sigma, make_tableau(grid)};
}

// Descent histogram over all canon words with k voices of length n,
// enumerated as S_k x SYT(rectangle).
inline IntPolynomial canon_descent_distribution(int k, int n,
                                                std::uint64_t budget = kDefaultBudget) {
  if (k < 1 || n < 1) fail(errc::bad_argument, "canon distribution needs k >= 1, n >= 1");
  Partition rect = Partition::rectangle(n, k);
  Int perms = 1;
  for (int i = 2; i <= k; ++i) perms *= i;
  if (perms * count_syt(rect) > budget)
    fail(errc::budget_exceeded, "canon space exceeds the tableau budget");

  std::vector<int> sigma(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) sigma[static_cast<std::size_t>(i)] = i + 1;
  IntPolynomial hist;
  do {
    for_each_tableau(rect, [&](const Tableau& t) {
      hist.add_to_coeff(sigma_descents(t, sigma), 1);
      return true;
    });
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return hist;
}

}  // namespace syt
