#pragma once

/*
 * Exhaustive statistic distributions over SYT of a shape, with an explicit
 * tableau budget so a typo in a shape cannot start an astronomically long
 * sweep. The default budget is 5e6 tableaux and can be overridden per call
 * (the CLI also honors the SYT_BUDGET environment variable).
 *
 * Also provides the major-index generating function both ways: by direct
 * enumeration and by the closed product formula
 *   q^(b(lambda)) [N]_q! / prod_cells [hook]_q!
 * with b(lambda) = sum (j-1) lambda_j, so the two can be compared as a
 * whole-polynomial identity.
 */

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "syt/base.hpp"
#include "syt/bounce.hpp"
#include "syt/enumerate.hpp"
#include "syt/partition.hpp"
#include "syt/polynomial.hpp"
#include "syt/tableau.hpp"

namespace syt {

constexpr std::uint64_t kDefaultBudget = 5'000'000;

enum class Statistic { des, asc, hdes, maj, des_sigma, bounce_entry, st1, st2 };

inline Statistic parse_statistic(const std::string& name) {
  if (name == "des") return Statistic::des;
  if (name == "asc") return Statistic::asc;
  if (name == "hdes") return Statistic::hdes;
  if (name == "maj") return Statistic::maj;
  if (name == "des-sigma") return Statistic::des_sigma;
  if (name == "bounce") return Statistic::bounce_entry;
  if (name == "st1") return Statistic::st1;
  if (name == "st2") return Statistic::st2;
  fail(errc::bad_argument, "unknown statistic: " + name);
}

struct StatisticSpec {
  Statistic which = Statistic::des;
  std::vector<int> sigma;  // for des_sigma
  int r = 0, s = 0;        // for bounce_entry
};

inline void require_budget(const Partition& shape, std::uint64_t budget) {
  Int total = count_syt(shape);
  if (total > budget)
    fail(errc::budget_exceeded, "shape " + shape.to_string() + " has " + total.str() +
                                    " tableaux, budget is " + std::to_string(budget));
}

// Evaluates one statistic on one tableau. st1 = b12 + b22 + b23 - 2 and
// st2 = b11 + b13 + b23 - 1 are only defined on 3-row rectangles.
inline long long evaluate_statistic(const Tableau& t, const StatisticSpec& spec) {
  switch (spec.which) {
    case Statistic::des: return stats(t).des();
    case Statistic::asc: return stats(t).asc();
    case Statistic::hdes: return stats(t).hdes();
    case Statistic::maj: return stats(t).maj;
    case Statistic::des_sigma: return sigma_descents(t, spec.sigma);
    case Statistic::bounce_entry: {
      if (spec.r < 1 || spec.r > t.rows() || spec.s < 1 || spec.s > t.rows())
        fail(errc::bad_argument, "bounce entry indices out of range");
      return bounce_matrix(t).at(spec.r, spec.s);
    }
    case Statistic::st1:
    case Statistic::st2: {
      if (t.rows() != 3 || !t.shape().rectangular())
        fail(errc::bad_shape, "st1/st2 are defined on 3-row rectangles");
      BounceMatrix b = bounce_matrix(t);
      return spec.which == Statistic::st1 ? b.at(1, 2) + b.at(2, 2) + b.at(2, 3) - 2
                                          : b.at(1, 1) + b.at(1, 3) + b.at(2, 3) - 1;
    }
  }
  fail(errc::internal, "unhandled statistic");
}

// Histogram of the statistic as a polynomial in q. Negative statistic values
// cannot be represented and are reported as errors (they would themselves be
// findings for the conjectural statistics).
inline IntPolynomial distribution(const Partition& shape, const StatisticSpec& spec,
                                  std::uint64_t budget = kDefaultBudget) {
  require_budget(shape, budget);
  IntPolynomial hist;
  for_each_tableau(shape, [&](const Tableau& t) {
    long long v = evaluate_statistic(t, spec);
    if (v < 0)
      fail(errc::bad_argument, "statistic took the negative value " + std::to_string(v));
    hist.add_to_coeff(static_cast<int>(v), 1);
    return true;
  });
  return hist;
}

inline IntPolynomial distribution(const Partition& shape, Statistic which,
                                  std::uint64_t budget = kDefaultBudget) {
  StatisticSpec spec;
  spec.which = which;
  return distribution(shape, spec, budget);
}

// ---- major index -----------------------------------------------------------

inline IntPolynomial maj_polynomial(const Partition& shape,
                                    std::uint64_t budget = kDefaultBudget) {
  return distribution(shape, Statistic::maj, budget);
}

// Closed product form of the same generating function.
inline IntPolynomial maj_product_formula(const Partition& shape) {
  int n_cells = shape.cells();
  int shift = 0;
  for (int r = 1; r <= shape.rows(); ++r) shift += (r - 1) * shape.part(r);
  IntPolynomial p = IntPolynomial::monomial(shift);
  for (int j = 1; j <= n_cells; ++j) p = p * IntPolynomial::q_int(j);
  for (int h : shape.hooks())
    p = p / IntPolynomial::q_int(h);
  return p;
}

// ---- joint distributions ----------------------------------------------------

// (des, maj) joint histogram; keys are pairs, values are counts.
inline std::map<std::pair<int, int>, long long> joint_des_maj(
    const Partition& shape, std::uint64_t budget = kDefaultBudget) {
  require_budget(shape, budget);
  std::map<std::pair<int, int>, long long> hist;
  for_each_tableau(shape, [&](const Tableau& t) {
    StatRecord s = stats(t);
    ++hist[{s.des(), static_cast<int>(s.maj)}];
    return true;
  });
  return hist;
}

// Full bounce-matrix histogram, flattened row-major.
inline std::map<std::vector<int>, long long> joint_bounce_distribution(
    const Partition& shape, std::uint64_t budget = kDefaultBudget) {
  require_budget(shape, budget);
  std::map<std::vector<int>, long long> hist;
  int k = shape.rows();
  for_each_tableau(shape, [&](const Tableau& t) {
    BounceMatrix b = bounce_matrix(t);
    std::vector<int> key;
    key.reserve(static_cast<std::size_t>(k * k));
    for (int r = 1; r <= k; ++r)
      for (int s = 1; s <= k; ++s) key.push_back(b.at(r, s));
    ++hist[key];
    return true;
  });
  return hist;
}

}  // namespace syt
