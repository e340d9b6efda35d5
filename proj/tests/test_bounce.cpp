#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <numeric>
#include <vector>

#include "syt/bounce.hpp"
#include "syt/distribution.hpp"
#include "syt/enumerate.hpp"
#include "fixtures.hpp"

using namespace syt;
using namespace syt::fixtures;

namespace {

bool throws_kind(errc want, const std::function<void()>& run) {
  try {
    run();
  } catch (const error& e) {
    return e.code() == want;
  }
  return false;
}

void check_grid(const BounceMatrix& b, const std::vector<std::vector<int>>& want) {
  int k = static_cast<int>(want.size());
  for (int r = 1; r <= k; ++r)
    for (int s = 1; s <= k; ++s)
      CHECK(b.at(r, s) ==
            want[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(s - 1)]);
}

}  // namespace

TEST_CASE("bounce matrices of the worked examples") {
  check_grid(bounce_matrix(make_tableau(kFixtureBig)), kFixtureBigBounce);
  check_grid(bounce_matrix(make_tableau(kFixtureBigPhiD3)), kFixtureBigPhiD3Bounce);
  check_grid(bounce_matrix(make_tableau(kFixtureMinRect)), {{1, 1}, {0, 1}});
  check_grid(bounce_matrix(make_tableau({{1}, {2}, {3}})),
             {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
}

TEST_CASE("bounce marginals on rectangles") {
  // Row sums are n except the last row (n-1); column sums are n except the
  // first column (n-1).
  BounceMatrix b = bounce_matrix(make_tableau(kFixtureBig));
  int k = 5, n = 6;
  for (int r = 1; r <= k; ++r) CHECK(b.row_sum(r) == (r < k ? n : n - 1));
  for (int s = 1; s <= k; ++s) CHECK(b.col_sum(s) == (s > 1 ? n : n - 1));
  CHECK(b.total() == 29);
}

TEST_CASE("bounce totals and statistic split on any shape") {
  for (const Partition& shape :
       {Partition({5, 4, 3, 2, 1}), Partition({4, 2, 1}), Partition({3, 3, 1})}) {
    for_each_tableau(shape, [&](const Tableau& t) {
      BounceMatrix b = bounce_matrix(t);
      CHECK(b.total() == t.size() - 1);
      StatRecord s = stats(t);
      int above = 0, below = 0;
      for (int r = 1; r <= t.rows(); ++r)
        for (int c = 1; c <= t.rows(); ++c) {
          if (r < c) above += b.at(r, c);
          if (r > c) below += b.at(r, c);
        }
      CHECK(above == s.des());
      CHECK(below == s.asc());
      return true;
    });
  }
}

TEST_CASE("sigma-weighted descents") {
  Tableau big = make_tableau(kFixtureBig);
  std::vector<int> identity = {1, 2, 3, 4, 5};
  std::vector<int> reversed = {5, 4, 3, 2, 1};
  // Identity sums the strictly-lower entries (asc), the reversal the
  // strictly-upper ones (des).
  CHECK(sigma_descents(big, identity) == stats(big).asc());
  CHECK(sigma_descents(big, reversed) == stats(big).des());

  // Any sigma counts exactly the bounce entries it inverts.
  std::vector<int> sigma = {2, 5, 1, 4, 3};
  BounceMatrix b = bounce_matrix(big);
  int expect = 0;
  for (int r = 1; r <= 5; ++r)
    for (int s = 1; s <= 5; ++s)
      if (sigma[static_cast<std::size_t>(r - 1)] > sigma[static_cast<std::size_t>(s - 1)])
        expect += b.at(r, s);
  CHECK(sigma_descents(big, sigma) == expect);

  CHECK(throws_kind(errc::bad_sigma, [&] { sigma_descents(big, {1, 2, 3}); }));
  CHECK(throws_kind(errc::bad_sigma, [&] { sigma_descents(big, {1, 1, 2, 3, 4}); }));
  CHECK(throws_kind(errc::bad_sigma, [&] { sigma_descents(big, {0, 1, 2, 3, 4}); }));
}

TEST_CASE("three-row statistics") {
  StatisticSpec st1{Statistic::st1, {}, 0, 0};
  StatisticSpec st2{Statistic::st2, {}, 0, 0};
  Tableau column = make_tableau({{1}, {2}, {3}});
  CHECK(evaluate_statistic(column, st1) == 0);
  CHECK(evaluate_statistic(column, st2) == 0);

  // Values stay in 0..2(n-1); spot the full n=2 distribution.
  IntPolynomial d1 = distribution(Partition({2, 2, 2}), st1);
  IntPolynomial d2 = distribution(Partition({2, 2, 2}), st2);
  CHECK(d1 == d2);
  CHECK(d2.coeff(0) == 1);
  CHECK(d2.coeff(1) == 3);
  CHECK(d2.coeff(2) == 1);

  CHECK(throws_kind(errc::bad_shape, [&] {
    evaluate_statistic(make_tableau({{1, 2}, {3, 4}}), st1);
  }));
  CHECK(throws_kind(errc::bad_shape, [&] {
    evaluate_statistic(make_tableau({{1, 4}, {2, 5}, {3, 6}, {7, 8}}), st2);
  }));
}

TEST_CASE("bounce entry statistic") {
  StatisticSpec spec{Statistic::bounce_entry, {}, 1, 2};
  Tableau min = make_tableau(kFixtureMinRect);
  CHECK(evaluate_statistic(min, spec) == 1);
  StatisticSpec bad{Statistic::bounce_entry, {}, 0, 7};
  CHECK(throws_kind(errc::bad_argument, [&] { evaluate_statistic(min, bad); }));
}
