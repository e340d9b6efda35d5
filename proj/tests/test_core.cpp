#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "syt/enumerate.hpp"
#include "syt/partition.hpp"
#include "syt/tableau.hpp"
#include "fixtures.hpp"

using namespace syt;
using namespace syt::fixtures;

namespace {

// Matcher for the library error kind so precondition tests stay readable.
bool throws_kind(errc want, const std::function<void()>& run) {
  try {
    run();
  } catch (const error& e) {
    return e.code() == want;
  }
  return false;
}

}  // namespace

TEST_CASE("shape parsing accepts part lists and rectangle shorthand") {
  CHECK(parse_shape("4,3,2").parts() == std::vector<int>{4, 3, 2});
  CHECK(parse_shape("6x5").parts() == std::vector<int>{6, 6, 6, 6, 6});
  CHECK(parse_shape("7").parts() == std::vector<int>{7});
  CHECK(parse_shape("3,3,1").cells() == 7);

  CHECK(throws_kind(errc::bad_shape, [] { parse_shape("3,4"); }));
  CHECK(throws_kind(errc::bad_shape, [] { parse_shape("0"); }));
  CHECK(throws_kind(errc::bad_shape, [] { parse_shape("4x0"); }));
  CHECK(throws_kind(errc::bad_argument, [] { parse_shape(""); }));
  CHECK(throws_kind(errc::bad_argument, [] { parse_shape("2,x"); }));
}

TEST_CASE("partition accessors") {
  Partition p({4, 3, 2});
  CHECK(p.rows() == 3);
  CHECK(p.cells() == 9);
  CHECK(p.part(1) == 4);
  CHECK(p.part(3) == 2);
  CHECK_FALSE(p.rectangular());
  CHECK(p.distinct());
  CHECK(p.contains_cell(1, 4));
  CHECK_FALSE(p.contains_cell(3, 3));
  CHECK(p.conjugate().parts() == std::vector<int>{3, 3, 2, 1});
  CHECK(p.to_string() == "4,3,2");

  CHECK(Partition::rectangle(6, 5).parts() == std::vector<int>{6, 6, 6, 6, 6});
  CHECK(Partition::rectangle(6, 5).rectangular());
  CHECK(Partition::staircase(5, 5).parts() == std::vector<int>{5, 4, 3, 2, 1});
  CHECK(Partition::staircase(6, 3).parts() == std::vector<int>{6, 5, 4});

  Partition square({2, 2});
  std::vector<int> hooks = square.hooks();
  std::sort(hooks.begin(), hooks.end());
  CHECK(hooks == std::vector<int>{1, 2, 2, 3});
  CHECK(square.hook(1, 1) == 3);
}

TEST_CASE("tableau construction validates each axis separately") {
  CHECK(throws_kind(errc::bad_shape, [] { make_tableau({{1}, {2, 3}}); }));
  CHECK(throws_kind(errc::bad_entries, [] { make_tableau({{1, 2}, {2, 3}}); }));
  CHECK(throws_kind(errc::bad_entries, [] { make_tableau({{1, 2}, {3, 9}}); }));
  CHECK(throws_kind(errc::row_order, [] { make_tableau({{2, 1}, {3, 4}}); }));
  CHECK(throws_kind(errc::column_order, [] { make_tableau({{2, 3}, {1, 4}}); }));

  Tableau t = make_tableau(kFixtureBig);
  CHECK(t.rows() == 5);
  CHECK(t.size() == 30);
  CHECK(t.at(3, 4) == 21);
  CHECK(t.row_of(13) == 5);
  CHECK(t.cell_of(22) == Cell{2, 6});
  CHECK(tableau_from_row_word(t.shape(), t.row_word()) == t);
}

TEST_CASE("statistics on the worked example") {
  Tableau t = make_tableau(kFixtureBig);
  StatRecord s = stats(t);
  CHECK(s.des_set == kFixtureBigDesSet);
  CHECK(s.des() == 13);
  CHECK(s.asc() == kFixtureBigAsc);
  CHECK(s.maj == kFixtureBigMaj);
  CHECK(s.des() + s.asc() <= t.size() - 1);
  CHECK(std::includes(s.des_set.begin(), s.des_set.end(), s.hdes_set.begin(),
                      s.hdes_set.end()));
}

TEST_CASE("high descents need a strict column drop") {
  // 1 and 3 are descents of the column fill but each successor sits directly
  // below in the same column, so they only count as plain descents.
  Tableau t = make_tableau({{1, 3}, {2, 4}});
  CHECK(stats(t).des_set == std::vector<int>{1, 3});
  CHECK(stats(t).hdes_set.empty());
  // Here 2 -> 3 moves down and strictly left.
  Tableau u = make_tableau({{1, 2}, {3}, {4}});
  CHECK(stats(u).hdes_set == std::vector<int>{2});
  CHECK(hdes_cells(u) ==
        std::vector<CellPair>{make_cell_pair(Cell{1, 2}, Cell{2, 1})});
}

TEST_CASE("conjugate and rotate") {
  Tableau t = make_tableau(kFixtureStair);
  CHECK(conjugate(conjugate(t)) == t);
  CHECK(conjugate(t).shape().parts() == std::vector<int>{5, 4, 3, 2, 1});

  // Descents complement under conjugation.
  StatRecord s = stats(t), sc = stats(conjugate(t));
  CHECK(s.des() + sc.des() == t.size() - 1);
  for (int i = 1; i < t.size(); ++i) {
    bool in_t = std::find(s.des_set.begin(), s.des_set.end(), i) != s.des_set.end();
    bool in_c = std::find(sc.des_set.begin(), sc.des_set.end(), i) != sc.des_set.end();
    CHECK(in_t != in_c);
  }

  // Entry i lands where kn+1-i was, after a half turn of the grid.
  Tableau r23 = make_tableau({{1, 3, 4}, {2, 5, 6}});
  CHECK(rotate(r23) == make_tableau({{1, 2, 5}, {3, 4, 6}}));
  CHECK(rotate(rotate(r23)) == r23);
  CHECK(throws_kind(errc::not_rectangular, [] { rotate(make_tableau({{1, 2}, {3}})); }));
}

TEST_CASE("rotation complements descent positions") {
  Tableau t = make_tableau(kFixtureMinRectOther);
  StatRecord s = stats(t), sr = stats(rotate(t));
  int last = t.size() - 1;
  for (int i = 1; i <= last; ++i) {
    bool in_t = std::find(s.des_set.begin(), s.des_set.end(), i) != s.des_set.end();
    bool in_r = std::find(sr.des_set.begin(), sr.des_set.end(), t.size() - i) != sr.des_set.end();
    CHECK(in_t == in_r);
  }
}

TEST_CASE("hook length counting") {
  CHECK(count_syt(Partition({2, 2})) == 2);
  CHECK(count_syt(Partition({3, 3, 3})) == 42);
  CHECK(count_syt(Partition::rectangle(4, 4)) == 24024);
  CHECK(count_syt(Partition({1})) == 1);
  CHECK(count_syt(Partition({5})) == 1);
}

TEST_CASE("counts across all shapes satisfy the classical checksums") {
  // sum over shapes of count is the involution number, and of count^2 is n!.
  // Involution numbers come from the independent recurrence
  // I(n) = I(n-1) + (n-1) I(n-2).
  std::vector<Int> inv = {1, 1};
  for (int n = 2; n <= 8; ++n)
    inv.push_back(inv[static_cast<std::size_t>(n - 1)] +
                  (n - 1) * inv[static_cast<std::size_t>(n - 2)]);
  for (int n = 1; n <= 8; ++n) {
    Int total = 0, squares = 0, factorial = 1;
    for (int j = 2; j <= n; ++j) factorial *= j;
    for (const Partition& shape : shapes_with_cells(n)) {
      Int c = count_syt(shape);
      total += c;
      squares += c * c;
    }
    CHECK(total == inv[static_cast<std::size_t>(n)]);
    CHECK(squares == factorial);
  }
}

TEST_CASE("enumeration order and exhaustiveness") {
  std::vector<Tableau> all = enumerate_syt(Partition({2, 1}));
  REQUIRE(all.size() == 2);
  CHECK(all[0] == make_tableau({{1, 2}, {3}}));
  CHECK(all[1] == make_tableau({{1, 3}, {2}}));

  for (const Partition& shape :
       {Partition({3, 2}), Partition({2, 2, 2}), Partition({4, 1})}) {
    long long seen = 0;
    std::set<RowWord> words;
    for_each_tableau(shape, [&](const Tableau& t) {
      ++seen;
      CHECK(words.insert(t.row_word()).second);
      return true;
    });
    CHECK(Int(seen) == count_syt(shape));
  }

  // Row words arrive in lexicographic order.
  RowWord prev;
  for_each_row_word(Partition({3, 2, 1}), [&](const RowWord& w) {
    CHECK(prev < w);
    prev = w;
    return true;
  });
}

TEST_CASE("enumeration stops when the visitor declines") {
  int seen = 0;
  for_each_tableau(Partition({3, 3}), [&](const Tableau&) { return ++seen < 2; });
  CHECK(seen == 2);
}

TEST_CASE("enumeration budget and limit") {
  CHECK(throws_kind(errc::budget_exceeded, [] {
    enumerate_syt(Partition::rectangle(4, 4), std::nullopt, 10);
  }));
  // A limit sidesteps the budget and truncates the stream.
  CHECK(enumerate_syt(Partition::rectangle(4, 4), 10).size() == 10);
  CHECK(enumerate_syt(Partition({2, 2}), 2).size() == 2);
}

TEST_CASE("shapes_with_cells lists partitions of n") {
  std::vector<std::vector<int>> got;
  for (const Partition& p : shapes_with_cells(4)) got.push_back(p.parts());
  std::sort(got.begin(), got.end());
  std::vector<std::vector<int>> want = {
      {1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
  CHECK(got == want);
}

TEST_CASE("tableau text round-trips") {
  Tableau t = make_tableau(kFixtureStair);
  CHECK(to_text(t) == "1 3 4 11 13\n2 6 8 12\n5 9 10\n7 15\n14\n");
  CHECK(parse_tableau(to_text(t)) == t);
  Tableau b = make_tableau(kFixtureBig);
  CHECK(parse_tableau(to_text(b)) == b);

  CHECK(throws_kind(errc::bad_entries, [] { parse_tableau("1 2\n2 3\n"); }));
  CHECK(throws_kind(errc::bad_argument, [] { parse_tableau(""); }));
  CHECK(throws_kind(errc::bad_argument, [] { parse_tableau("1 two\n"); }));
}
