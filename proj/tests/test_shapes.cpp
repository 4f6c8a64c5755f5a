#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "wreath/colored_perm.hpp"
#include "wreath/shapes.hpp"

using wreath::MultiPartition;
using wreath::Partition;

namespace {

// Independent count of partitions via the pentagonal-number recurrence.
std::vector<long long> partition_numbers(int up_to) {
  std::vector<long long> p(up_to + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= up_to; ++n)
    for (int k = 1; ; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      const long long sign = (k % 2 == 1) ? 1 : -1;
      if (g1 <= n) p[n] += sign * p[n - g1];
      if (g2 <= n) p[n] += sign * p[n - g2];
    }
  return p;
}

}  // namespace

TEST_CASE("partition listing is complete, valid, and ordered", "[shapes]") {
  const auto parts6 = wreath::partitions(6);
  REQUIRE(parts6.size() == 11);
  CHECK(parts6.front() == Partition{6});
  CHECK(parts6.back() == Partition{1, 1, 1, 1, 1, 1});
  for (const auto& p : parts6) {
    CHECK(wreath::is_valid_partition(p));
    CHECK(wreath::partition_size(p) == 6);
  }
  CHECK(std::set<Partition>(parts6.begin(), parts6.end()).size() == 11);
  CHECK(wreath::partitions(0) == std::vector<Partition>{{}});

  const auto p = partition_numbers(10);
  for (int n = 0; n <= 10; ++n)
    CHECK(static_cast<long long>(wreath::partitions(n).size()) == p[n]);
}

TEST_CASE("tuple-of-partition listing matches the convolved counts",
          "[shapes]") {
  const auto p = partition_numbers(6);
  for (int r = 1; r <= 4; ++r)
    for (int n = 0; n <= 5; ++n) {
      // Convolve r copies of the partition-count sequence.
      std::vector<long long> conv{1};
      for (int copy = 0; copy < r; ++copy) {
        std::vector<long long> next(n + 1, 0);
        for (int a = 0; a <= n && a < static_cast<int>(conv.size()); ++a)
          for (int b = 0; a + b <= n; ++b) next[a + b] += conv[a] * p[b];
        conv = next;
      }
      const auto all = wreath::multipartitions(r, n);
      CHECK(static_cast<long long>(all.size()) == conv[n]);
      for (const auto& mp : all) {
        REQUIRE(static_cast<int>(mp.size()) == r);
        CHECK(wreath::multipartition_size(mp) == n);
      }
      CHECK(std::set<MultiPartition>(all.begin(), all.end()).size() ==
            all.size());
    }
  CHECK(wreath::multipartitions(2, 3).size() == 10);
  CHECK(wreath::multipartitions(3, 3).size() == 22);
  CHECK(wreath::multipartitions(2, 3).front() == MultiPartition{{3}, {}});
  CHECK(wreath::multipartitions(2, 3).back() == MultiPartition{{}, {1, 1, 1}});
}

TEST_CASE("hook length counts agree with explicit tableau listing",
          "[shapes]") {
  CHECK(wreath::syt_count({2, 1}) == 2);
  CHECK(wreath::syt_count({2, 2}) == 2);
  CHECK(wreath::syt_count({3, 2}) == 5);
  CHECK(wreath::syt_count({4}) == 1);
  CHECK(wreath::syt_count({1, 1, 1, 1}) == 1);
  for (int n = 0; n <= 7; ++n) {
    long long sq_sum = 0;
    for (const auto& shape : wreath::partitions(n)) {
      const auto listed = wreath::enumerate_syt(shape);
      CHECK(static_cast<long long>(listed.size()) == wreath::syt_count(shape));
      sq_sum += wreath::syt_count(shape) * wreath::syt_count(shape);
    }
    CHECK(sq_sum == wreath::checked::factorial(n));
  }
}

TEST_CASE("component tableau counts multiply with a multinomial", "[shapes]") {
  CHECK(wreath::multi_syt_count({{1}, {1}}) == 2);
  CHECK(wreath::multi_syt_count({{2}, {1}}) == 3);
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 4; ++n) {
      long long total = 0, sq_total = 0;
      for (const auto& mp : wreath::multipartitions(r, n)) {
        const long long c = wreath::multi_syt_count(mp);
        CHECK(static_cast<long long>(wreath::enumerate_multi_syt(mp).size()) ==
              c);
        total += c;
        sq_total += c * c;
      }
      CHECK(total == wreath::count_absolute_involutions(r, n));
      CHECK(sq_total == wreath::group_order(r, n));
    }
}

TEST_CASE("strip removal finds connected strips with no full square",
          "[shapes]") {
  // A length-3 strip comes off the 2x2 square one way, leaving a single cell.
  const auto r22 = wreath::rim_hook_removals({2, 2}, 3);
  REQUIRE(r22.size() == 1);
  CHECK(r22[0].rest == Partition{1});
  CHECK(r22[0].height == 1);
  CHECK(r22[0].cells ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {1, 1}});

  const auto r21 = wreath::rim_hook_removals({2, 1}, 3);
  REQUIRE(r21.size() == 1);
  CHECK(r21[0].rest.empty());
  CHECK(r21[0].height == 1);

  CHECK(wreath::rim_hook_removals({3, 3}, 2).size() == 2);
  CHECK(wreath::rim_hook_removals({1, 1, 1}, 2).size() == 1);
  // The staircase has no strip of even length 2.
  CHECK(wreath::rim_hook_removals({3, 2, 1}, 2).empty());
  const auto row = wreath::rim_hook_removals({5}, 5);
  REQUIRE(row.size() == 1);
  CHECK(row[0].height == 0);

  for (int n = 1; n <= 6; ++n)
    for (const auto& shape : wreath::partitions(n))
      for (int d = 1; d <= n; ++d)
        for (const auto& rem : wreath::rim_hook_removals(shape, d)) {
          CHECK(wreath::is_valid_partition(rem.rest));
          CHECK(wreath::partition_size(rem.rest) == n - d);
          CHECK(static_cast<int>(rem.cells.size()) == d);
          CHECK(wreath::cells_connected(rem.cells));
          CHECK_FALSE(wreath::cells_contain_square(rem.cells));
          std::set<int> rows;
          for (const auto& [i, j] : rem.cells) rows.insert(i);
          CHECK(static_cast<int>(rows.size()) - 1 == rem.height);
        }
}

TEST_CASE("strip tableau listing respects sizes and orders", "[shapes]") {
  // One component, one strip covering the whole shape.
  CHECK(wreath::enumerate_multi_rht({{2, 1}}, {3}).size() == 1);
  // All strips of length 1: same count as standard tableaux.
  CHECK(wreath::enumerate_multi_rht({{2, 1}}, {1, 1, 1}).size() == 2);
  // Size mismatch yields nothing.
  CHECK(wreath::enumerate_multi_rht({{2, 1}}, {2}).empty());
  CHECK_THROWS_AS(wreath::enumerate_multi_rht({{1}}, {0}),
                  std::invalid_argument);

  for (const auto& rht : wreath::enumerate_multi_rht({{2, 2}, {1}}, {2, 2, 1})) {
    REQUIRE(rht.steps.size() == 3);
    int placed = 0;
    for (const auto& step : rht.steps) placed += static_cast<int>(step.cells.size());
    CHECK(placed == 5);
  }
}

TEST_CASE("containment and indexing helpers handle edges", "[shapes]") {
  CHECK(wreath::fits_inside({2, 1}, {3, 2}));
  CHECK_FALSE(wreath::fits_inside({2, 2}, {3, 1}));
  CHECK(wreath::part_at({3, 1}, 0) == 3);
  CHECK(wreath::part_at({3, 1}, 5) == 0);
}
