#include <catch_amalgamated.hpp>

#include <map>
#include <numeric>

#include "wreath/characters.hpp"
#include "wreath/roots.hpp"

using wreath::ColoredPermutation;

TEST_CASE("conjugate-square examples", "[roots]") {
  // A color-1 fixed point squares to the identity under v * bar(v).
  const ColoredPermutation v(2, 1, {1}, {1});
  CHECK(wreath::absolute_square(v).is_identity());
  CHECK(wreath::is_absolute_involution(v));

  // With two colors bar is a no-op, so the conjugate square is the square.
  for (const auto& g : wreath::enumerate_group(2, 3))
    CHECK(wreath::absolute_square(g) == compose(g, g));

  // With three colors it is not: a color-1 fixed point cubes around.
  const ColoredPermutation w(3, 1, {1}, {1});
  CHECK(wreath::absolute_square(w).is_identity());
  CHECK_FALSE(compose(w, w).is_identity());
}

TEST_CASE("single-cycle targets have all-or-nothing counts", "[roots]") {
  // Odd-length cycle: r solutions when the color is zero, none otherwise.
  for (int r = 2; r <= 3; ++r) {
    const ColoredPermutation odd0(r, 3, {2, 3, 1}, {0, 0, 0});
    CHECK(wreath::count_bruteforce(odd0) == r);
    CHECK(wreath::count_formula(odd0) == r);
    const ColoredPermutation odd1(r, 3, {2, 3, 1}, {1, 0, 0});
    CHECK(wreath::count_bruteforce(odd1) == 0);
    CHECK(wreath::count_formula(odd1) == 0);
  }
  // A single even-length cycle is never a conjugate square.
  for (int r = 2; r <= 3; ++r)
    for (int c = 0; c < r; ++c) {
      const ColoredPermutation even(r, 2, {2, 1}, {c, 0});
      CHECK(wreath::count_bruteforce(even) == 0);
      CHECK(wreath::count_formula(even) == 0);
    }
}

TEST_CASE("closed-form count equals brute force on every element", "[roots]") {
  for (const auto& [r, n] :
       {std::pair{1, 4}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}}) {
    for (const auto& g : wreath::enumerate_group(r, n))
      REQUIRE(wreath::count_formula(g) == wreath::count_bruteforce(g));
  }
}

TEST_CASE("per-class counts tally to the group order", "[roots]") {
  for (const auto& [r, n] : {std::pair{2, 3}, {3, 2}, {3, 3}}) {
    const auto counts = wreath::count_bruteforce_by_class(r, n);
    long long total = 0;
    for (const auto& [ct, per_element] : counts)
      total += per_element * wreath::class_size(ct);
    CHECK(total == wreath::group_order(r, n));
    for (const auto& [ct, per_element] : counts)
      CHECK(per_element ==
            wreath::count_formula(wreath::class_representative(ct)));
  }
}

TEST_CASE("plain permutation square roots", "[roots]") {
  // Brute force over the symmetric group.
  auto brute_sn = [](const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    long long count = 0;
    do {
      bool is_root = true;
      for (int i = 0; i < n; ++i)
        if (p[p[i] - 1] != sigma[i]) is_root = false;
      if (is_root) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
  };

  CHECK(wreath::count_sqroots_sn({1, 2, 3}) == 4);
  CHECK(wreath::count_sqroots_sn({2, 3, 1}) == 1);
  CHECK(wreath::count_sqroots_sn({2, 1}) == 0);
  CHECK(wreath::count_sqroots_sn({2, 3, 4, 1}) == 0);
  CHECK(wreath::count_sqroots_sn({2, 1, 4, 3}) == 2);

  for (int n = 1; n <= 6; ++n) {
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    // Walk a few representative cycle types via the class machinery.
    for (const auto& ct : wreath::all_class_types(1, n)) {
      const auto rep = wreath::class_representative(ct);
      CHECK(wreath::count_sqroots_sn(rep.perm) == brute_sn(rep.perm));
    }
  }
}

TEST_CASE("pair-singleton groupings obey the color constraints", "[roots]") {
  // Four cycles of color zero, singletons allowed: involution count.
  const auto with_fixed =
      wreath::enumerate_pair_singleton_partitions(2, {0, 0, 0, 0}, true);
  CHECK(with_fixed.size() == 10);
  // Pairs only: perfect matchings.
  const auto matchings =
      wreath::enumerate_pair_singleton_partitions(2, {0, 0, 0, 0}, false);
  CHECK(matchings.size() == 3);
  // Two cycles of color one: they can pair (1+1=2=0 mod 2) but not stand alone.
  const auto colored =
      wreath::enumerate_pair_singleton_partitions(2, {1, 1}, true);
  REQUIRE(colored.size() == 1);
  CHECK(colored[0].n2() == 1);
  CHECK(colored[0].n1() == 0);
  // Color sums that do not cancel forbid the pair.
  CHECK(wreath::enumerate_pair_singleton_partitions(3, {1, 1}, true).empty());
  CHECK(wreath::enumerate_pair_singleton_partitions(3, {1, 2}, true).size() ==
        1);

  for (const auto& part : with_fixed) {
    std::vector<int> seen;
    for (const auto& [i, j] : part.pairs) {
      CHECK(i < j);
      seen.push_back(i);
      seen.push_back(j);
    }
    for (int s : part.singletons) seen.push_back(s);
    std::sort(seen.begin(), seen.end());
    CHECK(seen == std::vector<int>{0, 1, 2, 3});
  }
}
