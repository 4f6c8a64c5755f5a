#include <catch_amalgamated.hpp>

#include <set>
#include <stdexcept>

#include "wreath/rsk.hpp"

using wreath::ColoredPermutation;
using wreath::Tableau;
using wreath::TableauPair;

TEST_CASE("row insertion bumps the smallest larger entry", "[rsk]") {
  Tableau t;
  CHECK(wreath::rs_insert(t, 2) == std::pair{0, 0});
  CHECK(wreath::rs_insert(t, 1) == std::pair{1, 0});  // bumps 2 down
  CHECK(t == Tableau{{1}, {2}});
  CHECK(wreath::rs_insert(t, 3) == std::pair{0, 1});
  CHECK(t == Tableau{{1, 3}, {2}});
  CHECK_THROWS_AS(wreath::rs_insert(t, 3), std::invalid_argument);
}

TEST_CASE("single-color insertion reproduces the classical pair", "[rsk]") {
  const ColoredPermutation g(1, 3, {3, 1, 2}, {0, 0, 0});
  const TableauPair pair = wreath::colored_rsk(g);
  CHECK(pair.P[0] == Tableau{{1, 2}, {3}});
  CHECK(pair.Q[0] == Tableau{{1, 3}, {2}});
}

TEST_CASE("letters land in the component named by their source color",
          "[rsk]") {
  const ColoredPermutation g(2, 3, {2, 1, 3}, {1, 1, 0});
  const TableauPair pair = wreath::colored_rsk(g);
  CHECK(pair.P[0] == Tableau{{3}});
  CHECK(pair.Q[0] == Tableau{{3}});
  CHECK(pair.P[1] == Tableau{{1}, {2}});
  CHECK(pair.Q[1] == Tableau{{1}, {2}});
  CHECK(wreath::shape_of(pair.P) == wreath::MultiPartition{{1}, {1, 1}});
}

TEST_CASE("transposing the element swaps the tableau pair", "[rsk]") {
  for (const auto& [r, n] : {std::pair{1, 4}, {2, 3}, {3, 2}, {3, 3}}) {
    for (const auto& g : wreath::enumerate_group(r, n)) {
      const TableauPair p = wreath::colored_rsk(g);
      const TableauPair pt = wreath::colored_rsk(transpose(g));
      REQUIRE(pt.P == p.Q);
      REQUIRE(pt.Q == p.P);
    }
  }
}

TEST_CASE("attaching colors to values instead of sources breaks the swap",
          "[rsk]") {
  const ColoredPermutation g(2, 3, {2, 3, 1}, {0, 0, 1});
  // The source-color convention commutes with transposition...
  const TableauPair p = wreath::colored_rsk(g);
  const TableauPair pt = wreath::colored_rsk(transpose(g));
  CHECK(pt.P == p.Q);
  CHECK(pt.Q == p.P);
  // ...the value-color convention does not, on this same element.
  const TableauPair vp =
      wreath::colored_rsk(g, wreath::ColorAttachment::kValueColor);
  const TableauPair vpt = wreath::colored_rsk(
      transpose(g), wreath::ColorAttachment::kValueColor);
  CHECK_FALSE((vpt.P == vp.Q && vpt.Q == vp.P));
}

TEST_CASE("insertion is a bijection onto same-shape tableau pairs", "[rsk]") {
  for (const auto& [r, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    std::set<std::string> seen;
    for (const auto& g : wreath::enumerate_group(r, n)) {
      const TableauPair pair = wreath::colored_rsk(g);
      CHECK(wreath::shape_of(pair.P) == wreath::shape_of(pair.Q));
      REQUIRE(wreath::inverse_colored_rsk(pair, r, n) == g);
      std::string key;
      auto append = [&key](const std::vector<wreath::Tableau>& side) {
        for (const auto& t : side) {
          for (const auto& row : t) {
            for (int v : row) key += std::to_string(v) + ",";
            key += ";";
          }
          key += "/";
        }
      };
      append(pair.P);
      key += "|";
      append(pair.Q);
      seen.insert(key);
    }
    CHECK(static_cast<long long>(seen.size()) == wreath::group_order(r, n));
  }
}

TEST_CASE("equal tableau pairs characterize the symmetric elements", "[rsk]") {
  for (const auto& g : wreath::enumerate_group(2, 3)) {
    const TableauPair pair = wreath::colored_rsk(g);
    CHECK((pair.P == pair.Q) == wreath::is_absolute_involution(g));
  }
}

TEST_CASE("shapes of diagonal vectors sort their colors into rows", "[rsk]") {
  CHECK(wreath::shape_of_involution(ColoredPermutation::identity(2, 3)) ==
        wreath::MultiPartition{{3}, {}});
  CHECK(wreath::shape_of_involution(
            ColoredPermutation(2, 3, {1, 2, 3}, {1, 1, 0})) ==
        wreath::MultiPartition{{1}, {2}});
  CHECK_THROWS_AS(
      wreath::shape_of_involution(ColoredPermutation(2, 2, {2, 1}, {0, 1})),
      std::invalid_argument);
}

TEST_CASE("reverse insertion validates its input", "[rsk]") {
  const ColoredPermutation g(2, 3, {2, 1, 3}, {1, 1, 0});
  TableauPair pair = wreath::colored_rsk(g);
  CHECK_THROWS_AS(wreath::inverse_colored_rsk(pair, 2, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(wreath::inverse_colored_rsk(pair, 3, 3),
                  std::invalid_argument);
  pair.Q[1] = Tableau{{1, 2}};  // shape no longer matches P
  CHECK_THROWS_AS(wreath::inverse_colored_rsk(pair, 2, 3),
                  std::invalid_argument);
  TableauPair bad = wreath::colored_rsk(g);
  bad.P[1] = Tableau{{2}, {1}};  // not increasing down the column
  CHECK_THROWS_AS(wreath::inverse_colored_rsk(bad, 2, 3),
                  std::invalid_argument);
}
