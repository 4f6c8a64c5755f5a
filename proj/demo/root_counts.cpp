// For each conjugacy class of the colored permutation group with r = 2,
// n = 3, prints the number of solutions v of v * bar(v) = g three ways:
// by brute force over the group, by the closed-form product over cycles,
// and as the sum of all irreducible characters at g.  The three columns
// agree; that agreement is the point.

#include <iostream>

#include "wreath/characters.hpp"
#include "wreath/roots.hpp"

int main() {
  const int r = 2, n = 3;
  const auto classes = wreath::class_data(r, n);
  const auto brute = wreath::count_bruteforce_by_class(r, n);

  std::cout << "v * bar(v) = g solution counts, r=" << r << " n=" << n
            << "\n\n";
  std::cout << "class (cycle lengths by color)   brute  formula  char-sum\n";
  for (size_t c = 0; c < classes.types.size(); ++c) {
    const auto& ct = classes.types[c];
    const long long b = brute.at(ct);
    const long long f =
        wreath::count_formula_from_cycles(r, wreath::class_type_to_cycles(ct));
    const long long s = wreath::sum_irr_chars(classes.reps[c]);
    std::cout << "  [";
    for (size_t a = 0; a < ct.cycles_by_color.size(); ++a) {
      if (a) std::cout << " | ";
      for (size_t i = 0; i < ct.cycles_by_color[a].size(); ++i)
        std::cout << (i ? "," : "") << ct.cycles_by_color[a][i];
    }
    std::cout << "]   " << b << "  " << f << "  " << s
              << (b == f && b == s ? "" : "   MISMATCH") << "\n";
  }
  return 0;
}
