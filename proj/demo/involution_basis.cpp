// Builds the signed permutation module on absolute involutions for r = 2,
// n = 2, prints the basis and the action of each simple reflection as a
// signed permutation of basis indices, and decomposes the character into
// irreducibles.  Every multiplicity is 1: the module is a Gelfand model.

#include <iostream>

#include "wreath/characters.hpp"
#include "wreath/json_io.hpp"
#include "wreath/model.hpp"

int main() {
  const int r = 2, n = 2;
  const auto basis = wreath::ModelBasis::build(r, n);

  std::cout << "basis of absolute involutions, r=" << r << " n=" << n << ":\n";
  for (size_t i = 0; i < basis.elements.size(); ++i)
    std::cout << "  C[" << i << "] = " << nlohmann::json(basis.elements[i])
              << "\n";

  for (const auto& s : wreath::simple_reflections(r, n)) {
    const auto m = wreath::rho(basis, s);
    std::cout << "\naction of " << nlohmann::json(s) << ":\n";
    for (size_t j = 0; j < m.target.size(); ++j)
      std::cout << "  C[" << j << "] -> " << (m.sign[j] < 0 ? "-" : "")
                << "C[" << m.target[j] << "]\n";
  }

  const auto decomp = wreath::decompose_model(r, n);
  std::cout << "\ncharacter decomposition (shape : multiplicity):\n";
  for (size_t i = 0; i < decomp.shapes.size(); ++i)
    std::cout << "  " << nlohmann::json(decomp.shapes[i]) << " : "
              << decomp.multiplicities[i] << "\n";
  return 0;
}
