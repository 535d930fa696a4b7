// Counts spanning trees of the cube graph three ways and prints the growth
// constant of the prism family.

#include <iostream>

#include "bforest/bforest.hpp"

int main() {
  using namespace bforest;
  RawSpec raw;
  raw.n = 4;
  raw.alphas = {1};
  raw.betas = {1};
  raw.gammas = {0};
  const ConnectionSpec cube = validate_spec(raw);

  std::cout << "closed form: " << tree_count_closed(cube).tau << "\n";
  std::cout << "oracle:      " << tree_count_oracle(realize(cube)) << "\n";
  std::cout << "chebyshev:   " << tree_count_chebyshev(cube).value << "\n";

  const GrowthLaw law = growth_law(cube);
  std::cout << "growth base: " << law.base.digits_value << "\n";

  const TauSequence seq = tau_sequence(cube, 24);
  const RationalGF gf = genfun(seq, find_recurrence(seq, 11));
  std::cout << "F(x) = (" << gf.numerator.to_string("x") << ") / (" << gf.denominator.to_string("x") << ")\n";
}
