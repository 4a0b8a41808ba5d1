// Intersection numbers on P(O(1)+O(3)) over P^3, which contains the blowup of P^3 along a plane cubic.

#include "fanohost/chow_ring.hpp"

#include <iostream>

int main() {
  using namespace fanohost;
  const auto P = SplitProjBundle::make(3, {1, 3});
  const auto xi = ChowElement::xi(P);
  std::cout << P.label() << "\n";
  std::cout << "deg xi^4 = " << integrate(power(xi, 4)) << "\n";
  std::cout << "chi(X), X in |xi| = " << euler_char_hypersurface(P) << "\n";
  for (const auto& c : invariant_curves(P))
    std::cout << "xi . curve = " << pairing(P, {1, 0}, c) << " (Chow: " << integrate(xi * curve_cycle(P, c)) << ")\n";
}
