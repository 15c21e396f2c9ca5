// Prints h, the pillowcase intersections and both signatures for a few
// (2, 2l) torus links at one angle pair.
#include <iostream>

#include "bclink/bclink.hpp"

int main() {
  using namespace bclink;
  const AnglePair alpha = AnglePair::exact(2, 5, 3, 7);
  for (int l : {-3, -2, -1, 1, 2, 3, 4}) {
    const TorusIndex ell(l);
    if (!torus::is_defined(ell, alpha)) {
      std::cout << "l=" << l << ": undefined\n";
      continue;
    }
    std::cout << "l=" << l << " h=" << torus::h_invariant(ell, alpha)
              << " symmetrized_sigma=" << sig::symmetrized_sigma(ell, alpha).str() << '\n';
    for (const auto& x : pillow::intersections(ell, alpha)) {
      std::cout << "  m=" << x.m << " phi=" << g17(x.point.phi) << " sign=" << x.sign << '\n';
    }
  }
}
