// The three-element poset 1 < 2, 1 < 3: its weighted extension sum, the
// Hilbert series of its weak cone, and the residue that ties them together.

#include <iostream>

#include "posetval/posetval.hpp"

int main() {
  using namespace posetval;

  Poset p = Poset::from_covers_strict(3, {{1, 2}, {1, 3}});

  std::cout << "phi   = " << render_linden(phi_direct(p)) << "\n";
  std::cout << "hilb  = " << render_geom(hilb_wt(p)) << "\n";

  // Substituting X_i = exp(-x_i) and extracting the lowest-order term of the
  // series recovers phi from the Hilbert series.
  LinDenRat residue = total_residue(hilb_wt(p), p.n());
  std::cout << "resid = " << render_linden(residue) << "\n";
  std::cout << (residue == phi_direct(p) ? "residue recovers phi"
                                         : "MISMATCH")
            << "\n";
  return 0;
}
