// Repeatedly closing notches in an 8-element poset until no notch remains,
// checking at every step that closing a notch multiplies the specialized
// extension sum by the surviving cover form.

#include <iostream>

#include "posetval/posetval.hpp"

int main() {
  using namespace posetval;

  Poset p = Poset::from_covers_strict(
      8, {{1, 2}, {2, 5}, {1, 3}, {3, 5}, {1, 7}, {1, 6}, {7, 8}, {4, 8}, {4, 6}});

  while (true) {
    std::cout << "n=" << p.n() << "  psi = " << render_linden(psi_direct(p)) << "\n";
    auto notches = find_notches(p);
    if (notches.empty()) break;
    const Notch& nt = notches.front();
    std::cout << "closing notch ("
              << nt.a << "," << nt.b << "," << nt.c << ") "
              << (nt.shape == NotchShape::vee ? "vee" : "wedge") << ": "
              << (notch_identity_check(p, nt) ? "identity holds" : "MISMATCH")
              << "\n";
    p = close_notch(p, nt).poset;
  }
  return 0;
}
