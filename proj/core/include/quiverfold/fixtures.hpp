#pragma once

#include <string>
#include <vector>

#include "quiverfold/quiver.hpp"

namespace qf {

struct QuiverWithAut {
  std::string name;
  Quiver quiver;
  AdmAut aut;
};

// Path quiver on vertices "1".."m" with every arrow pointing toward `sink`.
Quiver type_a(int m, int sink);

// A_{2n-1} oriented toward n, with the reflection i <-> 2n-i.
QuiverWithAut a_involution(int n);
// D_{n+1} obtained as the split quotient of a_involution(n), with the induced
// automorphism swapping the two short legs "n|0" and "n|1".
QuiverWithAut d_involution(int n);
QuiverWithAut d4_triality();
QuiverWithAut e6_involution();
// Cyclic quiver on 0..3 with the rotation i -> i+2.
QuiverWithAut affine_a3_rotation();
// Cyclic quiver on 0..5 with the reflection i <-> 6-i.
QuiverWithAut affine_a5_involution();
// Identity automorphism with the given period.
QuiverWithAut identity_copies(const Quiver& q, int period, std::string name);

// Every fixture above, for sweeping checks.
std::vector<QuiverWithAut> standard_fixtures();

}  // namespace qf
