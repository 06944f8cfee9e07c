#pragma once

#include <utility>
#include <vector>

#include "bclab/poly.hpp"

namespace bclab {

inline constexpr int kFactorDegreeCap = 64;

struct Factorization {
  BigInt content;  // signed integer content; product of factors times this is the input
  std::vector<std::pair<IntPoly, int>> factors;  // primitive irreducible, multiplicity
};

// Full factorization over Z[x].  Factors are primitive irreducible with
// positive leading coefficient, sorted by (degree, coefficient sequence).
// Throws resource_error above the degree cap.
Factorization factor_full(const IntPoly& p);

// Just the (factor, multiplicity) list.
std::vector<std::pair<IntPoly, int>> factor(const IntPoly& p);

bool is_irreducible(const IntPoly& p);

}  // namespace bclab
