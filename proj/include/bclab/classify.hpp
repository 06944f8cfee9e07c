#pragma once

#include <string>

#include "bclab/roots.hpp"

namespace bclab {

enum class NumberTag {
  pisot,
  salem,
  garsia,
  perron_strict,
  weak_perron_only,
  algebraic_integer_only,
  not_integer,
};

const char* to_string(NumberTag t);

struct NumberClass {
  NumberTag tag;
  bool is_algebraic_integer = false;
  bool is_pisot = false;
  bool is_salem = false;
  bool is_garsia = false;
  bool is_perron = false;       // strict: all conjugates |l| < beta
  bool is_weak_perron = false;  // all conjugates |l| <= beta
  std::string witness;          // the conjugate root deciding the class
};

// Examines the conjugate roots of the (irreducible) minimal polynomial of a
// real algebraic number > 1.  Exact cases (roots on the unit circle via the
// reciprocal transform, conjugates of modulus exactly beta via x^k support)
// are decided symbolically; everything else by certified complex enclosures
// with an adaptive precision ladder.  Throws precision_error when a modulus
// comparison stays undecided, std::invalid_argument for reducible input.
NumberClass classify(const AlgebraicNumber& a);

// Number of conjugate pairs on the unit circle (exact; 0 for non-reciprocal
// irreducible polynomials).
int unit_circle_pairs(const IntPoly& irreducible);

}  // namespace bclab
