#pragma once

#include <optional>
#include <vector>

#include "bclab/poly.hpp"

namespace bclab {

// Sturm chain of the squarefree part; reused across queries on one polynomial.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p);
  // Number of distinct real roots in (a, b]; endpoints may be roots.
  int count_half_open(const BigRat& a, const BigRat& b) const;
  int count_open(const BigRat& a, const BigRat& b) const;
  int variations_at(const BigRat& x) const;
  int variations_at_pos_inf() const;
  int variations_at_neg_inf() const;
  const IntPoly& squarefree() const { return chain_[0]; }

 private:
  std::vector<IntPoly> chain_;
};

// Isolating intervals for the distinct real roots of p in (lo, hi), sorted
// ascending.  Each interval either has lo == hi (exact rational root) or
// carries a strict sign change of the squarefree part.
std::vector<RatInterval> isolate_real_roots(const IntPoly& p, const BigRat& lo,
                                            const BigRat& hi);
// All real roots (Cauchy bound supplies the range).
std::vector<RatInterval> isolate_real_roots(const IntPoly& p);

// Shrink an isolating interval of p (squarefree sign-change or exact) below
// the requested width.  Never changes which root is selected.
RatInterval refine_root(const IntPoly& squarefree, RatInterval iv, const BigRat& width);

// One real algebraic number: irreducible primitive minimal polynomial with
// positive leading coefficient, plus a rational isolating interval.
class AlgebraicNumber {
 public:
  // Default: the rational zero (placeholder for containers/aggregates).
  AlgebraicNumber();
  // minpoly must be irreducible; iv must isolate exactly one real root.
  AlgebraicNumber(IntPoly minpoly, RatInterval iv);
  static AlgebraicNumber from_rational(const BigRat& q);
  // Selects the unique root of p (not necessarily irreducible) inside iv;
  // factors p and keeps the factor owning that root.
  static AlgebraicNumber select_root(const IntPoly& p, RatInterval iv);

  const IntPoly& minpoly() const { return minpoly_; }
  const RatInterval& interval() const { return iv_; }
  bool is_rational() const { return minpoly_.degree() == 1; }
  BigRat rational_value() const;  // only when is_rational()

  // Certified interval of width <= w (a fresh handle; inputs are immutable).
  AlgebraicNumber refined(const BigRat& w) const;
  RatInterval refined_interval(const BigRat& w) const;
  double to_double() const;

  int compare(const BigRat& q) const;            // sign of (*this - q)
  int compare(const AlgebraicNumber& o) const;   // sign of (*this - o)
  bool operator==(const AlgebraicNumber& o) const { return compare(o) == 0; }

  // 1/alpha for alpha with isolating interval strictly positive.
  AlgebraicNumber reciprocal() const;

 private:
  IntPoly minpoly_;
  RatInterval iv_;
  mutable double approx_ = 0;
  mutable bool approx_valid_ = false;
};

// Landmark parameters: multinacci tau_n (root in (1,2) of x^n = x^{n-1}+...+1)
// and doubling phi_n (root in (1,2) of x^{n+1} = 2x^n - x + 1).
enum class NamedKind { multinacci, doubling };
AlgebraicNumber named_parameter(NamedKind kind, int n);

}  // namespace bclab
