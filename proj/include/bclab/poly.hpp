#pragma once

#include <string>
#include <vector>

#include "bclab/numeric.hpp"

namespace bclab {

// Univariate polynomial with arbitrary-precision integer coefficients,
// ascending degree order.  The zero polynomial has an empty coefficient
// vector; otherwise the leading coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(BigInt v);
  static IntPoly x();
  // c0 + c1 x + ... from an initializer-friendly list of longs.
  static IntPoly from_ints(const std::vector<long>& v);
  // x^k with coefficient 1.
  static IntPoly monomial(unsigned k, BigInt coeff = BigInt(1));

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const BigInt& lc() const;
  const BigInt& operator[](size_t i) const { return c_[i]; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a);
  friend IntPoly operator*(const BigInt& k, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  BigInt eval(const BigInt& x) const;
  BigRat eval(const BigRat& x) const;
  int sign_at(const BigRat& x) const { return eval(x).sign(); }
  // Sign of the value at +inf / -inf.
  int sign_at_pos_inf() const;
  int sign_at_neg_inf() const;

  IntPoly derivative() const;
  BigInt content() const;           // gcd of coefficients, >= 0 (0 for zero poly)
  IntPoly primitive_part() const;   // content removed, leading coefficient > 0
  IntPoly reversed() const;         // x^deg * p(1/x), trailing zeros stripped
  BigInt height() const;            // max |coefficient|

  // Exact division; throws std::domain_error if b does not divide a in Z[x].
  static IntPoly divide_exact(const IntPoly& a, const IntPoly& b);
  static bool divides(const IntPoly& b, const IntPoly& a);
  // Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.  Returns r.
  static IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);
  // GCD in Z[x], primitive with positive leading coefficient.
  static IntPoly gcd(IntPoly a, IntPoly b);
  // p / gcd(p, p'), primitive: same distinct roots, all simple.
  IntPoly squarefree_part() const;

  // True iff the support is contained in multiples of k (p = g(x^k)).
  bool is_poly_in_xk(unsigned k) const;
  // Extract g with p(x) = g(x^k); precondition is_poly_in_xk(k).
  IntPoly decimate(unsigned k) const;
  // True iff x^n p(1/x) == +-p (self-reciprocal up to sign).
  bool is_reciprocal() const;

  std::string to_string(const std::string& var = "x") const;
  std::string to_coeff_list() const;  // "[c0,c1,...,cn]"
  // Accepts either a coefficient list "[c0,c1,...]" or a human-readable
  // string like "x^5-x^4-x^2-x-1" (any single-letter variable).
  static IntPoly parse(const std::string& s);

 private:
  void trim();
  std::vector<BigInt> c_;
};

// Rational-coefficient polynomial helpers used by the field layer and by
// curve algebra; kept as plain functions over coefficient vectors.
using QPoly = std::vector<BigRat>;

QPoly qp_trim(QPoly a);
QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_sub(const QPoly& a, const QPoly& b);
QPoly qp_mul(const QPoly& a, const QPoly& b);
QPoly qp_scale(const QPoly& a, const BigRat& k);
// Division with remainder; returns {quotient, remainder}.
std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b);
BigRat qp_eval(const QPoly& a, const BigRat& x);
QPoly qp_from(const IntPoly& p);
// Clear denominators, return primitive IntPoly with positive lc.
IntPoly qp_to_int_primitive(const QPoly& a);

}  // namespace bclab
