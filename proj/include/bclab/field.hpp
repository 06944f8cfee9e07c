#pragma once

#include <memory>
#include <vector>

#include "bclab/roots.hpp"

namespace bclab {

class FieldElement;

// Q(beta) for one algebraic beta.  Shared, immutable context; elements hold a
// pointer to it.  Degree-1 contexts degenerate to plain rational arithmetic.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  static std::shared_ptr<const NumberField> make(AlgebraicNumber beta);

  int degree() const { return beta_.minpoly().degree(); }
  const AlgebraicNumber& generator() const { return beta_; }

  FieldElement element(std::vector<BigRat> coords) const;
  FieldElement from_rational(const BigRat& q) const;
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement beta() const;      // the generator
  FieldElement beta_inv() const;  // 1/beta

  // Current certified interval for beta (refined on demand by sign queries).
  RatInterval beta_interval(const BigRat& width) const;

 private:
  explicit NumberField(AlgebraicNumber beta);
  friend class FieldElement;
  AlgebraicNumber beta_;
  // x^deg reduced: vector of deg rationals
  std::vector<BigRat> reduction_;
};

// Element of Q(beta): rational coordinate vector of length deg, always
// reduced modulo the minimal polynomial.  Value semantics, immutable.
class FieldElement {
 public:
  FieldElement() = default;

  const std::vector<BigRat>& coords() const { return c_; }
  const std::shared_ptr<const NumberField>& field() const { return fld_; }

  bool is_zero() const;
  bool is_rational() const;
  BigRat rational_value() const;  // only valid when coordinates above 0 vanish

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  FieldElement inverse() const;  // throws std::domain_error on zero
  friend FieldElement operator+(const FieldElement& a, const BigRat& q);
  friend FieldElement operator-(const FieldElement& a, const BigRat& q) {
    return a + BigRat(-q);
  }
  friend FieldElement operator*(const BigRat& q, const FieldElement& a);

  // Exact: 0 iff zero vector, else certified by interval refinement.
  int sign() const;
  int compare(const FieldElement& o) const { return (*this - o).sign(); }
  int compare(const BigRat& q) const;
  bool operator==(const FieldElement& o) const;
  bool operator<(const FieldElement& o) const { return compare(o) < 0; }

  // Certified rational enclosure of the real value, width <= w.
  RatInterval enclosure(const BigRat& w) const;
  double to_double() const;

  size_t height_bits() const;  // max coordinate height, for resource caps

 private:
  friend class NumberField;
  FieldElement(std::shared_ptr<const NumberField> f, std::vector<BigRat> c);
  std::shared_ptr<const NumberField> fld_;
  std::vector<BigRat> c_;
};

// Lexicographic comparison of coordinates; a strict weak order usable as a
// map key (not the numeric order).
struct FieldElementCoordLess {
  bool operator()(const FieldElement& a, const FieldElement& b) const {
    return a.coords() < b.coords();
  }
};

}  // namespace bclab
