#include "bclab/field.hpp"

#include <algorithm>

namespace bclab {

NumberField::NumberField(AlgebraicNumber beta) : beta_(std::move(beta)) {
  const IntPoly& m = beta_.minpoly();
  int n = m.degree();
  reduction_.assign(n, BigRat(0));
  for (int i = 0; i < n; ++i) reduction_[i] = BigRat(-m[i], m[n]);
}

std::shared_ptr<const NumberField> NumberField::make(AlgebraicNumber beta) {
  return std::shared_ptr<const NumberField>(new NumberField(std::move(beta)));
}

FieldElement NumberField::element(std::vector<BigRat> coords) const {
  int n = degree();
  if (int(coords.size()) > n) {
    // reduce high powers
    for (size_t i = coords.size(); i-- > size_t(n);) {
      BigRat top = coords[i];
      if (top == 0) continue;
      coords[i] = 0;
      for (int j = 0; j < n; ++j) coords[i - n + j] += top * reduction_[j];
    }
  }
  coords.resize(n, BigRat(0));
  return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement NumberField::from_rational(const BigRat& q) const {
  std::vector<BigRat> c(degree(), BigRat(0));
  c[0] = q;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::zero() const { return from_rational(BigRat(0)); }
FieldElement NumberField::one() const { return from_rational(BigRat(1)); }

FieldElement NumberField::beta() const {
  if (degree() == 1) return from_rational(beta_.rational_value());
  std::vector<BigRat> c(degree(), BigRat(0));
  c[1] = 1;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::beta_inv() const { return beta().inverse(); }

RatInterval NumberField::beta_interval(const BigRat& width) const {
  return beta_.refined_interval(width);
}

FieldElement::FieldElement(std::shared_ptr<const NumberField> f, std::vector<BigRat> c)
    : fld_(std::move(f)), c_(std::move(c)) {}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const BigRat& v) { return v == 0; });
}

bool FieldElement::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

BigRat FieldElement::rational_value() const {
  if (!is_rational()) throw std::domain_error("field element is irrational");
  return c_.empty() ? BigRat(0) : c_[0];
}

static void check_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) {
    // identical contexts created separately are fine if generators agree
    if (!a.field() || !b.field() ||
        !(a.field()->generator().minpoly() == b.field()->generator().minpoly()) ||
        a.field()->generator().compare(b.field()->generator()) != 0)
      throw std::invalid_argument("field elements from different contexts");
  }
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  std::vector<BigRat> c(a.c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
  return FieldElement(a.fld_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  std::vector<BigRat> c(a.c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
  return FieldElement(a.fld_, std::move(c));
}

FieldElement operator-(const FieldElement& a) {
  std::vector<BigRat> c(a.c_);
  for (auto& v : c) v = -v;
  return FieldElement(a.fld_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  if (a.c_.size() == 1) return FieldElement(a.fld_, {a.c_[0] * b.c_[0]});
  std::vector<BigRat> prod(a.c_.size() + b.c_.size() - 1, BigRat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
  }
  return a.fld_->element(std::move(prod));
}

FieldElement operator+(const FieldElement& a, const BigRat& q) {
  std::vector<BigRat> c(a.c_);
  c[0] += q;
  return FieldElement(a.fld_, std::move(c));
}

FieldElement operator*(const BigRat& q, const FieldElement& a) {
  std::vector<BigRat> c(a.c_);
  for (auto& v : c) v *= q;
  return FieldElement(a.fld_, std::move(c));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  if (c_.size() == 1) return FieldElement(fld_, {BigRat(1) / c_[0]});
  // extended Euclid in Q[x]: s * elem + t * minpoly = 1
  QPoly r0 = qp_from(fld_->generator().minpoly());
  QPoly r1 = qp_trim(c_);
  QPoly s0 = {}, s1 = {BigRat(1)};
  while (r1.size() > 1 || (r1.size() == 1 && false)) {
    auto [q, r2] = qp_divmod(r0, r1);
    QPoly s2 = qp_sub(s0, qp_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw std::domain_error("not invertible (minimal polynomial reducible?)");
  }
  // r1 is a nonzero constant c: s1 * elem == c (mod minpoly)
  QPoly inv = qp_scale(s1, BigRat(1) / r1[0]);
  std::vector<BigRat> c(inv.begin(), inv.end());
  return fld_->element(std::move(c));
}

int FieldElement::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return c_[0].sign();
  // interval Horner over the isolating interval of beta, refined until the
  // sign is certified; nonzero is guaranteed by irreducibility
  BigRat width = fld_->generator().interval().width();
  if (width == 0) width = 1;
  for (int round = 0; round < 4096; ++round) {
    RatInterval bi = fld_->beta_interval(width);
    BigRat lo = c_.back(), hi = c_.back();
    for (size_t i = c_.size() - 1; i-- > 0;) {
      BigRat p1 = lo * bi.lo, p2 = lo * bi.hi, p3 = hi * bi.lo, p4 = hi * bi.hi;
      BigRat nlo = std::min(std::min(p1, p2), std::min(p3, p4));
      BigRat nhi = std::max(std::max(p1, p2), std::max(p3, p4));
      lo = nlo + c_[i];
      hi = nhi + c_[i];
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    width /= 16;
  }
  throw precision_error("field element sign undecided at maximum refinement");
}

int FieldElement::compare(const BigRat& q) const {
  FieldElement d = *this + BigRat(-q);
  return d.sign();
}

bool FieldElement::operator==(const FieldElement& o) const {
  check_same_field(*this, o);
  return c_ == o.c_;
}

RatInterval FieldElement::enclosure(const BigRat& w) const {
  if (is_rational()) {
    BigRat v = c_.empty() ? BigRat(0) : c_[0];
    return RatInterval(v, v);
  }
  BigRat width = w;
  for (int round = 0; round < 4096; ++round) {
    RatInterval bi = fld_->beta_interval(width);
    BigRat lo = c_.back(), hi = c_.back();
    for (size_t i = c_.size() - 1; i-- > 0;) {
      BigRat p1 = lo * bi.lo, p2 = lo * bi.hi, p3 = hi * bi.lo, p4 = hi * bi.hi;
      lo = std::min(std::min(p1, p2), std::min(p3, p4)) + c_[i];
      hi = std::max(std::max(p1, p2), std::max(p3, p4)) + c_[i];
    }
    if (hi - lo <= w) return RatInterval(lo, hi);
    width /= 16;
  }
  throw precision_error("field element enclosure did not converge");
}

double FieldElement::to_double() const {
  RatInterval iv = enclosure(BigRat(1, BigInt(1) << 70));
  return bclab::to_double(iv.mid());
}

size_t FieldElement::height_bits() const {
  size_t h = 0;
  for (const auto& v : c_) h = std::max(h, bit_height(v));
  return h;
}

}  // namespace bclab
