#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace bclab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Thrown when a tunable resource cap (vertex count, coefficient height,
// factorization degree, grid size) is exceeded.  The CLI maps this to exit
// code 2, everything else invalid to exit code 1.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Undecidable numeric comparison at maximum working precision.
class precision_error : public std::runtime_error {
 public:
  explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

inline double to_double(const BigRat& q) { return q.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

inline BigInt pow2(unsigned k) { return BigInt(1) << k; }

inline BigRat rat(long num, long den = 1) { return BigRat(num, den); }

inline int sign_of(const BigInt& n) { return n.sign(); }
inline int sign_of(const BigRat& q) { return q.sign(); }

inline BigRat abs_rat(const BigRat& q) { return q < 0 ? BigRat(-q) : q; }

// Closed interval with rational endpoints; the basic certificate currency.
struct RatInterval {
  BigRat lo, hi;
  RatInterval() = default;
  RatInterval(BigRat l, BigRat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
  }
  BigRat width() const { return hi - lo; }
  BigRat mid() const { return (lo + hi) / 2; }
  bool contains(const BigRat& x) const { return lo <= x && x <= hi; }
  bool disjoint(const RatInterval& o) const { return hi < o.lo || o.hi < lo; }
};

// Number of bits of the numerator+denominator, used for height caps.
inline size_t bit_height(const BigRat& q) {
  return msb(abs(numerator(q)) + 1) + msb(denominator(q) + 1);
}

}  // namespace bclab
