#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bclab/classify.hpp"
#include "bclab/field.hpp"
#include "bclab/words.hpp"

namespace bclab {

// Exact rational closed form of the address curve y_b(t) = (1-t)/t * sum
// b_k t^k on (0,1); numerator/denominator coprime in Z[t], denominator
// positive on (0,1).
struct AddressCurve {
  BitSeq address;
  IntPoly num, den;

  BigRat eval(const BigRat& t) const;
  FieldElement eval(const FieldElement& t) const;
};

AddressCurve rational_form(const BitSeq& b);
BigRat curve_eval(const BitSeq& b, const BigRat& t);

// Entry parameter of the overlap region: the unique solution in (1/2, 1) of
// sum b_{k+1} t^k = 1, computed from the kneading sequence of b.
AlgebraicNumber t_star(const BitSeq& b);

// Certified bracket for t* of a kneading sequence given only by a finite
// prefix (b_1 = 0): lower/upper roots from the truncated series and its
// geometric tail bound.
RatInterval t_star_interval(const BitWord& kneading_prefix, int precision_bits);

// t_KL via a sufficiently long Thue-Morse prefix; width <= 2^-precision_bits.
RatInterval komornik_loreti(int precision_bits);

struct IntersectionReport {
  std::string label_b, label_c;
  AlgebraicNumber s;     // intersection parameter t
  AlgebraicNumber beta;  // 1/s with its own minimal polynomial
  FieldElement z;        // ordinate, exact in Q(beta)
  NumberClass number_class;
  bool inside_overlap = false;  // z in [1-s, s]
  bool on_boundary = false;     // z == 1-s or z == s exactly
  bool realizable = true;       // network solver: orbit walk admissible
};

// All intersection parameters of y_b and y_c in range (subset of (1/2,1));
// t = 1 discarded.  Throws on identical addresses.
std::vector<IntersectionReport> curve_intersection(const BitSeq& b, const BitSeq& c,
                                                   const RatInterval& range);

// Fixed point of g_w = g_{w_n} o ... o g_{w_1} (equals the fixed point of
// f_w), exact in the given field.
FieldElement cycle_fixed_point(const BitWord& w, const std::shared_ptr<const NumberField>& fld);
// Same as a rational function of t: {num, den}.
std::pair<IntPoly, IntPoly> cycle_fixed_point_symbolic(const BitWord& w);

enum class NetworkTarget { self, reflection };

struct NetworkConstraint {
  BitWord path;   // v: applied to y first (may be empty)
  BitWord cycle;  // w: closes on x = g_path(y)
  NetworkTarget target = NetworkTarget::self;  // g_w(x) = x, or g_w(x) = 1 - x
  std::string to_string() const;
  static NetworkConstraint parse(const std::string& s);  // "path,cycle,target"
};

// Solves the polynomial identity obtained by eliminating y from >= 2
// constraints; roots beta in (1,2) are verified against all constraints and
// walked for realizability (every applied branch admissible, branch point in
// the overlap).  Unrealizable roots are reported with realizable = false.
std::vector<IntersectionReport> network_parameter(const std::vector<NetworkConstraint>& cs);

struct UnivoqueResult {
  bool univoque = false;
  std::optional<AlgebraicNumber> beta;
};

// True iff b (< 1/2) is a kneading sequence that is not purely periodic;
// then beta = 1/t*(b) is the univoque number with expansion tail b.
UnivoqueResult is_univoque(const BitSeq& b);

}  // namespace bclab
