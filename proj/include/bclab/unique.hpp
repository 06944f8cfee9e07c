#pragma once

#include <string>
#include <vector>

#include "bclab/curves.hpp"
#include "bclab/orbits.hpp"
#include "bclab/words.hpp"

namespace bclab {

// Maximal holes of the Cantor set S_b (itineraries whose doubling orbit
// avoids (b, 1-b)): the complement is the disjoint union of f_w(J) over the
// hole words w.  A word is a hole word iff no suffix u has fixed point
// .overline{u} inside [b, 1-b].
struct HoleSystem {
  BitSeq b;
  int depth;
  std::vector<BitWord> holes;   // all hole words of length 1..depth
  std::vector<size_t> counts;   // counts[m-1] = a_m, m = 1..depth
};

HoleSystem holes(const BitSeq& b, int depth);

// 0/1 adjacency matrix of the doubling map restricted to the complement of
// (b, 1-b), over the Markov partition cut by the orbits of b and 1-b.  Its
// spectral radius is the word-growth rate of S_b.
IntMatrix transfer_matrix(const BitSeq& b);

RatInterval hole_growth_rate(const BitSeq& b,
                             const BigRat& width = BigRat(1, BigInt(1) << 40));

// dim = log rho / log beta with beta = 1/t; exact transfer-matrix route for
// eventually periodic b.
DimBounds dimension(const BitSeq& b, const AlgebraicNumber& t);
DimBounds dimension(const BitSeq& b, const BigRat& t);

// b = .overline{w(1-w)} structural test (isolated point of S_b).
bool is_isolated(const BitSeq& b);

// Membership of y_c(t) in the unique-address set A_t: t < t*(c) (equality
// never qualifies for eventually periodic c).
bool membership_At(const BitSeq& c, const BigRat& t);
bool membership_At(const BitSeq& c, const AlgebraicNumber& t);

enum class AddressCardinality { two, countable };
const char* to_string(AddressCardinality c);

struct TwoAddressReport {
  std::string label_b, label_c;  // participating addresses
  AlgebraicNumber t;
  AlgebraicNumber beta;
  FieldElement y;  // the multi-address point
  AddressCardinality cardinality = AddressCardinality::two;
  bool verified = false;  // successor orbits certified to avoid open D
};

// Intersection parameters over a catalog of eventually periodic itineraries:
// solves the difference relation y_{c'}(t) = y_c(t) + 1 - 1/t (two-address
// points y = f0(y_c) = f1(y_{c'})) and, for mixed periodic/preperiodic
// pairs, direct curve intersections (countably many addresses).  Successor
// orbits are iterated in Q(beta) until closure or the vertex cap; reports
// whose orbits re-enter the open overlap away from y are dropped.
std::vector<TwoAddressReport> two_address_scan(const RatInterval& range,
                                               const std::vector<BitSeq>& catalog,
                                               int max_vertices = 10000);

// Parameters where the central point 1/2 has exactly two addresses: roots of
// y_c(t) = 1 - 1/(2t) over the catalog families .00overline{01},
// 00(01)^n overline{0110} (n <= catalog_depth) and 000 + periodic kneading
// tails of period <= 6.
std::vector<TwoAddressReport> central_point_params(const RatInterval& range, int catalog_depth,
                                                   int max_vertices = 10000);

}  // namespace bclab
