#pragma once

#include <memory>
#include <vector>

#include "bclab/field.hpp"
#include "bclab/words.hpp"

namespace bclab {

// Finite directed multigraph of successors under G = {g0, g1} in Q(beta).
// Vertices sorted ascending; edge (i,j,label) means g_label(v_i) = v_j.
struct OrbitGraph {
  struct Edge {
    int from, to;
    uint8_t label;
  };
  std::shared_ptr<const NumberField> field;
  std::vector<FieldElement> vertices;
  std::vector<Edge> edges;
  int root = -1;
  bool closed = false;

  int out_degree(int v) const;
};

struct OrbitOptions {
  int max_vertices = 10000;
  size_t coeff_height_bits = size_t(1) << 16;
};

// Breadth-first closure of x under the applicable branches, with exact
// membership tests (x <= t applies g0, x >= 1-t applies g1, t = 1/beta).
// Exceeding max_vertices yields closed = false (not an error); exceeding the
// coefficient-height cap throws resource_error.
OrbitGraph finite_orbit(const FieldElement& x, const OrbitOptions& opts = {});

using IntMatrix = std::vector<std::vector<BigInt>>;

// s_{kl} = #{ i : g_i(x_k) = x_l }; requires a closed graph.
IntMatrix successor_matrix(const OrbitGraph& g);

// Vector of successor counts per vertex in generation q: S^q * (1,...,1)'.
std::vector<BigInt> generation_counts(const IntMatrix& s, int q);

// Characteristic polynomial det(xI - A), exact (Berkowitz, division-free).
IntPoly characteristic_polynomial(const IntMatrix& a);

// Certified enclosure of the spectral radius (largest real root of the
// characteristic polynomial; Perron-Frobenius for nonnegative matrices).
RatInterval spectral_radius(const IntMatrix& a, const BigRat& width);

inline RatInterval growth_rate(const IntMatrix& s) {
  return spectral_radius(s, BigRat(1, BigInt(1) << 40));
}

// d = (log m - log rho) / log beta with outward rounding.
struct DimBounds {
  double lo = 0, hi = 0;
  double mid() const { return (lo + hi) / 2; }
};
DimBounds local_dimension(int m, const RatInterval& beta, const RatInterval& rho);
DimBounds local_dimension(int m, const AlgebraicNumber& beta, const RatInterval& rho);

// Markov partition generated by a closed orbit: cut points (orbit + {0,1}),
// the column-stochastic rational matrix M and its exact stationary vector.
struct MarkovPartition {
  std::vector<FieldElement> cut_points;             // sorted, includes 0 and 1
  std::vector<std::vector<BigRat>> matrix;          // m_{kl}
  std::vector<BigRat> stationary;                   // M w = w, sum w = 1
};

MarkovPartition markov_partition(const OrbitGraph& g, const std::vector<BigRat>& probs);

// Prime cycle mixtures for the golden slope: F_{k+1} words of length 2k-1
// describing one map, plus the orbit graph of their common fixed point.
struct FibonacciMixture {
  std::vector<BitWord> words;
  OrbitGraph graph;
};
FibonacciMixture fibonacci_mixture(int k, int max_vertices = 10000);

// Abstract cycle-mixture data and concatenation (graph-level only).
struct MixtureInfo {
  int period = 0;
  BigInt cycles = 0;
};
MixtureInfo mixture_info(const OrbitGraph& g);  // throws on rootless graphs
MixtureInfo concatenate_mixtures(const MixtureInfo& a, const MixtureInfo& b);
RatInterval mixture_rate(const MixtureInfo& m, const BigRat& width = BigRat(1, BigInt(1) << 40));

// Unique solution > 1 of x^{-m} + x^{-n} = 1.
AlgebraicNumber min_growth_bound(int m, int n);

enum class CriticalVerdict { supercritical, subcritical, undecided };
const char* to_string(CriticalVerdict v);

// rho > 2s certified by enclosure separation.
CriticalVerdict supercritical_test(const RatInterval& rho, const AlgebraicNumber& s);

}  // namespace bclab
