#pragma once

#include <vector>

#include "bclab/curves.hpp"
#include "bclab/density_kernels.hpp"
#include "bclab/words.hpp"

namespace bclab {

// Histogram approximation of nu_t: bin masses over [0,1] summing to 1.
struct Histogram {
  double t = 0;
  int bins = 0;
  int iterations = 0;
  std::vector<double> mass;

  // cumulative mass with linear interpolation inside the containing bin
  double cdf(double x) const;
  // mass of [x-s, x+s]
  double ball_mass(double x, double s) const { return cdf(x + s) - cdf(x - s); }
};

// iterations that push the geometric transport tail t^k below one bin width
int default_iters(double t, int bins);

// Transfer-operator iteration: start uniform, replace by the mean of the two
// pushforwards (mass split across bins proportionally to overlap), renormalize.
Histogram approximate(double t, int bins, int iters);

// |F_t(y_b(t)) - b|; only defined for t <= t*(b).
double quantile_residual(const BitSeq& b, const BigRat& t, const Histogram& h);

// max over samples of the conjugacy defect |F(g_i(x)) - (2 F(x) mod 1)|,
// samples must be outside D = [1-t, t].
double conjugacy_residual(const Histogram& h, const std::vector<double>& samples);

// Two-dimensional density: rows are per-t histograms on the density scale
// (bin mass * bins, so each row has mean 1).
struct PhiGrid {
  double t_min = 0, t_max = 0;
  int nt = 0, bins = 0;
  std::vector<double> values;  // row-major, nt rows of `bins` values
  double t_of_row(int i) const;
  double at(int row, int col) const { return values[size_t(row) * bins + col]; }
};

struct GridLimits {
  size_t max_cells = size_t(1) << 25;
};

PhiGrid phi_grid(double t_min, double t_max, int nt, int bins, int iters,
                 const GridLimits& limits = {});

// Least-squares slope of log nu(U(x,s)) against log s over the given radii.
struct SlopeFit {
  double slope = 0;
  double r2 = 0;
};
SlopeFit local_dim_estimate(const Histogram& h, double x, const std::vector<double>& radii);

}  // namespace bclab
