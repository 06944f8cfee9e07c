#include "bclab/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bclab {

double Histogram::cdf(double x) const {
  if (x <= 0) return 0;
  if (x >= 1) return 1;
  double pos = x * bins;
  int j = int(pos);
  if (j >= bins) j = bins - 1;
  double acc = 0;
  for (int k = 0; k < j; ++k) acc += mass[k];
  return acc + mass[j] * (pos - j);
}

int default_iters(double t, int bins) {
  if (!(t > 0) || t >= 1) throw std::invalid_argument("t must be in (0,1)");
  return int(std::ceil(std::log(double(bins)) / -std::log(t))) + 10;
}

Histogram approximate(double t, int bins, int iters) {
  if (!(t >= 0.5) || t >= 1) throw std::invalid_argument("approximate requires t in [1/2, 1)");
  if (bins < 2) throw std::invalid_argument("bins must be >= 2");
  PushKernel push = active_kernel();
  std::vector<double> cur(bins, 1.0 / bins), next(bins);
  for (int it = 0; it < iters; ++it) {
    std::fill(next.begin(), next.end(), 0.0);
    push(cur.data(), next.data(), bins, t, 0.0, 0.5);
    push(cur.data(), next.data(), bins, t, 1.0 - t, 0.5);
    double total = std::accumulate(next.begin(), next.end(), 0.0);
    double inv = 1.0 / total;
    for (double& v : next) v *= inv;
    cur.swap(next);
  }
  Histogram h;
  h.t = t;
  h.bins = bins;
  h.iterations = iters;
  h.mass = std::move(cur);
  return h;
}

double quantile_residual(const BitSeq& b, const BigRat& t, const Histogram& h) {
  AlgebraicNumber ts = t_star(b);
  if (ts.compare(t) < 0)
    throw std::invalid_argument("quantile_residual: t exceeds t*(b), outside the quantile domain");
  BigRat y = curve_eval(b, t);
  return std::abs(h.cdf(to_double(y)) - to_double(b.value()));
}

double conjugacy_residual(const Histogram& h, const std::vector<double>& samples) {
  const double t = h.t;
  double worst = 0;
  for (double x : samples) {
    if (x >= 1 - t && x <= t)
      throw std::invalid_argument("conjugacy sample inside the overlap interval");
    double r;
    if (x < 1 - t) {
      r = std::abs(h.cdf(x / t) - 2 * h.cdf(x));
    } else {
      r = std::abs(h.cdf(x / t + 1 - 1 / t) - (2 * h.cdf(x) - 1));
    }
    worst = std::max(worst, r);
  }
  return worst;
}

double PhiGrid::t_of_row(int i) const {
  if (nt == 1) return t_min;
  return t_min + (t_max - t_min) * double(i) / double(nt - 1);
}

PhiGrid phi_grid(double t_min, double t_max, int nt, int bins, int iters,
                 const GridLimits& limits) {
  if (!(0.5 <= t_min && t_min < t_max && t_max < 1))
    throw std::invalid_argument("phi_grid requires 1/2 <= t_min < t_max < 1");
  if (nt < 1 || bins < 2) throw std::invalid_argument("phi_grid: bad nt/bins");
  if (size_t(nt) * size_t(bins) > limits.max_cells)
    throw resource_error("phi_grid: nt*bins exceeds the cell cap");
  PhiGrid g;
  g.t_min = t_min;
  g.t_max = t_max;
  g.nt = nt;
  g.bins = bins;
  g.values.resize(size_t(nt) * bins);
  for (int i = 0; i < nt; ++i) {
    double t = g.t_of_row(i);
    Histogram h = approximate(t, bins, iters > 0 ? iters : default_iters(t, bins));
    for (int j = 0; j < bins; ++j) g.values[size_t(i) * bins + j] = h.mass[j] * bins;
  }
  return g;
}

SlopeFit local_dim_estimate(const Histogram& h, double x, const std::vector<double>& radii) {
  if (radii.size() < 4) throw std::invalid_argument("need at least 4 radii");
  double binw = 1.0 / h.bins;
  for (size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] < 2 * binw)
      throw std::invalid_argument("radius below histogram resolution (2 bin widths)");
    if (i && radii[i] >= radii[i - 1])
      throw std::invalid_argument("radii must be strictly decreasing");
  }
  std::vector<double> xs, ys;
  for (double s : radii) {
    double m = h.ball_mass(x, s);
    if (m <= 0) throw std::invalid_argument("empty ball at requested radius");
    xs.push_back(std::log(s));
    ys.push_back(std::log(m));
  }
  const size_t n = xs.size();
  double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  SlopeFit f;
  f.slope = sxy / sxx;
  f.r2 = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return f;
}

}  // namespace bclab
