#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <random>

#include "bclab/density.hpp"
#include "bclab/io.hpp"
#include "doctest.h"

using namespace bclab;

static BigRat R(long n, long d) { return BigRat(n, d); }

TEST_CASE("kernel variants produce bit-identical pushforwards") {
  const auto& reg = kernel_registry();
  REQUIRE(reg.size() >= 2);
  CHECK(std::string(reg[0].name) == "scalar");
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  bool any_simd = false;
  for (const auto& entry : reg) {
    if (std::string(entry.name) == "scalar" || !entry.available) continue;
    any_simd = true;
    for (int trial = 0; trial < 30; ++trial) {
      int n = 16 + int(rng() % 3000);
      double t = 0.5 + 0.499 * uni(rng);
      double off = (trial % 2) ? 1.0 - t : 0.0;
      std::vector<double> src(n), a(n), b(n);
      for (double& v : src) v = uni(rng);
      for (int i = 0; i < n; ++i) a[i] = b[i] = uni(rng) * 0.001;
      push_scalar(src.data(), a.data(), n, t, off, 0.5);
      entry.fn(src.data(), b.data(), n, t, off, 0.5);
      for (int i = 0; i < n; ++i) {
        REQUIRE(a[i] == b[i]);  // exact equality, not approximate
      }
    }
  }
  INFO("SIMD variant present: " << any_simd);
}

TEST_CASE("pushforward preserves mass") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 50 + int(rng() % 2000);
    double t = 0.5 + 0.49 * uni(rng);
    std::vector<double> src(n), dst(n, 0.0);
    double total = 0;
    for (double& v : src) {
      v = uni(rng);
      total += v;
    }
    push_scalar(src.data(), dst.data(), n, t, 0.0, 0.5);
    push_scalar(src.data(), dst.data(), n, t, 1.0 - t, 0.5);
    double out = std::accumulate(dst.begin(), dst.end(), 0.0);
    CHECK(out == doctest::Approx(total).epsilon(1e-12));
  }
}

TEST_CASE("t = 1/2 fixes the uniform histogram") {
  Histogram h = approximate(0.5, 100, 1);
  for (double m : h.mass) CHECK(m == doctest::Approx(0.01).epsilon(1e-12));
  Histogram h2 = approximate(0.5, 100, 17);
  for (double m : h2.mass) CHECK(m == doctest::Approx(0.01).epsilon(1e-12));
}

TEST_CASE("histograms are symmetric and normalized") {
  for (double t : {0.55, 0.61, 0.73}) {
    Histogram h = approximate(t, 1000, 30);
    double sum = std::accumulate(h.mass.begin(), h.mass.end(), 0.0);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    for (int i = 0; i < 500; ++i)
      CHECK(h.mass[i] == doctest::Approx(h.mass[999 - i]).epsilon(1e-10));
    for (double m : h.mass) CHECK(m >= 0);
  }
}

TEST_CASE("cdf endpoints, midpoint and monotonicity") {
  Histogram h = approximate(0.6, 2000, 40);
  CHECK(h.cdf(0) == 0);
  CHECK(h.cdf(1) == 1);
  CHECK(h.cdf(0.5) == doctest::Approx(0.5).epsilon(1e-9));
  double prev = 0;
  for (double x = 0; x <= 1.0; x += 0.01) {
    double c = h.cdf(x);
    CHECK(c >= prev - 1e-15);
    prev = c;
  }
}

TEST_CASE("transport contraction between iterates") {
  // L1 distance of CDFs between successive iterates decreases by <= t + 0.05
  double t = 0.6;
  int bins = 2000;
  PushKernel push = active_kernel();
  std::vector<double> cur(bins, 1.0 / bins), next(bins);
  auto l1_cdf = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double ca = 0, cb = 0, acc = 0;
    for (int i = 0; i < bins; ++i) {
      ca += a[i];
      cb += b[i];
      acc += std::abs(ca - cb) / bins;
    }
    return acc;
  };
  double prev_dist = -1;
  for (int it = 0; it < 14; ++it) {
    std::fill(next.begin(), next.end(), 0.0);
    push(cur.data(), next.data(), bins, t, 0.0, 0.5);
    push(cur.data(), next.data(), bins, t, 1.0 - t, 0.5);
    double total = std::accumulate(next.begin(), next.end(), 0.0);
    for (double& v : next) v /= total;
    double dist = l1_cdf(cur, next);
    if (it > 3 && prev_dist > 1e-14) CHECK(dist <= (t + 0.05) * prev_dist);
    prev_dist = dist;
    cur.swap(next);
  }
}

TEST_CASE("refinement consistency of the cdf") {
  double t = 0.58;
  Histogram coarse = approximate(t, 1000, default_iters(t, 1000));
  Histogram fine = approximate(t, 2000, default_iters(t, 2000));
  for (double x : {0.2, 0.35, 0.5, 0.62, 0.8})
    CHECK(std::abs(coarse.cdf(x) - fine.cdf(x)) <= 2.0 / 1000);
}

TEST_CASE("quantile residuals of the period-2 curve") {
  Histogram h = approximate(0.58, 8000, default_iters(0.58, 8000));
  double r = quantile_residual(BitSeq::parse("1/3"), R(58, 100), h);
  CHECK(r <= 2.0 / 8000 + 5e-3);
  Histogram h2 = approximate(0.55, 8000, default_iters(0.55, 8000));
  double r2 = quantile_residual(BitSeq::parse("1/5"), R(55, 100), h2);
  CHECK(r2 <= 2.0 / 8000 + 5e-3);
  // outside the quantile domain: t > t*(1/5) = s2
  CHECK_THROWS_AS(quantile_residual(BitSeq::parse("1/5"), R(60, 100), h), std::invalid_argument);
}

TEST_CASE("conjugacy residual") {
  double t = 0.58;
  Histogram h = approximate(t, 8000, default_iters(t, 8000));
  CHECK(conjugacy_residual(h, {0.0}) == 0);
  std::vector<double> samples;
  for (int i = 1; i <= 25; ++i) samples.push_back((1 - t) * i / 26.0);
  for (int i = 1; i <= 25; ++i) samples.push_back(t + (1 - t) * i / 26.0);
  CHECK(conjugacy_residual(h, samples) <= 2.0 / 8000 + 5e-3);
  CHECK_THROWS_AS(conjugacy_residual(h, {0.5}), std::invalid_argument);
}

TEST_CASE("Monte Carlo random-sum oracle agrees with the transfer operator") {
  double t = 0.61;
  Histogram h = approximate(t, 4000, default_iters(t, 4000));
  std::mt19937_64 rng(1234);
  const int samples = 60000, depth = 60;
  std::vector<double> xs(samples);
  for (int s = 0; s < samples; ++s) {
    double x = 0, tk = 1 - t;  // value = (1-t) sum omega_k t^k, geometric from k=0
    for (int k = 0; k < depth; ++k) {
      if (rng() & 1) x += tk;
      tk *= t;
    }
    xs[s] = x;
  }
  std::sort(xs.begin(), xs.end());
  for (double q : {0.2, 0.4, 0.5, 0.6, 0.8}) {
    double mc =
        double(std::lower_bound(xs.begin(), xs.end(), q) - xs.begin()) / samples;
    CHECK(std::abs(mc - h.cdf(q)) < 0.01);
  }
}

TEST_CASE("local dimension estimates at the golden parameter") {
  double t2 = 0.6180339887498949;
  Histogram h = approximate(t2, 32768, default_iters(t2, 32768));
  std::vector<double> radii = {0.04, 0.02, 0.01, 0.005, 0.0025, 0.00125};
  SlopeFit at_half = local_dim_estimate(h, 0.5, radii);
  CHECK(at_half.slope == doctest::Approx(0.9603).epsilon(0.05));
  SlopeFit at_memax = local_dim_estimate(h, 1 / std::sqrt(5.0), radii);
  CHECK(at_memax.slope == doctest::Approx(0.9404).epsilon(0.05));
  double boundary = t2 / (1 + t2);  // y_{1/3}(t2)
  SlopeFit at_boundary = local_dim_estimate(h, boundary, radii);
  CHECK(at_boundary.slope > 1.2);
  CHECK_THROWS_AS(local_dim_estimate(h, 0.5, {0.1, 0.2, 0.3, 0.4}), std::invalid_argument);
}

TEST_CASE("phi grid rows near 1/2 are flat and standardized") {
  PhiGrid g = phi_grid(0.5, 0.5005, 3, 256, 0);
  for (int i = 0; i < g.nt; ++i) {
    double mean = 0, lo = 1e9, hi = -1e9;
    for (int j = 0; j < g.bins; ++j) {
      double v = g.at(i, j);
      mean += v;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    mean /= g.bins;
    CHECK(mean == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(hi - lo < 0.2);
  }
  CHECK_THROWS_AS(phi_grid(0.5, 0.6, 100000, 100000, 1), resource_error);
}

TEST_CASE("phi grid shows the documented window features") {
  // peak window: the largest value sits at (s2, 0.4809)
  {
    PhiGrid g = phi_grid(0.55, 0.58, 31, 4000, 0);
    double best = -1, best_t = 0, best_x = 0;
    for (int i = 0; i < g.nt; ++i) {
      for (int j = int(0.455 * g.bins); j < int(0.485 * g.bins); ++j) {
        if (g.at(i, j) > best) {
          best = g.at(i, j);
          best_t = g.t_of_row(i);
          best_x = (j + 0.5) / g.bins;
        }
      }
    }
    CHECK(best_t == doctest::Approx(0.5698).epsilon(4e-3));
    CHECK(best_x == doctest::Approx(0.4809).epsilon(4e-3));
  }
  // unique-address curves are dark ridges; the decay per bin width is
  // bin^{d-1}, so the hard 0.2 threshold needs the large local dimension of
  // the period-2 curve near t2
  {
    PhiGrid g = phi_grid(0.585, 0.615, 7, 4000, 0);
    AddressCurve c = rational_form(BitSeq::parse("1/3"));
    for (int i = 0; i < g.nt; ++i) {
      double t = g.t_of_row(i);
      double y = to_double(c.eval(BigRat(std::lround(t * 100000), 100000)));
      int j = int(y * g.bins);
      double v = std::min({g.at(i, j), g.at(i, j - 1), g.at(i, j + 1)});
      CHECK(v < 0.2);
    }
  }
  // in the tribonacci window the kneading curve 3/7 (below its entry t3) is
  // markedly below the mean
  {
    PhiGrid g = phi_grid(0.53, 0.542, 7, 8000, 0);
    AddressCurve c = rational_form(BitSeq::parse("3/7"));
    for (int i = 0; i < g.nt; ++i) {
      double t = g.t_of_row(i);
      double y = to_double(c.eval(BigRat(std::lround(t * 100000), 100000)));
      int j = int(y * g.bins);
      double v = std::min({g.at(i, j), g.at(i, j - 1), g.at(i, j + 1)});
      CHECK(v < 0.75);
    }
  }
}

TEST_CASE("grid exports are deterministic and well formed") {
  PhiGrid g = phi_grid(0.55, 0.6, 4, 64, 12);
  std::ostringstream a, b;
  write_grid_pgm(a, g, 8);
  write_grid_pgm(b, g, 8);
  CHECK(a.str() == b.str());
  CHECK(a.str().substr(0, 2) == "P5");
  std::ostringstream p16;
  write_grid_pgm(p16, g, 16);
  CHECK(p16.str().size() > a.str().size());
  std::ostringstream ppm;
  write_grid_ppm(ppm, g);
  CHECK(ppm.str().substr(0, 2) == "P6");
  std::ostringstream csv1, csv2;
  write_grid_csv(csv1, g);
  write_grid_csv(csv2, g);
  CHECK(csv1.str() == csv2.str());
}
