// Reference pushforward kernel.  Compiled with -ffp-contract=off so the
// mul/add sequence matches the vector variants operation for operation.
#include <cmath>

#include "bclab/density_kernels.hpp"
#include "density_kernel_detail.hpp"

namespace bclab {

namespace detail {

// Fully clamped per-bin accumulation for the boundary region.
void push_edge_range(const double* src, double* dst, int n, double inv_t, double c, double weight,
                     int j_begin, int j_end) {
  for (int j = j_begin; j < j_end; ++j) {
    double g0 = (double(j) - c) * inv_t;
    double g1 = (double(j + 1) - c) * inv_t;
    if (g1 <= 0 || g0 >= double(n)) continue;
    int k_lo = int(std::floor(g0));
    int k_hi = int(std::floor(g1));
    if (k_lo < 0) k_lo = 0;
    if (k_hi > n - 1) k_hi = n - 1;
    double acc = 0;
    for (int k = k_lo; k <= k_hi; ++k) {
      double lo = g0 > double(k) ? g0 : double(k);
      double hi = g1 < double(k + 1) ? g1 : double(k + 1);
      if (hi > lo) acc += src[k] * (hi - lo);
    }
    dst[j] += weight * acc;
  }
}

// Interior region: k0 >= 0 and floor(g1) <= n-1 guaranteed by the caller, and
// 1 < g1 - g0 < 2 so each destination bin overlaps exactly 2 or 3 cells.
void push_core_scalar(const double* src, double* dst, double inv_t, double c, double weight,
                      int j_begin, int j_end) {
  for (int j = j_begin; j < j_end; ++j) {
    double g0 = (double(j) - c) * inv_t;
    double g1 = (double(j + 1) - c) * inv_t;
    double f0 = std::floor(g0);
    double f1 = std::floor(g1);
    int k0 = int(f0);
    int k1 = int(f1);
    double w0 = (f0 + 1.0) - g0;
    double w2 = g1 - f1;
    double mid = (f1 - f0 == 2.0) ? src[k0 + 1] : 0.0;
    double acc = (w0 * src[k0] + mid) + w2 * src[k1];
    dst[j] += weight * acc;
  }
}

// Shared driver: splits [j_lo, j_hi] into clamped edges and a fast interior.
void push_driver(const double* src, double* dst, int n, double t, double off, double weight,
                 CoreFn core) {
  double inv_t = 1.0 / t;
  double c = double(n) * off;
  int j_lo = int(std::floor(c));
  int j_hi = int(std::ceil(c + double(n) * t)) - 1;
  if (j_lo < 0) j_lo = 0;
  if (j_hi > n - 1) j_hi = n - 1;
  if (j_lo > j_hi) return;
  // interior needs g0 >= 0 and floor(g1) + 1 <= n - 1 with slack for the
  // trailing full-cell read at k0 + 2
  int safe_lo = j_lo;
  while (safe_lo <= j_hi && (double(safe_lo) - c) * inv_t < 0.0) ++safe_lo;
  int safe_hi = j_hi;
  while (safe_hi >= safe_lo && (double(safe_hi + 1) - c) * inv_t > double(n) - 1.0) --safe_hi;
  push_edge_range(src, dst, n, inv_t, c, weight, j_lo, safe_lo);
  if (safe_hi >= safe_lo) core(src, dst, inv_t, c, weight, safe_lo, safe_hi + 1);
  push_edge_range(src, dst, n, inv_t, c, weight, safe_hi + 1, j_hi + 1);
}

}  // namespace detail

void push_scalar(const double* src, double* dst, int n, double t, double off, double weight) {
  detail::push_driver(src, dst, n, t, off, weight, detail::push_core_scalar);
}

}  // namespace bclab
