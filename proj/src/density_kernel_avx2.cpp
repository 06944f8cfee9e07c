// AVX2 pushforward kernel.  Per destination bin it performs the same IEEE
// operations as the scalar core (sub, mul, floor, sub, mul, add in the same
// order, no FMA), so results are bit-identical; tests assert exact equality.
#include "bclab/density_kernels.hpp"
#include "density_kernel_detail.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace bclab {
namespace {

void push_core_avx2(const double* src, double* dst, double inv_t, double c, double weight,
                    int j_begin, int j_end) {
  int j = j_begin;
  const __m256d vinv = _mm256_set1_pd(inv_t);
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vone = _mm256_set1_pd(1.0);
  const __m256d vtwo = _mm256_set1_pd(2.0);
  const __m256d vw = _mm256_set1_pd(weight);
  for (; j + 4 <= j_end; j += 4) {
    __m256d jv = _mm256_set_pd(double(j + 3), double(j + 2), double(j + 1), double(j));
    __m256d jv1 = _mm256_set_pd(double(j + 4), double(j + 3), double(j + 2), double(j + 1));
    __m256d g0 = _mm256_mul_pd(_mm256_sub_pd(jv, vc), vinv);
    __m256d g1 = _mm256_mul_pd(_mm256_sub_pd(jv1, vc), vinv);
    __m256d f0 = _mm256_floor_pd(g0);
    __m256d f1 = _mm256_floor_pd(g1);
    __m128i k0 = _mm256_cvttpd_epi32(f0);
    __m128i k1 = _mm256_cvttpd_epi32(f1);
    __m128i k0p1 = _mm_add_epi32(k0, _mm_set1_epi32(1));
    __m256d s0 = _mm256_i32gather_pd(src, k0, 8);
    __m256d s1 = _mm256_i32gather_pd(src, k0p1, 8);
    __m256d s2 = _mm256_i32gather_pd(src, k1, 8);
    __m256d w0 = _mm256_sub_pd(_mm256_add_pd(f0, vone), g0);
    __m256d w2 = _mm256_sub_pd(g1, f1);
    __m256d span2 = _mm256_cmp_pd(_mm256_sub_pd(f1, f0), vtwo, _CMP_EQ_OQ);
    __m256d mid = _mm256_and_pd(s1, span2);
    __m256d acc = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(w0, s0), mid), _mm256_mul_pd(w2, s2));
    __m256d cur = _mm256_loadu_pd(dst + j);
    _mm256_storeu_pd(dst + j, _mm256_add_pd(cur, _mm256_mul_pd(vw, acc)));
  }
  if (j < j_end) detail::push_core_scalar(src, dst, inv_t, c, weight, j, j_end);
}

}  // namespace

void push_avx2(const double* src, double* dst, int n, double t, double off, double weight) {
  detail::push_driver(src, dst, n, t, off, weight, push_core_avx2);
}

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

}  // namespace bclab

#else  // non-x86: no AVX2 variant

namespace bclab {
void push_avx2(const double* src, double* dst, int n, double t, double off, double weight) {
  push_scalar(src, dst, n, t, off, weight);
}
bool avx2_supported() { return false; }
}  // namespace bclab

#endif
