// Compiled with -mavx2 -mfma. Nothing here may run before dispatch.cpp has
// confirmed CPU support.

#include <immintrin.h>

#include "radda/kernels.hpp"

namespace radda::kernels::detail {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d a0 = _mm256_setzero_pd();
  __m256d a1 = _mm256_setzero_pd();
  __m256d a2 = _mm256_setzero_pd();
  __m256d a3 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
    a1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), a1);
    a2 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 8), _mm256_loadu_pd(y + i + 8), a2);
    a3 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 12), _mm256_loadu_pd(y + i + 12), a3);
  }
  for (; i + 4 <= n; i += 4)
    a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
  double s = hsum(_mm256_add_pd(_mm256_add_pd(a0, a1), _mm256_add_pd(a2, a3)));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    _mm256_storeu_pd(y + i + 4,
                     _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4)));
  }
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) y[i] += a * x[i];
}

void scal_avx2(double a, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

void vmuladd_avx2(const double* a, const double* x, double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(x + i),
                                            _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) y[i] += a[i] * x[i];
}

// Four x-columns against one y-column per pass so each y load feeds four FMAs.
void gram_avx2(const double* x, std::size_t ldx, std::size_t x_cols, const double* y,
               std::size_t ldy, std::size_t y_cols, std::size_t n, double* out,
               std::size_t ldo) {
  for (std::size_t j = 0; j < y_cols; ++j) {
    const double* yj = y + j * ldy;
    std::size_t i = 0;
    for (; i + 4 <= x_cols; i += 4) {
      const double* x0 = x + i * ldx;
      const double* x1 = x0 + ldx;
      const double* x2 = x1 + ldx;
      const double* x3 = x2 + ldx;
      __m256d s0 = _mm256_setzero_pd();
      __m256d s1 = _mm256_setzero_pd();
      __m256d s2 = _mm256_setzero_pd();
      __m256d s3 = _mm256_setzero_pd();
      std::size_t r = 0;
      for (; r + 4 <= n; r += 4) {
        const __m256d yv = _mm256_loadu_pd(yj + r);
        s0 = _mm256_fmadd_pd(_mm256_loadu_pd(x0 + r), yv, s0);
        s1 = _mm256_fmadd_pd(_mm256_loadu_pd(x1 + r), yv, s1);
        s2 = _mm256_fmadd_pd(_mm256_loadu_pd(x2 + r), yv, s2);
        s3 = _mm256_fmadd_pd(_mm256_loadu_pd(x3 + r), yv, s3);
      }
      double t0 = hsum(s0), t1 = hsum(s1), t2 = hsum(s2), t3 = hsum(s3);
      for (; r < n; ++r) {
        t0 += x0[r] * yj[r];
        t1 += x1[r] * yj[r];
        t2 += x2[r] * yj[r];
        t3 += x3[r] * yj[r];
      }
      double* o = out + i + j * ldo;
      o[0] = t0;
      o[1] = t1;
      o[2] = t2;
      o[3] = t3;
    }
    for (; i < x_cols; ++i) out[i + j * ldo] = dot_avx2(x + i * ldx, yj, n);
  }
}

constexpr KernelTable kAvx2{"avx2", dot_avx2, axpy_avx2, scal_avx2, vmuladd_avx2, gram_avx2};

}  // namespace

const KernelTable& avx2_kernels() noexcept { return kAvx2; }

}  // namespace radda::kernels::detail
