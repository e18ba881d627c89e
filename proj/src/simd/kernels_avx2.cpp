// Compiled with -mavx2 -mfma; only reached after a CPUID check.
#include "kernels_impl.hpp"

#include <immintrin.h>

namespace ulp::simd::avx2 {

namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

} // namespace

double dot(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    if (i + 4 <= n) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        i += 4;
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void dot_columns(const double* cols, std::size_t stride, std::size_t rows, std::size_t ncols, const double* v,
                 double* out) {
    std::size_t j = 0;
    // Four columns per pass share the loads of v.
    for (; j + 4 <= ncols; j += 4) {
        const double* c0 = cols + j * stride;
        const double* c1 = c0 + stride;
        const double* c2 = c1 + stride;
        const double* c3 = c2 + stride;
        __m256d a0 = _mm256_setzero_pd(), a1 = _mm256_setzero_pd();
        __m256d a2 = _mm256_setzero_pd(), a3 = _mm256_setzero_pd();
        std::size_t i = 0;
        for (; i + 4 <= rows; i += 4) {
            const __m256d vv = _mm256_loadu_pd(v + i);
            a0 = _mm256_fmadd_pd(_mm256_loadu_pd(c0 + i), vv, a0);
            a1 = _mm256_fmadd_pd(_mm256_loadu_pd(c1 + i), vv, a1);
            a2 = _mm256_fmadd_pd(_mm256_loadu_pd(c2 + i), vv, a2);
            a3 = _mm256_fmadd_pd(_mm256_loadu_pd(c3 + i), vv, a3);
        }
        double s0 = hsum(a0), s1 = hsum(a1), s2 = hsum(a2), s3 = hsum(a3);
        for (; i < rows; ++i) {
            s0 += c0[i] * v[i];
            s1 += c1[i] * v[i];
            s2 += c2[i] * v[i];
            s3 += c3[i] * v[i];
        }
        out[j] = s0;
        out[j + 1] = s1;
        out[j + 2] = s2;
        out[j + 3] = s3;
    }
    for (; j < ncols; ++j) out[j] = dot(cols + j * stride, v, rows);
}

std::size_t argmax(const double* v, std::size_t n) {
    if (n < 8) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (v[i] > v[best]) best = i;
        return best;
    }
    // Vector pass finds the maximum value, scalar pass finds its first index.
    __m256d m = _mm256_loadu_pd(v);
    std::size_t i = 4;
    for (; i + 4 <= n; i += 4) m = _mm256_max_pd(m, _mm256_loadu_pd(v + i));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, m);
    double best = lanes[0];
    for (int k = 1; k < 4; ++k)
        if (lanes[k] > best) best = lanes[k];
    for (; i < n; ++i)
        if (v[i] > best) best = v[i];
    for (std::size_t k = 0; k < n; ++k)
        if (v[k] == best) return k;
    return 0;
}

} // namespace ulp::simd::avx2
