// AVX2/FMA variants of the kernel table. Compiled with -mavx2 -mfma; the
// dispatcher only hands this table out after a runtime cpuid check.
#include "uwu/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cmath>

namespace uwu::kernels {
namespace {

// [ext[j], ext[j+2], ext[j+4], ext[j+6]] for the stride-2 analysis loop.
inline __m256d load_even_stride2(const double* p) {
    const __m256d a = _mm256_loadu_pd(p);
    const __m256d b = _mm256_loadu_pd(p + 4);
    // unpacklo: [a0, b0, a2, b2]; permute 0xD8 reorders to [a0, a2, b0, b2].
    return _mm256_permute4x64_pd(_mm256_unpacklo_pd(a, b), 0xD8);
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void correlate_decim2_avx2(const double* ext, const double* taps_rev, size_t ntaps,
                           double* out, size_t nout) {
    size_t m = 0;
    for (; m + 4 <= nout; m += 4) {
        __m256d acc = _mm256_setzero_pd();
        const double* base = ext + 2 * m;
        for (size_t u = 0; u < ntaps; ++u)
            acc = _mm256_fmadd_pd(_mm256_set1_pd(taps_rev[u]), load_even_stride2(base + u), acc);
        _mm256_storeu_pd(out + m, acc);
    }
    for (; m < nout; ++m) {
        double acc = 0.0;
        const double* base = ext + 2 * m;
        for (size_t u = 0; u < ntaps; ++u) acc += taps_rev[u] * base[u];
        out[m] = acc;
    }
}

void correlate_accum_avx2(const double* ext, const double* taps_rev, size_t ntaps,
                          double* out, size_t nout) {
    size_t i = 0;
    for (; i + 4 <= nout; i += 4) {
        __m256d acc = _mm256_loadu_pd(out + i);
        for (size_t u = 0; u < ntaps; ++u)
            acc = _mm256_fmadd_pd(_mm256_set1_pd(taps_rev[u]), _mm256_loadu_pd(ext + i + u), acc);
        _mm256_storeu_pd(out + i, acc);
    }
    for (; i < nout; ++i) {
        double acc = 0.0;
        for (size_t u = 0; u < ntaps; ++u) acc += taps_rev[u] * ext[i + u];
        out[i] += acc;
    }
}

void axpy_avx2(double a, const double* x, double* y, size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) y[i] += a * x[i];
}

double dot_avx2(const double* x, const double* y, size_t n) {
    __m256d acc = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

double mean_abs_avx2(const double* x, size_t n) {
    if (n == 0) return 0.0;
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    __m256d acc = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(x + i)));
    double s = hsum(acc);
    for (; i < n; ++i) s += std::abs(x[i]);
    return s / static_cast<double>(n);
}

double sum_squares_avx2(const double* x, size_t n) {
    __m256d acc = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i] * x[i];
    return s;
}

}  // namespace

const KernelTable* avx2_table_impl() {
    static const KernelTable t{
        "avx2",
        correlate_decim2_avx2,
        correlate_accum_avx2,
        axpy_avx2,
        dot_avx2,
        mean_abs_avx2,
        sum_squares_avx2,
    };
    return &t;
}

}  // namespace uwu::kernels

#else

namespace uwu::kernels {
const KernelTable* avx2_table_impl() { return nullptr; }
}  // namespace uwu::kernels

#endif
