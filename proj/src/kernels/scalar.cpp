#include "uwu/kernels.hpp"

#include <cmath>

namespace uwu::kernels {
namespace {

void correlate_decim2_scalar(const double* ext, const double* taps_rev, size_t ntaps,
                             double* out, size_t nout) {
    for (size_t m = 0; m < nout; ++m) {
        double acc = 0.0;
        const double* base = ext + 2 * m;
        for (size_t u = 0; u < ntaps; ++u) acc += taps_rev[u] * base[u];
        out[m] = acc;
    }
}

void correlate_accum_scalar(const double* ext, const double* taps_rev, size_t ntaps,
                            double* out, size_t nout) {
    for (size_t i = 0; i < nout; ++i) {
        double acc = 0.0;
        const double* base = ext + i;
        for (size_t u = 0; u < ntaps; ++u) acc += taps_rev[u] * base[u];
        out[i] += acc;
    }
}

void axpy_scalar(double a, const double* x, double* y, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double dot_scalar(const double* x, const double* y, size_t n) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

double mean_abs_scalar(const double* x, size_t n) {
    if (n == 0) return 0.0;
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += std::abs(x[i]);
    return acc / static_cast<double>(n);
}

double sum_squares_scalar(const double* x, size_t n) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += x[i] * x[i];
    return acc;
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable t{
        "scalar",
        correlate_decim2_scalar,
        correlate_accum_scalar,
        axpy_scalar,
        dot_scalar,
        mean_abs_scalar,
        sum_squares_scalar,
    };
    return t;
}

}  // namespace uwu::kernels
