#pragma once

#include <cstddef>

namespace uwu::kernels {

// Data-parallel inner loops behind the transform and fusion code paths.
// A scalar reference implementation always exists; an AVX2/FMA variant is
// selected at runtime when the CPU supports it. The two are equivalence
// tested against each other.
struct KernelTable {
    const char* name;

    // out[m] = sum_u taps_rev[u] * ext[2m + u], m = 0..nout-1.
    // ext must hold at least 2*(nout-1) + ntaps values.
    void (*correlate_decim2)(const double* ext, const double* taps_rev, size_t ntaps,
                             double* out, size_t nout);

    // out[i] += sum_u taps_rev[u] * ext[i + u], i = 0..nout-1.
    // ext must hold at least (nout-1) + ntaps values.
    void (*correlate_accum)(const double* ext, const double* taps_rev, size_t ntaps,
                            double* out, size_t nout);

    // y[i] += a * x[i]
    void (*axpy)(double a, const double* x, double* y, size_t n);

    double (*dot)(const double* x, const double* y, size_t n);
    double (*mean_abs)(const double* x, size_t n);
    double (*sum_squares)(const double* x, size_t n);
};

const KernelTable& scalar_table();

/// AVX2+FMA variant, or nullptr when the build or the CPU lacks support.
const KernelTable* avx2_table();

/// Table in use: auto-detected on first call. The environment variable
/// UWU_KERNELS=scalar|avx2 overrides detection (unavailable names fall
/// back to scalar).
const KernelTable& active();

/// Test hook: pin a specific table (not thread-safe against in-flight work).
void force(const KernelTable& table);
void reset_auto();

}  // namespace uwu::kernels
