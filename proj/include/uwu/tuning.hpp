#pragma once

#include <vector>

#include "uwu/filter_bank.hpp"
#include "uwu/transform.hpp"

namespace uwu {

/// Exact tap derivatives on the dense layout of synth_dense: one gradient
/// vector per tunable parameter, for h0 and h1.
struct ParamGradient {
    std::vector<std::vector<double>> dh0;  // [param][tap]
    std::vector<std::vector<double>> dh1;
};

ParamGradient grad_filters(const LatticeParams& params);

/// Central differences of synth_dense against grad_filters. Returns the max
/// over parameters and taps of |analytic - fd| / max(1e-8, ||analytic||_inf),
/// normalized per (parameter, filter) gradient vector.
double finite_diff_check(const LatticeParams& params, double step);

/// Trapezoidal approximation of the integral of |H0(e^jw)|^2 over
/// [omega_s, pi], sampled at num_samples uniform points of that interval.
double stopband_energy(const FirFilter& h0, double omega_s, int num_samples);

/// d(stopband_energy)/d(tap) for taps laid out densely from delay 0.
std::vector<double> stopband_energy_tap_gradient(const std::vector<double>& dense_h0,
                                                 double omega_s, int num_samples);

enum class Objective {
    stopband_energy,   // minimized
    ll_compaction,     // LL-band energy fraction of a supplied plane, maximized
};

struct TuneOptions {
    double lr = 0.1;
    int iters = 100;
    double omega_s = 1.5707963267948966;  // pi/2
    int num_samples = 512;
    const Plane* plane = nullptr;  // required for ll_compaction
};

struct TuneReport {
    int iterations = 0;                // gradient steps completed
    std::vector<double> trace;         // objective per iteration + final value
    LatticeParams final_params;
    double final_objective = 0.0;
    bool diverged = false;
};

/// Plain gradient descent (ascent for maximized objectives) through the
/// analytic tap gradients. Biorthogonal coefficients are clamped to
/// [-0.99, 0.99] after every step. A non-finite objective aborts with the
/// partial trace and diverged = true.
TuneReport tune(const LatticeParams& start, Objective objective, const TuneOptions& opts);

}  // namespace uwu
