#pragma once

#include <utility>

#include "uwu/filter_bank.hpp"

namespace uwu {

/// P_k(z) = -a_k + a_k z^-2k. The cascade applies it as P_k(z^2).
FirFilter lifting_step_poly(int k, double a_k);

/// Recursive construction from the Haar base:
///   H0^k = H0^(k-1)
///   H1^k = -a_k H0^(k-1) + z^-2 H1^(k-1) + a_k z^-4k H0^(k-1).
/// h0 stays the 2-tap base for every parameter value; h1 grows to 4N+2
/// structural taps. Synthesis filters come from reversing the cascade one
/// unit-determinant step at a time; chain gain 1, delay 2N+1.
FilterBank synth_lifting(const LiftingParams& params);

DenseTaps synth_lifting_dense(const LiftingParams& params);

/// Structural tap counts (len_h0, len_h1) after N steps with generic
/// nonzero coefficients, from the recursion's maximal delay.
std::pair<int, int> lifting_tap_count(int n_steps);

/// Base two-tap pair shared by Haar and Bior1.1 (1/sqrt(2) normalization).
void lifting_base_taps(std::vector<double>& h0, std::vector<double>& h1);

/// [1 0; P_k(z^2) 1] * diag(1, z^-2), the filter-level cascade factor.
PolyMatrix2x2 lifting_stage(int k, double a_k);

}  // namespace uwu
