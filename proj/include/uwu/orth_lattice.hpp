#pragma once

#include "uwu/filter_bank.hpp"

namespace uwu {

/// Analysis pair from the rotation cascade
///   [H0; H1] = diag(1,-1) R_K L(z^2) ... R_1 L(z^2) R_0 [1; z^-1],
/// synthesis attached through the alias-cancellation relations. Chain gain 1,
/// delay 2K+1.
FilterBank synth_orth(const OrthLatticeParams& params);

DenseTaps synth_orth_dense(const OrthLatticeParams& params);

/// Cascade with R_stage replaced by dR/dtheta: the exact tap derivative
/// with respect to angles[stage], on the dense layout.
DenseTaps synth_orth_dense_grad(const OrthLatticeParams& params, int stage);

struct OrthSynthesisSet {
    FirFilter h1, f0, f1;
};

/// Order flip / sign alternating flip / alternating signs, for even tap
/// count only:
///   f0(n) = h0(N-1-n),  h1(n) = (-1)^n h0(N-1-n),  f1(n) = -(-1)^n h0(n).
OrthSynthesisSet derive_orth_synthesis(const FirFilter& h0);

/// max over k != 0 of |sum_n h0(n) h0(n-2k)|, and |sum h0(n)^2 - 1|.
double check_double_shift_orthogonality(const FirFilter& h0);

/// |sum h0 - sqrt(2)|; reported only, never enforced.
double dc_gain_deviation(const FirFilter& h0);

/// Recover rotation angles by peeling one stage per recursion step. Stages
/// K..1 resolve the arctangent branch to (-pi/2, pi/2], pushing any sign
/// flip into the remaining cascade; the final stage absorbs it with a full
/// atan2 branch so resynthesis reproduces the input sign.
/// Throws "not orthogonal" / "factorization breakdown".
OrthLatticeParams factor_orth(const FirFilter& h0, double tol);

// Lattice stage builders (shared with tests that rebuild Eq-level cascades).
PolyMatrix2x2 rotation_stage(double theta);

}  // namespace uwu
