#pragma once

#include "uwu/filter_bank.hpp"

namespace uwu {

/// Type-A biorthogonal analysis pair
///   [H0; H1] = [1 1; 1 -1] S_N L(z^2) ... S_2 L(z^2) S_1 [1; z^-1],
/// S_m = [1 k_m; k_m 1]. h0 comes out symmetric and h1 antisymmetric, both
/// of order 2N-1. Synthesis is attached by polyphase inversion; the chain
/// gain is -2 prod(1 - k_m^2) and the delay 2N-1.
/// Throws "singular lattice stage" when any |k_m| is within 1e-12 of 1.
FilterBank synth_biorth(const BiorthLatticeParams& params);

DenseTaps synth_biorth_dense(const BiorthLatticeParams& params);

/// Cascade with S_stage replaced by dS/dk = [0 1; 1 0]: the exact tap
/// derivative with respect to ks[stage], on the dense layout.
DenseTaps synth_biorth_dense_grad(const BiorthLatticeParams& params, int stage);

/// Cascade output before the final [1 1; 1 -1] butterfly.
struct MirrorPair {
    std::vector<double> t, u;  // dense, delay 0, length 2N
};
MirrorPair biorth_cascade_pair(const BiorthLatticeParams& params);

/// Max tap deviation of u from the delayed time-reversal z^-(2N-1) t(z^-1).
double mip_deviation(const MirrorPair& pair);
double check_mirror_image_pair(const BiorthLatticeParams& params);

struct BiorthSynthesis {
    FirFilter f0, f1;
    double gain = 1.0;
    int delay = 0;
};

/// Invert the polyphase matrix of (h0, h1): R = adj(E) up to the monomial
/// determinant alpha z^-m, giving FIR synthesis filters and the (gain,
/// delay) = (alpha, 2m+1) the full chain applies.
/// Throws "not perfect-reconstruction" when the determinant is not a pure
/// monomial, "singular polyphase" when it is numerically zero.
BiorthSynthesis derive_biorth_synthesis(const FirFilter& h0, const FirFilter& h1);

/// Polyphase split H(z) = E0(z^2) + z^-1 E1(z^2).
void polyphase_split(const FirFilter& h, FirFilter& even, FirFilter& odd);

PolyMatrix2x2 biorth_stage(double k);

}  // namespace uwu
