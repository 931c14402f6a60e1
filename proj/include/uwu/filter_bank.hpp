#pragma once

#include <string>
#include <variant>
#include <vector>

#include "uwu/fir.hpp"

namespace uwu {

enum class Family { orthogonal, biorthogonal_lattice, lifting };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

/// Rotation angles theta_0..theta_K (radians). Tap count 2(K+1).
struct OrthLatticeParams {
    std::vector<double> angles;
    void validate() const;
};

/// Lattice coefficients k_1..k_N. Tap count 2N; |k_m| = 1 is singular.
struct BiorthLatticeParams {
    std::vector<double> ks;
    void validate() const;
};

/// Lifting coefficients a_1..a_N on a Haar/Bior1.1 base (identical 2-tap
/// base, normalized to 1/sqrt(2)).
struct LiftingParams {
    enum class Base { haar, bior1_1 };
    std::vector<double> as;
    Base base = Base::haar;
    void validate() const;  // warns on N > 8
};

using LatticeParams = std::variant<OrthLatticeParams, BiorthLatticeParams, LiftingParams>;

/// Two-channel analysis/synthesis set. The analysis->synthesis cascade
/// applies gain * z^-delay to the input; synthesize_* compensates both.
struct FilterBank {
    FirFilter h0, h1, f0, f1;
    Family family = Family::orthogonal;
    LatticeParams params;
    double gain = 1.0;
    int delay = 0;
};

/// Structural (untrimmed) analysis taps, both starting at delay 0. This is
/// the layout parameter gradients are expressed on: its length depends only
/// on the parameter count, never on which taps happen to vanish.
struct DenseTaps {
    std::vector<double> h0, h1;
};

FilterBank synth_bank(const LatticeParams& params);
DenseTaps synth_dense(const LatticeParams& params);

Family family_of(const LatticeParams& params);
size_t param_count(const LatticeParams& params);
std::vector<double> param_values(const LatticeParams& params);
LatticeParams with_param_values(const LatticeParams& like, std::vector<double> values);

}  // namespace uwu
