#pragma once

#include <array>

#include "uwu/filter_bank.hpp"
#include "uwu/transform.hpp"

namespace uwu {

/// Affine map from the per-subband statistics (mean absolute value, ordered
/// LL/HL/LH/HH) to four logits; softmax of the logits gives the fusion
/// weights.
struct AttentionHeadParams {
    std::array<std::array<double, 4>, 4> weight{};  // zero-initialized => uniform weights
    std::array<double, 4> bias{};
};

std::array<double, 4> attention_weights(const SubbandSet& subbands, const AttentionHeadParams& head);

/// Pooling replacement: analyze, fuse the four subbands with the attention
/// weights. Output is ceil(h/2) x ceil(w/2), like a stride-2 pool.
Plane uwu_downsample(const Plane& plane, const FilterBank& bank, const AttentionHeadParams& head);

/// Demonstration loss: sum of squared output samples.
double uwu_demo_loss(const Plane& plane, const FilterBank& bank, const AttentionHeadParams& head);

struct UwuGradients {
    std::vector<double> bank_params;                  // one entry per lattice parameter
    std::array<std::array<double, 4>, 4> weight{};
    std::array<double, 4> bias{};
};

/// Exact chain-rule gradients of uwu_demo_loss through the fusion, the
/// softmax, the subband statistics and the analysis filters.
UwuGradients grad_uwu(const Plane& plane, const FilterBank& bank, const AttentionHeadParams& head);

}  // namespace uwu
