#pragma once

#include <span>
#include <utility>
#include <vector>

#include "uwu/filter_bank.hpp"

namespace uwu {

/// Row-major 2D plane of real samples.
struct Plane {
    int height = 0;
    int width = 0;
    std::vector<double> data;

    Plane() = default;
    Plane(int h, int w) : height(h), width(w), data(static_cast<size_t>(h) * static_cast<size_t>(w), 0.0) {}

    double& at(int r, int c) { return data[static_cast<size_t>(r) * static_cast<size_t>(width) + static_cast<size_t>(c)]; }
    double at(int r, int c) const { return data[static_cast<size_t>(r) * static_cast<size_t>(width) + static_cast<size_t>(c)]; }
    size_t size() const { return data.size(); }
};

/// Half-resolution subbands of one separable analysis step. HL is high-pass
/// along rows / low-pass along columns. orig_* remember the pre-padding
/// input size so synthesis can crop back.
struct SubbandSet {
    Plane ll, hl, lh, hh;
    int orig_height = 0;
    int orig_width = 0;
};

// Boundary handling is periodic (circular) and downsampling keeps the
// even-indexed outputs; both conventions are fixed project-wide.

/// Circular convolution with h0/h1 followed by keep-every-second-sample.
/// Requires nonempty signal of even length.
std::pair<std::vector<double>, std::vector<double>> analyze_1d(std::span<const double> signal,
                                                               const FilterBank& bank);

/// Upsample-by-2, filter with f0/f1, sum, then compensate the bank's
/// reported (gain, delay) so the analyzed input is reproduced.
std::vector<double> synthesize_1d(std::span<const double> low, std::span<const double> high,
                                  const FilterBank& bank);

/// Separable analysis: rows first, then columns. Odd sizes are padded by
/// repeating the last row/column; subbands are ceil(h/2) x ceil(w/2).
SubbandSet analyze_2d(const Plane& plane, const FilterBank& bank);

Plane synthesize_2d(const SubbandSet& subbands, const FilterBank& bank);

/// Separable analysis with explicit filters per axis; building block for
/// parameter gradients (a derivative filter replaces one axis at a time).
SubbandSet analyze_2d_filters(const Plane& plane, const FirFilter& row_lo, const FirFilter& row_hi,
                              const FirFilter& col_lo, const FirFilter& col_hi);

Plane transpose(const Plane& plane);

}  // namespace uwu
