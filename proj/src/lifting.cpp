#include "uwu/lifting.hpp"

#include <cmath>
#include <stdexcept>

namespace uwu {

void lifting_base_taps(std::vector<double>& h0, std::vector<double>& h1) {
    const double s = 1.0 / std::sqrt(2.0);
    h0 = {s, s};
    h1 = {s, -s};
}

FirFilter lifting_step_poly(int k, double a_k) {
    if (k < 1) throw std::invalid_argument("lifting step index must be >= 1");
    if (a_k == 0.0) return FirFilter::zero();
    std::vector<double> taps(static_cast<size_t>(2 * k + 1), 0.0);
    taps.front() = -a_k;
    taps.back() = a_k;
    return FirFilter::from_taps(std::move(taps), 0);
}

DenseTaps synth_lifting_dense(const LiftingParams& params) {
    params.validate();
    DenseTaps out;
    lifting_base_taps(out.h0, out.h1);
    for (size_t step = 1; step <= params.as.size(); ++step) {
        const double a = params.as[step - 1];
        std::vector<double> next(static_cast<size_t>(4 * step + 2), 0.0);
        for (size_t i = 0; i < out.h1.size(); ++i) next[i + 2] = out.h1[i];
        for (size_t i = 0; i < 2; ++i) {
            next[i] -= a * out.h0[i];
            next[4 * step + i] += a * out.h0[i];
        }
        out.h1 = std::move(next);
    }
    return out;
}

std::pair<int, int> lifting_tap_count(int n_steps) {
    if (n_steps < 1) throw std::invalid_argument("lifting: step count must be >= 1");
    LiftingParams probe;
    probe.as.assign(static_cast<size_t>(n_steps), 1.0);
    DenseTaps taps = synth_lifting_dense(probe);
    return {static_cast<int>(taps.h0.size()), static_cast<int>(taps.h1.size())};
}

PolyMatrix2x2 lifting_stage(int k, double a_k) {
    // [1 0; P_k(z^2) 1] * diag(1, z^-2)
    PolyMatrix2x2 r;
    r.m[0][0] = FirFilter::identity();
    r.m[0][1] = FirFilter::zero();
    FirFilter pk_z2 = FirFilter::zero();
    if (a_k != 0.0) {
        std::vector<double> taps(static_cast<size_t>(4 * k + 1), 0.0);
        taps.front() = -a_k;
        taps.back() = a_k;
        pk_z2 = FirFilter::from_taps(std::move(taps), 0);
    }
    r.m[1][0] = pk_z2;
    r.m[1][1] = FirFilter::from_taps({1.0}, 2);
    return r;
}

namespace {

// Synthesis by reversing the cascade: R(y) = E_base^-1 G_1(y) ... G_N(y)
// with G_k(y) = [y^-1 0; -P_k(y) 1], each step's y^-1 making the inverse
// causal; [F0 F1] = [z^-1 1] R(z^2). Chain: gain 1, delay 2N+1.
PolyMatrix2x2 lifting_synthesis_matrix(const LiftingParams& params) {
    const double s = 1.0 / std::sqrt(2.0);
    PolyMatrix2x2 r;  // E_base^-1 equals E_base for the Haar butterfly
    r.m[0][0] = FirFilter::from_taps({s});
    r.m[0][1] = FirFilter::from_taps({s});
    r.m[1][0] = FirFilter::from_taps({s});
    r.m[1][1] = FirFilter::from_taps({-s});
    for (size_t step = 1; step <= params.as.size(); ++step) {
        const double a = params.as[step - 1];
        PolyMatrix2x2 g;
        g.m[0][0] = FirFilter::from_taps({1.0}, 1);
        g.m[0][1] = FirFilter::zero();
        FirFilter minus_pk = FirFilter::zero();
        if (a != 0.0) {
            std::vector<double> taps(static_cast<size_t>(2 * step + 1), 0.0);
            taps.front() = a;
            taps.back() = -a;
            minus_pk = FirFilter::from_taps(std::move(taps), 0);
        }
        g.m[1][0] = minus_pk;
        g.m[1][1] = FirFilter::identity();
        r = matmul(r, g);
    }
    return r;
}

FirFilter upsample2(const FirFilter& f, int extra) {
    if (f.is_zero()) return FirFilter::zero();
    std::vector<double> taps(static_cast<size_t>(2 * (f.length() - 1) + 1), 0.0);
    for (int i = 0; i < f.length(); ++i) taps[static_cast<size_t>(2 * i)] = f.coeffs[static_cast<size_t>(i)];
    return FirFilter::from_taps(std::move(taps), 2 * f.delay + extra);
}

}  // namespace

FilterBank synth_lifting(const LiftingParams& params) {
    DenseTaps taps = synth_lifting_dense(params);
    FilterBank bank;
    bank.h0 = FirFilter::from_taps(taps.h0);
    bank.h1 = FirFilter::from_taps(taps.h1);
    const PolyMatrix2x2 r = lifting_synthesis_matrix(params);
    bank.f0 = poly_add(upsample2(r.m[0][0], 1), upsample2(r.m[1][0], 0));
    bank.f1 = poly_add(upsample2(r.m[0][1], 1), upsample2(r.m[1][1], 0));
    bank.gain = 1.0;
    bank.delay = 2 * static_cast<int>(params.as.size()) + 1;
    bank.family = Family::lifting;
    bank.params = params;
    return bank;
}

}  // namespace uwu
