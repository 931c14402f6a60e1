#include "uwu/fusion.hpp"

#include <cmath>

#include "uwu/kernels.hpp"
#include "uwu/tuning.hpp"

namespace uwu {

namespace {

std::array<const Plane*, 4> band_ptrs(const SubbandSet& s) {
    return {&s.ll, &s.hl, &s.lh, &s.hh};
}

std::array<double, 4> band_stats(const SubbandSet& s) {
    std::array<double, 4> stats{};
    const auto bands = band_ptrs(s);
    for (int i = 0; i < 4; ++i)
        stats[static_cast<size_t>(i)] = kernels::active().mean_abs(bands[static_cast<size_t>(i)]->data.data(),
                                                                   bands[static_cast<size_t>(i)]->size());
    return stats;
}

std::array<double, 4> softmax4(const std::array<double, 4>& logits) {
    double m = logits[0];
    for (double v : logits) m = std::max(m, v);
    std::array<double, 4> e{};
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        e[static_cast<size_t>(i)] = std::exp(logits[static_cast<size_t>(i)] - m);
        sum += e[static_cast<size_t>(i)];
    }
    for (double& v : e) v /= sum;
    return e;
}

std::array<double, 4> head_logits(const AttentionHeadParams& head, const std::array<double, 4>& stats) {
    std::array<double, 4> logits = head.bias;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            logits[static_cast<size_t>(i)] += head.weight[static_cast<size_t>(i)][static_cast<size_t>(j)] * stats[static_cast<size_t>(j)];
    return logits;
}

Plane fuse(const SubbandSet& s, const std::array<double, 4>& w) {
    Plane out(s.ll.height, s.ll.width);
    const auto bands = band_ptrs(s);
    for (int i = 0; i < 4; ++i)
        kernels::active().axpy(w[static_cast<size_t>(i)], bands[static_cast<size_t>(i)]->data.data(),
                               out.data.data(), out.size());
    return out;
}

}  // namespace

std::array<double, 4> attention_weights(const SubbandSet& subbands, const AttentionHeadParams& head) {
    return softmax4(head_logits(head, band_stats(subbands)));
}

Plane uwu_downsample(const Plane& plane, const FilterBank& bank, const AttentionHeadParams& head) {
    const SubbandSet s = analyze_2d(plane, bank);
    return fuse(s, attention_weights(s, head));
}

double uwu_demo_loss(const Plane& plane, const FilterBank& bank, const AttentionHeadParams& head) {
    const Plane out = uwu_downsample(plane, bank, head);
    return kernels::active().sum_squares(out.data.data(), out.size());
}

UwuGradients grad_uwu(const Plane& plane, const FilterBank& bank, const AttentionHeadParams& head) {
    const SubbandSet s = analyze_2d(plane, bank);
    const auto bands = band_ptrs(s);
    const std::array<double, 4> stats = band_stats(s);
    const std::array<double, 4> w = softmax4(head_logits(head, stats));
    const Plane out = fuse(s, w);

    // dL/dw_i = 2 <out, S_i>; softmax backward gives the logit gradient.
    std::array<double, 4> dl_dw{};
    for (int i = 0; i < 4; ++i)
        dl_dw[static_cast<size_t>(i)] =
            2.0 * kernels::active().dot(out.data.data(), bands[static_cast<size_t>(i)]->data.data(), out.size());
    double mix = 0.0;
    for (int i = 0; i < 4; ++i) mix += w[static_cast<size_t>(i)] * dl_dw[static_cast<size_t>(i)];
    std::array<double, 4> dl_dlogit{};
    for (int k = 0; k < 4; ++k)
        dl_dlogit[static_cast<size_t>(k)] = w[static_cast<size_t>(k)] * (dl_dw[static_cast<size_t>(k)] - mix);

    UwuGradients g;
    for (int i = 0; i < 4; ++i) {
        g.bias[static_cast<size_t>(i)] = dl_dlogit[static_cast<size_t>(i)];
        for (int j = 0; j < 4; ++j)
            g.weight[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                dl_dlogit[static_cast<size_t>(i)] * stats[static_cast<size_t>(j)];
    }

    // Bank parameters: both the fused samples and the statistics move.
    const ParamGradient pg = grad_filters(bank.params);
    const size_t nparams = pg.dh0.size();
    g.bank_params.assign(nparams, 0.0);
    if (out.size() == 0) return g;
    const double npix = static_cast<double>(bands[0]->size());

    std::array<double, 4> dl_dstat{};
    for (int j = 0; j < 4; ++j) {
        double acc = 0.0;
        for (int k = 0; k < 4; ++k)
            acc += dl_dlogit[static_cast<size_t>(k)] * head.weight[static_cast<size_t>(k)][static_cast<size_t>(j)];
        dl_dstat[static_cast<size_t>(j)] = acc;
    }

    for (size_t p = 0; p < nparams; ++p) {
        const FirFilter dlo = FirFilter::from_taps(pg.dh0[p]);
        const FirFilter dhi = FirFilter::from_taps(pg.dh1[p]);
        const SubbandSet drow = analyze_2d_filters(plane, dlo, dhi, bank.h0, bank.h1);
        const SubbandSet dcol = analyze_2d_filters(plane, bank.h0, bank.h1, dlo, dhi);
        const std::array<const Plane*, 4> drow_bands = band_ptrs(drow);
        const std::array<const Plane*, 4> dcol_bands = band_ptrs(dcol);

        double acc = 0.0;
        for (int i = 0; i < 4; ++i) {
            const Plane& a = *drow_bands[static_cast<size_t>(i)];
            const Plane& b = *dcol_bands[static_cast<size_t>(i)];
            const Plane& band = *bands[static_cast<size_t>(i)];
            // fused-sample path
            double dot_out = 0.0;
            // statistic path: d stat_i = mean(sign(S_i) * dS_i)
            double dstat = 0.0;
            for (size_t t = 0; t < band.size(); ++t) {
                const double d = a.data[t] + b.data[t];
                dot_out += out.data[t] * d;
                const double sv = band.data[t];
                dstat += (sv > 0.0 ? d : (sv < 0.0 ? -d : 0.0));
            }
            acc += w[static_cast<size_t>(i)] * 2.0 * dot_out;
            acc += dl_dstat[static_cast<size_t>(i)] * (dstat / npix);
        }
        g.bank_params[p] = acc;
    }
    return g;
}

}  // namespace uwu
