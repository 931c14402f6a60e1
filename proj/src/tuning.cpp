#include "uwu/tuning.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "uwu/biorth_lattice.hpp"
#include "uwu/kernels.hpp"
#include "uwu/lifting.hpp"
#include "uwu/orth_lattice.hpp"

namespace uwu {

namespace {

ParamGradient grad_orth(const OrthLatticeParams& p) {
    ParamGradient g;
    for (size_t i = 0; i < p.angles.size(); ++i) {
        DenseTaps d = synth_orth_dense_grad(p, static_cast<int>(i));
        g.dh0.push_back(std::move(d.h0));
        g.dh1.push_back(std::move(d.h1));
    }
    return g;
}

ParamGradient grad_biorth(const BiorthLatticeParams& p) {
    ParamGradient g;
    for (size_t i = 0; i < p.ks.size(); ++i) {
        DenseTaps d = synth_biorth_dense_grad(p, static_cast<int>(i));
        g.dh0.push_back(std::move(d.h0));
        g.dh1.push_back(std::move(d.h1));
    }
    return g;
}

ParamGradient grad_lifting(const LiftingParams& p) {
    // h1 is linear in every a_k: d h1/da_k = z^-2(N-k) (z^-4k - 1) H0_base.
    std::vector<double> base0, base1;
    lifting_base_taps(base0, base1);
    const size_t n = p.as.size();
    ParamGradient g;
    for (size_t k = 1; k <= n; ++k) {
        std::vector<double> dh1(4 * n + 2, 0.0);
        const size_t off = 2 * (n - k);
        for (size_t i = 0; i < 2; ++i) {
            dh1[off + i] -= base0[i];
            dh1[off + 4 * k + i] += base0[i];
        }
        g.dh0.emplace_back(2, 0.0);
        g.dh1.push_back(std::move(dh1));
    }
    return g;
}

double block_error(const std::vector<double>& analytic, const std::vector<double>& fd) {
    double scale = 1e-8;
    for (double v : analytic) scale = std::max(scale, std::abs(v));
    double err = 0.0;
    for (size_t i = 0; i < analytic.size(); ++i) err = std::max(err, std::abs(analytic[i] - fd[i]));
    return err / scale;
}

struct ObjectiveEval {
    double value = 0.0;
    std::vector<double> grad;
};

double plane_dot(const Plane& a, const Plane& b) {
    return kernels::active().dot(a.data.data(), b.data.data(), a.size());
}

Plane plane_sum(const Plane& a, const Plane& b) {
    Plane out = a;
    for (size_t i = 0; i < out.size(); ++i) out.data[i] += b.data[i];
    return out;
}

ObjectiveEval eval_stopband(const LatticeParams& params, const TuneOptions& opts) {
    const DenseTaps taps = synth_dense(params);
    const ParamGradient pg = grad_filters(params);
    ObjectiveEval out;
    out.value = stopband_energy(FirFilter::from_taps(taps.h0), opts.omega_s, opts.num_samples);
    const std::vector<double> dtap = stopband_energy_tap_gradient(taps.h0, opts.omega_s, opts.num_samples);
    out.grad.resize(pg.dh0.size(), 0.0);
    for (size_t p = 0; p < pg.dh0.size(); ++p) {
        double acc = 0.0;
        for (size_t t = 0; t < dtap.size(); ++t) acc += dtap[t] * pg.dh0[p][t];
        out.grad[p] = acc;
    }
    return out;
}

ObjectiveEval eval_ll_compaction(const LatticeParams& params, const TuneOptions& opts) {
    if (opts.plane == nullptr)
        throw std::invalid_argument("tune: ll-compaction requires a plane");
    const DenseTaps taps = synth_dense(params);
    const ParamGradient pg = grad_filters(params);
    const FirFilter lo = FirFilter::from_taps(taps.h0);
    const FirFilter hi = FirFilter::from_taps(taps.h1);
    const SubbandSet s = analyze_2d_filters(*opts.plane, lo, hi, lo, hi);
    const Plane* bands[4] = {&s.ll, &s.hl, &s.lh, &s.hh};

    double energy[4];
    double total = 0.0;
    for (int i = 0; i < 4; ++i) {
        energy[i] = kernels::active().sum_squares(bands[i]->data.data(), bands[i]->size());
        total += energy[i];
    }
    ObjectiveEval out;
    out.value = total > 0.0 ? energy[0] / total : 0.0;
    out.grad.resize(pg.dh0.size(), 0.0);
    if (total <= 0.0) return out;

    for (size_t p = 0; p < pg.dh0.size(); ++p) {
        const FirFilter dlo = FirFilter::from_taps(pg.dh0[p]);
        const FirFilter dhi = FirFilter::from_taps(pg.dh1[p]);
        const SubbandSet drow = analyze_2d_filters(*opts.plane, dlo, dhi, lo, hi);
        const SubbandSet dcol = analyze_2d_filters(*opts.plane, lo, hi, dlo, dhi);
        const Plane d_bands[4] = {plane_sum(drow.ll, dcol.ll), plane_sum(drow.hl, dcol.hl),
                                  plane_sum(drow.lh, dcol.lh), plane_sum(drow.hh, dcol.hh)};
        double denergy[4];
        double dtotal = 0.0;
        for (int i = 0; i < 4; ++i) {
            denergy[i] = 2.0 * plane_dot(*bands[i], d_bands[i]);
            dtotal += denergy[i];
        }
        out.grad[p] = (denergy[0] * total - energy[0] * dtotal) / (total * total);
    }
    return out;
}

ObjectiveEval evaluate(const LatticeParams& params, Objective objective, const TuneOptions& opts) {
    switch (objective) {
        case Objective::stopband_energy: return eval_stopband(params, opts);
        case Objective::ll_compaction: return eval_ll_compaction(params, opts);
    }
    throw std::logic_error("unknown objective");
}

}  // namespace

ParamGradient grad_filters(const LatticeParams& params) {
    return std::visit(
        [](const auto& p) -> ParamGradient {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, OrthLatticeParams>) return grad_orth(p);
            else if constexpr (std::is_same_v<T, BiorthLatticeParams>) return grad_biorth(p);
            else return grad_lifting(p);
        },
        params);
}

double finite_diff_check(const LatticeParams& params, double step) {
    if (!(step > 0.0 && step <= 1e-2))
        throw std::invalid_argument("finite_diff_check: step must be in (0, 1e-2]");
    const ParamGradient analytic = grad_filters(params);
    const std::vector<double> base = param_values(params);
    double worst = 0.0;
    for (size_t p = 0; p < base.size(); ++p) {
        std::vector<double> plus = base;
        std::vector<double> minus = base;
        plus[p] += step;
        minus[p] -= step;
        const DenseTaps tp = synth_dense(with_param_values(params, plus));
        const DenseTaps tm = synth_dense(with_param_values(params, minus));
        std::vector<double> fd0(tp.h0.size());
        std::vector<double> fd1(tp.h1.size());
        for (size_t i = 0; i < fd0.size(); ++i) fd0[i] = (tp.h0[i] - tm.h0[i]) / (2.0 * step);
        for (size_t i = 0; i < fd1.size(); ++i) fd1[i] = (tp.h1[i] - tm.h1[i]) / (2.0 * step);
        worst = std::max(worst, block_error(analytic.dh0[p], fd0));
        worst = std::max(worst, block_error(analytic.dh1[p], fd1));
    }
    return worst;
}

double stopband_energy(const FirFilter& h0, double omega_s, int num_samples) {
    if (!(omega_s > 0.0 && omega_s < std::numbers::pi))
        throw std::invalid_argument("stopband_energy: omega_s must lie in (0, pi)");
    if (num_samples < 2) throw std::invalid_argument("stopband_energy: num_samples must be >= 2");
    const double h = (std::numbers::pi - omega_s) / static_cast<double>(num_samples - 1);
    double acc = 0.0;
    for (int j = 0; j < num_samples; ++j) {
        const double w = omega_s + h * static_cast<double>(j);
        const double weight = (j == 0 || j == num_samples - 1) ? 0.5 * h : h;
        acc += weight * std::norm(dtft_at(h0, w));
    }
    return acc;
}

std::vector<double> stopband_energy_tap_gradient(const std::vector<double>& dense_h0,
                                                 double omega_s, int num_samples) {
    const FirFilter h0 = FirFilter::from_taps(dense_h0, 0);
    const double h = (std::numbers::pi - omega_s) / static_cast<double>(num_samples - 1);
    std::vector<double> grad(dense_h0.size(), 0.0);
    for (int j = 0; j < num_samples; ++j) {
        const double w = omega_s + h * static_cast<double>(j);
        const double weight = (j == 0 || j == num_samples - 1) ? 0.5 * h : h;
        const std::complex<double> resp = dtft_at(h0, w);
        for (size_t t = 0; t < grad.size(); ++t) {
            const double phase = w * static_cast<double>(t);
            grad[t] += weight * 2.0 * (resp.real() * std::cos(phase) - resp.imag() * std::sin(phase));
        }
    }
    return grad;
}

TuneReport tune(const LatticeParams& start, Objective objective, const TuneOptions& opts) {
    if (opts.lr < 0.0) throw std::invalid_argument("tune: learning rate must be >= 0");
    if (opts.iters < 1) throw std::invalid_argument("tune: iteration count must be >= 1");
    const double direction = objective == Objective::ll_compaction ? 1.0 : -1.0;
    const bool clamp = std::holds_alternative<BiorthLatticeParams>(start);

    TuneReport report;
    LatticeParams current = start;
    for (int it = 0; it < opts.iters; ++it) {
        const ObjectiveEval eval = evaluate(current, objective, opts);
        if (!std::isfinite(eval.value)) {
            report.diverged = true;
            report.final_params = current;
            report.final_objective = report.trace.empty() ? eval.value : report.trace.back();
            return report;
        }
        report.trace.push_back(eval.value);
        std::vector<double> values = param_values(current);
        for (size_t i = 0; i < values.size(); ++i) {
            values[i] += direction * opts.lr * eval.grad[i];
            if (clamp) values[i] = std::clamp(values[i], -0.99, 0.99);
        }
        current = with_param_values(current, std::move(values));
        ++report.iterations;
    }
    const ObjectiveEval last = evaluate(current, objective, opts);
    if (!std::isfinite(last.value)) {
        report.diverged = true;
    } else {
        report.trace.push_back(last.value);
    }
    report.final_params = current;
    report.final_objective = report.trace.empty() ? last.value : report.trace.back();
    return report;
}

}  // namespace uwu
