#include "uwu/biorth_lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace uwu {

namespace {

// Dense cascade S_N L(z^2) ... S_1 applied to [1; z^-1]; stage `derivative_stage`
// (0-based) may be replaced by dS/dk = [0 1; 1 0].
void run_cascade(const std::vector<double>& ks, int derivative_stage,
                 std::vector<double>& p, std::vector<double>& q) {
    p.assign({1.0, 0.0});
    q.assign({0.0, 1.0});
    for (size_t m = 0; m < ks.size(); ++m) {
        if (m > 0) {
            p.push_back(0.0);
            p.push_back(0.0);
            q.insert(q.begin(), 2, 0.0);
        }
        const bool deriv = static_cast<int>(m) == derivative_stage;
        const double k = ks[m];
        for (size_t i = 0; i < p.size(); ++i) {
            const double pi_ = p[i];
            const double qi = q[i];
            if (deriv) {
                p[i] = qi;
                q[i] = pi_;
            } else {
                p[i] = pi_ + k * qi;
                q[i] = k * pi_ + qi;
            }
        }
    }
}

}  // namespace

MirrorPair biorth_cascade_pair(const BiorthLatticeParams& params) {
    params.validate();
    MirrorPair pair;
    run_cascade(params.ks, -1, pair.t, pair.u);
    return pair;
}

double mip_deviation(const MirrorPair& pair) {
    double dev = 0.0;
    const size_t n = pair.t.size();
    for (size_t i = 0; i < n; ++i) dev = std::max(dev, std::abs(pair.u[i] - pair.t[n - 1 - i]));
    return dev;
}

double check_mirror_image_pair(const BiorthLatticeParams& params) {
    return mip_deviation(biorth_cascade_pair(params));
}

DenseTaps synth_biorth_dense(const BiorthLatticeParams& params) {
    MirrorPair pair = biorth_cascade_pair(params);
    DenseTaps out;
    out.h0.resize(pair.t.size());
    out.h1.resize(pair.t.size());
    for (size_t i = 0; i < pair.t.size(); ++i) {
        out.h0[i] = pair.t[i] + pair.u[i];
        out.h1[i] = pair.t[i] - pair.u[i];
    }
    return out;
}

DenseTaps synth_biorth_dense_grad(const BiorthLatticeParams& params, int stage) {
    std::vector<double> p, q;
    run_cascade(params.ks, stage, p, q);
    DenseTaps out;
    out.h0.resize(p.size());
    out.h1.resize(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        out.h0[i] = p[i] + q[i];
        out.h1[i] = p[i] - q[i];
    }
    return out;
}

void polyphase_split(const FirFilter& h, FirFilter& even, FirFilter& odd) {
    std::vector<double> e, o;
    int de = 0;
    int dodd = 0;
    if (!h.is_zero()) {
        const int lo = h.delay;
        const int hi = h.degree();
        de = (lo + 1) / 2;        // first even position >= lo is 2*de
        dodd = lo / 2;            // first odd position >= lo is 2*dodd+1
        for (int j = 2 * de; j <= hi; j += 2) e.push_back(h.at_power(j));
        for (int j = 2 * dodd + 1; j <= hi; j += 2) o.push_back(h.at_power(j));
    }
    even = e.empty() ? FirFilter::zero() : FirFilter::from_taps(std::move(e), de);
    odd = o.empty() ? FirFilter::zero() : FirFilter::from_taps(std::move(o), dodd);
}

BiorthSynthesis derive_biorth_synthesis(const FirFilter& h0, const FirFilter& h1) {
    PolyMatrix2x2 e;
    polyphase_split(h0, e.m[0][0], e.m[0][1]);
    polyphase_split(h1, e.m[1][0], e.m[1][1]);

    const FirFilter det = det2(e);
    if (det.is_zero()) throw std::runtime_error("singular polyphase");
    size_t imax = 0;
    for (size_t i = 1; i < det.coeffs.size(); ++i)
        if (std::abs(det.coeffs[i]) > std::abs(det.coeffs[imax])) imax = i;
    const double alpha = det.coeffs[imax];
    if (std::abs(alpha) < 1e-12) throw std::runtime_error("singular polyphase");
    for (size_t i = 0; i < det.coeffs.size(); ++i)
        if (i != imax && std::abs(det.coeffs[i]) >= 1e-10 * std::abs(alpha))
            throw std::runtime_error("not perfect-reconstruction");
    const int md = det.delay + static_cast<int>(imax);

    // R = adj(E); [F0 F1] = [z^-1 1] R(z^2). The skipped 1/(alpha z^-md)
    // factor is reported instead as (gain, delay) of the whole chain.
    const auto up2 = [](const FirFilter& f, int extra) {
        if (f.is_zero()) return FirFilter::zero();
        std::vector<double> taps(static_cast<size_t>(2 * (f.length() - 1) + 1), 0.0);
        for (int i = 0; i < f.length(); ++i) taps[static_cast<size_t>(2 * i)] = f.coeffs[static_cast<size_t>(i)];
        return FirFilter::from_taps(std::move(taps), 2 * f.delay + extra);
    };
    BiorthSynthesis syn;
    syn.f0 = poly_add(up2(e.m[1][1], 1), up2(poly_scale(e.m[1][0], -1.0), 0));
    syn.f1 = poly_add(up2(poly_scale(e.m[0][1], -1.0), 1), up2(e.m[0][0], 0));
    syn.gain = alpha;
    syn.delay = 2 * md + 1;
    return syn;
}

FilterBank synth_biorth(const BiorthLatticeParams& params) {
    DenseTaps taps = synth_biorth_dense(params);
    FilterBank bank;
    bank.h0 = FirFilter::from_taps(taps.h0);
    bank.h1 = FirFilter::from_taps(taps.h1);
    BiorthSynthesis syn = derive_biorth_synthesis(bank.h0, bank.h1);
    bank.f0 = syn.f0;
    bank.f1 = syn.f1;
    bank.gain = syn.gain;
    bank.delay = syn.delay;
    bank.family = Family::biorthogonal_lattice;
    bank.params = params;
    return bank;
}

PolyMatrix2x2 biorth_stage(double k) {
    PolyMatrix2x2 r;
    r.m[0][0] = FirFilter::identity();
    r.m[0][1] = FirFilter::from_taps({k});
    r.m[1][0] = FirFilter::from_taps({k});
    r.m[1][1] = FirFilter::identity();
    return r;
}

}  // namespace uwu
