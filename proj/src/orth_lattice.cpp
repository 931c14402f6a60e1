#include "uwu/orth_lattice.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uwu {

namespace {

// Dense cascade on a pair of coefficient vectors, optionally replacing one
// rotation by its angle derivative (d/dtheta R = R(theta + pi/2)).
DenseTaps run_cascade(const std::vector<double>& angles, int derivative_stage) {
    std::vector<double> p{1.0, 0.0};
    std::vector<double> q{0.0, 1.0};
    for (size_t k = 0; k < angles.size(); ++k) {
        if (k > 0) {
            // delay stage diag(1, z^-2): q picks up two leading zeros.
            p.push_back(0.0);
            p.push_back(0.0);
            q.insert(q.begin(), 2, 0.0);
        }
        const double th = angles[k] + (static_cast<int>(k) == derivative_stage ? std::numbers::pi / 2 : 0.0);
        const double c = std::cos(th);
        const double s = std::sin(th);
        for (size_t i = 0; i < p.size(); ++i) {
            const double pi_ = p[i];
            const double qi = q[i];
            p[i] = c * pi_ + s * qi;
            q[i] = -s * pi_ + c * qi;
        }
    }
    for (double& v : q) v = -v;  // final diag(1,-1)
    return DenseTaps{std::move(p), std::move(q)};
}

}  // namespace

DenseTaps synth_orth_dense(const OrthLatticeParams& params) {
    params.validate();
    return run_cascade(params.angles, -1);
}

DenseTaps synth_orth_dense_grad(const OrthLatticeParams& params, int stage) {
    return run_cascade(params.angles, stage);
}

OrthSynthesisSet derive_orth_synthesis(const FirFilter& h0) {
    // Dense view over positions 0..degree (the relations index raw taps).
    const int n = h0.degree() + 1;
    if (n % 2 != 0) throw std::invalid_argument("even length required");
    std::vector<double> h(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) h[static_cast<size_t>(i)] = h0.at_power(i);

    std::vector<double> f0(h.rbegin(), h.rend());
    std::vector<double> h1(static_cast<size_t>(n));
    std::vector<double> f1(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        h1[static_cast<size_t>(i)] = sign * h[static_cast<size_t>(n - 1 - i)];
        f1[static_cast<size_t>(i)] = -sign * h[static_cast<size_t>(i)];
    }
    return OrthSynthesisSet{FirFilter::from_taps(std::move(h1)),
                            FirFilter::from_taps(std::move(f0)),
                            FirFilter::from_taps(std::move(f1))};
}

FilterBank synth_orth(const OrthLatticeParams& params) {
    DenseTaps taps = synth_orth_dense(params);
    FilterBank bank;
    bank.h0 = FirFilter::from_taps(taps.h0);
    bank.h1 = FirFilter::from_taps(taps.h1);
    OrthSynthesisSet syn = derive_orth_synthesis(bank.h0);
    bank.f0 = syn.f0;
    bank.f1 = syn.f1;
    bank.family = Family::orthogonal;
    bank.params = params;
    bank.gain = 1.0;
    bank.delay = static_cast<int>(taps.h0.size()) - 1;  // 2K+1
    return bank;
}

double check_double_shift_orthogonality(const FirFilter& h0) {
    const int n = h0.degree() + 1;
    if (n % 2 != 0) throw std::invalid_argument("even length required");
    std::vector<double> h(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) h[static_cast<size_t>(i)] = h0.at_power(i);

    double norm = 0.0;
    for (double v : h) norm += v * v;
    double dev = std::abs(norm - 1.0);
    for (int k = 1; 2 * k < n; ++k) {
        double acc = 0.0;
        for (int i = 2 * k; i < n; ++i) acc += h[static_cast<size_t>(i)] * h[static_cast<size_t>(i - 2 * k)];
        dev = std::max(dev, std::abs(acc));
    }
    return dev;
}

double dc_gain_deviation(const FirFilter& h0) {
    double sum = 0.0;
    for (double v : h0.coeffs) sum += v;
    return std::abs(sum - std::numbers::sqrt2);
}

OrthLatticeParams factor_orth(const FirFilter& h0, double tol) {
    const int n = h0.degree() + 1;
    if (n % 2 != 0) throw std::invalid_argument("even length required");
    if (check_double_shift_orthogonality(h0) > tol) throw std::runtime_error("not orthogonal");

    std::vector<double> g0(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) g0[static_cast<size_t>(i)] = h0.at_power(i);
    // Undo diag(1,-1): g1 = -h1, with h1 from the alias relations.
    std::vector<double> g1(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        g1[static_cast<size_t>(i)] = -sign * g0[static_cast<size_t>(n - 1 - i)];
    }

    const int K = n / 2 - 1;
    std::vector<double> angles(static_cast<size_t>(K + 1), 0.0);
    for (int k = K; k >= 1; --k) {
        const size_t top = static_cast<size_t>(2 * k + 1);
        const double rb = std::hypot(g0[0], g1[0]);
        const double rt = std::hypot(g0[top], g1[top]);
        if (std::max(rb, rt) < tol) throw std::runtime_error("factorization breakdown");
        double th = (rb >= rt) ? std::atan2(-g1[0], g0[0]) : std::atan2(g0[top], g1[top]);
        // Fold to (-pi/2, pi/2]; the dropped sign moves into the deeper pair.
        if (th > std::numbers::pi / 2) th -= std::numbers::pi;
        else if (th <= -std::numbers::pi / 2) th += std::numbers::pi;
        angles[static_cast<size_t>(k)] = th;

        const double c = std::cos(th);
        const double s = std::sin(th);
        std::vector<double> a(g0.size());
        std::vector<double> b(g0.size());
        for (size_t i = 0; i < g0.size(); ++i) {
            a[i] = c * g0[i] - s * g1[i];  // top two taps vanish
            b[i] = s * g0[i] + c * g1[i];  // bottom two taps vanish
        }
        a.resize(static_cast<size_t>(2 * k));
        g0 = std::move(a);
        g1.assign(b.begin() + 2, b.end());
    }
    angles[0] = std::atan2(g0[1], g0[0]);
    return OrthLatticeParams{std::move(angles)};
}

PolyMatrix2x2 rotation_stage(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    PolyMatrix2x2 r;
    r.m[0][0] = FirFilter::from_taps({c});
    r.m[0][1] = FirFilter::from_taps({s});
    r.m[1][0] = FirFilter::from_taps({-s});
    r.m[1][1] = FirFilter::from_taps({c});
    return r;
}

}  // namespace uwu
