#include "uwu/fir.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace uwu {

FirFilter FirFilter::from_taps(std::vector<double> taps, int delay) {
    if (taps.empty()) throw std::invalid_argument("fir: empty tap vector");
    size_t first = 0;
    size_t last = taps.size();
    while (first < last && std::abs(taps[first]) < kTrimEps) ++first;
    while (last > first && std::abs(taps[last - 1]) < kTrimEps) --last;
    if (first == last) return FirFilter::zero();
    FirFilter f;
    f.coeffs.assign(taps.begin() + static_cast<long>(first), taps.begin() + static_cast<long>(last));
    f.delay = delay + static_cast<int>(first);
    if (f.delay < 0) throw std::invalid_argument("fir: negative delay");
    return f;
}

double FirFilter::at_power(int power) const {
    if (is_zero()) return 0.0;
    const int i = power - delay;
    if (i < 0 || i >= length()) return 0.0;
    return coeffs[static_cast<size_t>(i)];
}

FirFilter poly_mul(const FirFilter& a, const FirFilter& b) {
    if (a.is_zero() || b.is_zero()) return FirFilter::zero();
    std::vector<double> out(a.coeffs.size() + b.coeffs.size() - 1, 0.0);
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            out[i + j] += a.coeffs[i] * b.coeffs[j];
    return FirFilter::from_taps(std::move(out), a.delay + b.delay);
}

FirFilter poly_add(const FirFilter& a, const FirFilter& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int lo = std::min(a.delay, b.delay);
    const int hi = std::max(a.degree(), b.degree());
    std::vector<double> out(static_cast<size_t>(hi - lo + 1), 0.0);
    for (int i = 0; i < a.length(); ++i) out[static_cast<size_t>(a.delay - lo + i)] += a.coeffs[static_cast<size_t>(i)];
    for (int i = 0; i < b.length(); ++i) out[static_cast<size_t>(b.delay - lo + i)] += b.coeffs[static_cast<size_t>(i)];
    return FirFilter::from_taps(std::move(out), lo);
}

FirFilter poly_scale(const FirFilter& a, double s) {
    if (a.is_zero() || s == 0.0) return FirFilter::zero();
    std::vector<double> out = a.coeffs;
    for (double& c : out) c *= s;
    return FirFilter::from_taps(std::move(out), a.delay);
}

FirFilter poly_shift(const FirFilter& a, int shift) {
    if (a.is_zero()) return a;
    return FirFilter::from_taps(a.coeffs, a.delay + shift);
}

std::complex<double> dtft_at(const FirFilter& f, double omega) {
    std::complex<double> acc{0.0, 0.0};
    for (int i = 0; i < f.length(); ++i) {
        const double phase = omega * static_cast<double>(f.delay + i);
        acc += f.coeffs[static_cast<size_t>(i)] * std::complex<double>(std::cos(phase), -std::sin(phase));
    }
    return acc;
}

std::vector<std::complex<double>> freq_response(const FirFilter& f, int num_samples) {
    if (num_samples < 2) throw std::invalid_argument("freq_response: num_samples must be >= 2");
    std::vector<std::complex<double>> out(static_cast<size_t>(num_samples));
    const double step = std::numbers::pi / static_cast<double>(num_samples - 1);
    for (int j = 0; j < num_samples; ++j) out[static_cast<size_t>(j)] = dtft_at(f, step * static_cast<double>(j));
    return out;
}

PolyMatrix2x2 PolyMatrix2x2::identity() {
    PolyMatrix2x2 r;
    r.m[0][0] = FirFilter::identity();
    r.m[1][1] = FirFilter::identity();
    return r;
}

PolyMatrix2x2 PolyMatrix2x2::delay_stage(int power) {
    PolyMatrix2x2 r = identity();
    r.m[1][1] = FirFilter::from_taps({1.0}, power);
    return r;
}

PolyMatrix2x2 matmul(const PolyMatrix2x2& a, const PolyMatrix2x2& b) {
    PolyMatrix2x2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.m[i][j] = poly_add(poly_mul(a.m[i][0], b.m[0][j]), poly_mul(a.m[i][1], b.m[1][j]));
    return r;
}

FirFilter det2(const PolyMatrix2x2& a) {
    return poly_add(poly_mul(a.m[0][0], a.m[1][1]), poly_scale(poly_mul(a.m[0][1], a.m[1][0]), -1.0));
}

}  // namespace uwu
