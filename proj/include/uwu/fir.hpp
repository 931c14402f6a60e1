#pragma once

#include <complex>
#include <vector>

namespace uwu {

/// Causal FIR polynomial in z^-1: coeffs[i] multiplies z^-(delay+i).
///
/// Canonical form: leading/trailing taps with magnitude below the trim
/// threshold are stripped (the delay absorbs leading trims). The zero
/// polynomial is represented as a single 0.0 tap at delay 0.
struct FirFilter {
    std::vector<double> coeffs{0.0};
    int delay = 0;

    static FirFilter zero() { return FirFilter{}; }
    static FirFilter identity() { return from_taps({1.0}, 0); }

    /// Canonicalizing constructor; throws on empty taps or negative delay.
    static FirFilter from_taps(std::vector<double> taps, int delay = 0);

    bool is_zero() const { return coeffs.size() == 1 && coeffs[0] == 0.0; }
    int length() const { return static_cast<int>(coeffs.size()); }
    int degree() const { return delay + length() - 1; }

    /// Coefficient of z^-power, 0.0 outside the stored range.
    double at_power(int power) const;
};

// Canonical trimming threshold (absolute).
inline constexpr double kTrimEps = 1e-14;

FirFilter poly_mul(const FirFilter& a, const FirFilter& b);
FirFilter poly_add(const FirFilter& a, const FirFilter& b);
FirFilter poly_scale(const FirFilter& a, double s);
/// Multiply by z^-shift (shift >= 0, or enough headroom in a.delay).
FirFilter poly_shift(const FirFilter& a, int shift);

/// H(e^{jw}) = sum_i coeffs[i] e^{-jw(delay+i)}.
std::complex<double> dtft_at(const FirFilter& f, double omega);

/// DTFT sampled at w_j = j*pi/(num_samples-1), j = 0..num_samples-1.
std::vector<std::complex<double>> freq_response(const FirFilter& f, int num_samples);

/// 2x2 matrix of FIR polynomials, row-major.
struct PolyMatrix2x2 {
    FirFilter m[2][2];

    static PolyMatrix2x2 identity();
    /// diag(1, z^-power).
    static PolyMatrix2x2 delay_stage(int power);
};

PolyMatrix2x2 matmul(const PolyMatrix2x2& a, const PolyMatrix2x2& b);
FirFilter det2(const PolyMatrix2x2& a);

}  // namespace uwu
