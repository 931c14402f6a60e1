#include "uwu/transform.hpp"

#include <stdexcept>

#include "uwu/kernels.hpp"

namespace uwu {

namespace {

// Analysis inner loop: out[m] = sum_t c[t] x[(2m - d - t) mod n]. The
// periodic extension is materialized once so the kernel sees a contiguous
// window: ext[j] = x[(j + shift) mod n] with shift = -(d + L - 1) mod n,
// and out[m] = sum_u c_rev[u] ext[2m + u].
struct RowAnalyzer {
    std::vector<double> ext;
    std::vector<double> taps_rev;

    void set_filter(const FirFilter& f) {
        taps_rev.assign(f.coeffs.rbegin(), f.coeffs.rend());
    }

    void run(std::span<const double> x, double* out, size_t nout) {
        const size_t n = x.size();
        const size_t len = taps_rev.size();
        const int d = delay;
        const long raw = -(static_cast<long>(d) + static_cast<long>(len) - 1);
        const size_t shift = static_cast<size_t>(((raw % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n));
        const size_t need = 2 * (nout - 1) + len;
        ext.resize(need);
        for (size_t j = 0; j < need; ++j) ext[j] = x[(j + shift) % n];
        kernels::active().correlate_decim2(ext.data(), taps_rev.data(), len, out, nout);
    }

    int delay = 0;
};

// Synthesis inner loop: w[i] += sum_t c[t] u[(i - d - t) mod n] with u the
// zero-stuffed upsampled subband; same extension trick, dense correlation.
struct RowSynthesizer {
    std::vector<double> ext;
    std::vector<double> taps_rev;
    int delay = 0;

    void set_filter(const FirFilter& f) {
        taps_rev.assign(f.coeffs.rbegin(), f.coeffs.rend());
    }

    void accumulate(std::span<const double> sub, double* out, size_t n) {
        const size_t len = taps_rev.size();
        const long raw = -(static_cast<long>(delay) + static_cast<long>(len) - 1);
        const size_t shift = static_cast<size_t>(((raw % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n));
        const size_t need = n - 1 + len;
        ext.assign(need, 0.0);
        for (size_t j = 0; j < need; ++j) {
            const size_t pos = (j + shift) % n;
            if (pos % 2 == 0) ext[j] = sub[pos / 2];
        }
        kernels::active().correlate_accum(ext.data(), taps_rev.data(), len, out, n);
    }
};

void check_signal(std::span<const double> signal) {
    if (signal.empty()) throw std::invalid_argument("analyze_1d: empty signal");
    if (signal.size() % 2 != 0) throw std::invalid_argument("analyze_1d: even length required");
}

std::pair<std::vector<double>, std::vector<double>> analyze_1d_filters(std::span<const double> signal,
                                                                       const FirFilter& lo,
                                                                       const FirFilter& hi) {
    check_signal(signal);
    const size_t half = signal.size() / 2;
    std::vector<double> low(half);
    std::vector<double> high(half);
    RowAnalyzer a;
    a.set_filter(lo);
    a.delay = lo.delay;
    a.run(signal, low.data(), half);
    a.set_filter(hi);
    a.delay = hi.delay;
    a.run(signal, high.data(), half);
    return {std::move(low), std::move(high)};
}

Plane pad_to_even(const Plane& p) {
    const int h = p.height + (p.height % 2);
    const int w = p.width + (p.width % 2);
    if (h == p.height && w == p.width) return p;
    Plane out(h, w);
    for (int r = 0; r < h; ++r) {
        const int sr = std::min(r, p.height - 1);
        for (int c = 0; c < w; ++c) out.at(r, c) = p.at(sr, std::min(c, p.width - 1));
    }
    return out;
}

// Row-direction analysis of every row of `p` with (lo, hi); outputs are
// h x w/2 planes.
void analyze_rows(const Plane& p, const FirFilter& lo, const FirFilter& hi, Plane& low, Plane& high) {
    const size_t half = static_cast<size_t>(p.width) / 2;
    low = Plane(p.height, static_cast<int>(half));
    high = Plane(p.height, static_cast<int>(half));
    RowAnalyzer a;
    for (int pass = 0; pass < 2; ++pass) {
        const FirFilter& f = pass == 0 ? lo : hi;
        Plane& dst = pass == 0 ? low : high;
        a.set_filter(f);
        a.delay = f.delay;
        for (int r = 0; r < p.height; ++r) {
            std::span<const double> row(&p.data[static_cast<size_t>(r) * static_cast<size_t>(p.width)],
                                        static_cast<size_t>(p.width));
            a.run(row, &dst.data[static_cast<size_t>(r) * half], half);
        }
    }
}

void synthesize_rows(const Plane& low, const Plane& high, const FilterBank& bank, Plane& out) {
    const size_t n = 2 * static_cast<size_t>(low.width);
    out = Plane(low.height, static_cast<int>(n));
    RowSynthesizer s0, s1;
    s0.set_filter(bank.f0);
    s0.delay = bank.f0.delay;
    s1.set_filter(bank.f1);
    s1.delay = bank.f1.delay;
    std::vector<double> w(n);
    for (int r = 0; r < low.height; ++r) {
        std::fill(w.begin(), w.end(), 0.0);
        std::span<const double> lo(&low.data[static_cast<size_t>(r) * static_cast<size_t>(low.width)],
                                   static_cast<size_t>(low.width));
        std::span<const double> hi(&high.data[static_cast<size_t>(r) * static_cast<size_t>(high.width)],
                                   static_cast<size_t>(high.width));
        s0.accumulate(lo, w.data(), n);
        s1.accumulate(hi, w.data(), n);
        double* dst = &out.data[static_cast<size_t>(r) * n];
        for (size_t i = 0; i < n; ++i) dst[i] = w[(i + static_cast<size_t>(bank.delay)) % n] / bank.gain;
    }
}

}  // namespace

Plane transpose(const Plane& plane) {
    Plane out(plane.width, plane.height);
    for (int r = 0; r < plane.height; ++r)
        for (int c = 0; c < plane.width; ++c) out.at(c, r) = plane.at(r, c);
    return out;
}

std::pair<std::vector<double>, std::vector<double>> analyze_1d(std::span<const double> signal,
                                                               const FilterBank& bank) {
    return analyze_1d_filters(signal, bank.h0, bank.h1);
}

std::vector<double> synthesize_1d(std::span<const double> low, std::span<const double> high,
                                  const FilterBank& bank) {
    if (low.size() != high.size()) throw std::invalid_argument("synthesize_1d: length mismatch");
    if (low.empty()) throw std::invalid_argument("synthesize_1d: empty input");
    const size_t n = 2 * low.size();
    std::vector<double> w(n, 0.0);
    RowSynthesizer s;
    s.set_filter(bank.f0);
    s.delay = bank.f0.delay;
    s.accumulate(low, w.data(), n);
    s.set_filter(bank.f1);
    s.delay = bank.f1.delay;
    s.accumulate(high, w.data(), n);
    std::vector<double> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = w[(i + static_cast<size_t>(bank.delay)) % n] / bank.gain;
    return out;
}

SubbandSet analyze_2d_filters(const Plane& plane, const FirFilter& row_lo, const FirFilter& row_hi,
                              const FirFilter& col_lo, const FirFilter& col_hi) {
    if (plane.height < 1 || plane.width < 1) throw std::invalid_argument("analyze_2d: empty plane");
    const Plane padded = pad_to_even(plane);

    Plane low_row, high_row;
    analyze_rows(padded, row_lo, row_hi, low_row, high_row);

    // Column pass runs on transposed planes so the kernels stay contiguous.
    Plane lt = transpose(low_row);
    Plane ht = transpose(high_row);
    Plane ll_t, lh_t, hl_t, hh_t;
    analyze_rows(lt, col_lo, col_hi, ll_t, lh_t);
    analyze_rows(ht, col_lo, col_hi, hl_t, hh_t);

    SubbandSet out;
    out.ll = transpose(ll_t);
    out.lh = transpose(lh_t);
    out.hl = transpose(hl_t);
    out.hh = transpose(hh_t);
    out.orig_height = plane.height;
    out.orig_width = plane.width;
    return out;
}

SubbandSet analyze_2d(const Plane& plane, const FilterBank& bank) {
    return analyze_2d_filters(plane, bank.h0, bank.h1, bank.h0, bank.h1);
}

Plane synthesize_2d(const SubbandSet& subbands, const FilterBank& bank) {
    const Plane& ll = subbands.ll;
    if (ll.height < 1 || ll.width < 1) throw std::invalid_argument("synthesize_2d: empty subbands");
    for (const Plane* p : {&subbands.hl, &subbands.lh, &subbands.hh})
        if (p->height != ll.height || p->width != ll.width)
            throw std::invalid_argument("synthesize_2d: dimension mismatch");
    const int oh = subbands.orig_height > 0 ? subbands.orig_height : 2 * ll.height;
    const int ow = subbands.orig_width > 0 ? subbands.orig_width : 2 * ll.width;
    if ((oh + 1) / 2 != ll.height || (ow + 1) / 2 != ll.width)
        throw std::invalid_argument("synthesize_2d: dimension mismatch");

    // Undo the column pass (transposed row synthesis), then the row pass.
    Plane lt, ht;
    synthesize_rows(transpose(subbands.ll), transpose(subbands.lh), bank, lt);
    synthesize_rows(transpose(subbands.hl), transpose(subbands.hh), bank, ht);
    Plane padded;
    synthesize_rows(transpose(lt), transpose(ht), bank, padded);

    if (padded.height == oh && padded.width == ow) return padded;
    Plane out(oh, ow);
    for (int r = 0; r < oh; ++r)
        for (int c = 0; c < ow; ++c) out.at(r, c) = padded.at(r, c);
    return out;
}

}  // namespace uwu
