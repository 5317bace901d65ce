#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rule.hpp"
#include "tape.hpp"

namespace blockca {

// Zero counts of the two update windows of one cell. The inner window w0 reads
// the gamma cells [x-gamma+1, x] of the previous row, the full window w1 reads
// the delta cells [x-gamma+1-left, x+right]; w0 is contained in w1.
struct WindowCounts {
    int64_t zeros_inner = 0;  // zeros in w0
    int64_t zeros_full = 0;   // zeros in w1
};

inline WindowCounts window_counts(const Tape& prev, int64_t x, const RuleParams& p) {
    WindowCounts c;
    c.zeros_inner = prev.count_zeros(x - p.gamma() + 1, x);
    c.zeros_full = prev.count_zeros(x - p.gamma() + 1 - p.left(), x + p.right());
    return c;
}

// The update function: 0 when the inner window is all zeros or the full window
// holds at most block zeros, 1 otherwise.
inline bool update_cell(const Tape& prev, int64_t x, const RuleParams& p) {
    WindowCounts c = window_counts(prev, x, p);
    return !(c.zeros_inner == p.gamma() || c.zeros_full <= p.block());
}

// Reference kernel: recounts both windows per cell. Kept deliberately naive as
// the cross-check for the sliding kernel below.
inline Tape step_reference(const Tape& t, const RuleParams& p) {
    if (t.core().empty() && t.left_fill() == t.right_fill())
        return Tape::constant(false);  // constant row maps to constant 0
    int64_t lo = t.origin() - p.right();
    int64_t hi = t.core_end() - 1 + p.gamma() + p.left() - 1;
    BitVec out(static_cast<size_t>(hi - lo + 1));
    for (int64_t x = lo; x <= hi; ++x)
        out.set(static_cast<size_t>(x - lo), update_cell(t, x, p));
    return Tape(lo, std::move(out), false, false);
}

// Production kernel. Cells outside [origin-right, core_end-1+gamma+left-1]
// have their whole window inside one constant region and map to 0, so only
// that span is evaluated; within it both zero counters are maintained by a
// drop-left/add-right slide, one update each per cell.
inline Tape step(const Tape& t, const RuleParams& p) {
    if (t.core().empty() && t.left_fill() == t.right_fill())
        return Tape::constant(false);
    const int64_t gamma = p.gamma(), L = p.left(), R = p.right(), B = p.block();
    const int64_t lo = t.origin() - R;
    const int64_t hi = t.core_end() - 1 + gamma + L - 1;
    const int64_t src_lo = lo - gamma + 1 - L;  // leftmost cell any window reads
    const int64_t src_hi = hi + R;
    const size_t src_n = static_cast<size_t>(src_hi - src_lo + 1);

    std::vector<uint8_t> src(src_n);
    {
        const int64_t clo = t.origin(), chi = t.core_end();
        for (int64_t x = src_lo; x < std::min(clo, src_hi + 1); ++x)
            src[static_cast<size_t>(x - src_lo)] = t.left_fill();
        for (int64_t x = std::max(clo, src_lo); x < std::min(chi, src_hi + 1); ++x)
            src[static_cast<size_t>(x - src_lo)] =
                t.core().get(static_cast<size_t>(x - clo));
        for (int64_t x = std::max(chi, src_lo); x <= src_hi; ++x)
            src[static_cast<size_t>(x - src_lo)] = t.right_fill();
    }

    auto at = [&](int64_t x) -> int64_t { return src[static_cast<size_t>(x - src_lo)]; };

    int64_t zeros_inner = 0, zeros_full = 0;
    for (int64_t i = lo - gamma + 1; i <= lo; ++i) zeros_inner += 1 - at(i);
    for (int64_t i = lo - gamma + 1 - L; i <= lo + R; ++i) zeros_full += 1 - at(i);

    BitVec out(static_cast<size_t>(hi - lo + 1));
    for (int64_t x = lo;; ++x) {
        out.set(static_cast<size_t>(x - lo),
                !(zeros_inner == gamma || zeros_full <= B));
        if (x == hi) break;
        zeros_inner += at(x - gamma + 1) - at(x + 1);
        zeros_full += at(x - gamma + 1 - L) - at(x + 1 + R);
    }
    return Tape(lo, std::move(out), false, false);
}

// A full evolution: params plus one row per time step, rows[0] = initial.
struct Diagram {
    RuleParams params;
    std::vector<Tape> rows;  // rows[t]

    bool cell(int64_t x, int64_t t) const { return rows[static_cast<size_t>(t)].cell(x); }
    int64_t steps() const { return static_cast<int64_t>(rows.size()) - 1; }

    void extend_to(int64_t t_max) {
        while (steps() < t_max) rows.push_back(step(rows.back(), params));
    }
};

inline Diagram evolve(const Tape& init, const RuleParams& p, int64_t steps) {
    if (steps < 0) throw std::invalid_argument("evolve: steps must be >= 0");
    Diagram d{p, {init}};
    d.rows.reserve(static_cast<size_t>(steps) + 1);
    d.extend_to(steps);
    return d;
}

// Update output for each of the 2^delta full-window patterns. Pattern bits are
// the window cells left to right, with the leftmost cell in the most
// significant position.
inline std::vector<uint8_t> truth_table(const RuleParams& p) {
    if (p.delta() > 20) throw std::invalid_argument("truth_table: delta > 20");
    const int64_t d = p.delta();
    std::vector<uint8_t> out(static_cast<size_t>(1) << d);
    for (uint64_t m = 0; m < out.size(); ++m) {
        BitVec w(static_cast<size_t>(d));
        for (int64_t i = 0; i < d; ++i)
            w.set(static_cast<size_t>(i), (m >> (d - 1 - i)) & 1u);
        Tape row(0, std::move(w), false, false);
        // window [x-gamma+1-left, x+right] sits at [0, delta) when x = gamma-1+left
        out[m] = update_cell(row, p.gamma() - 1 + p.left(), p);
    }
    return out;
}

// Fraction of 1s per row over the inclusive column range.
inline std::vector<double> density_series(const Diagram& d, int64_t xlo, int64_t xhi) {
    std::vector<double> out;
    out.reserve(d.rows.size());
    const double width = static_cast<double>(xhi - xlo + 1);
    for (const Tape& row : d.rows)
        out.push_back(static_cast<double>(row.count_ones(xlo, xhi)) / width);
    return out;
}

}  // namespace blockca
