#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "board.hpp"
#include "ca.hpp"
#include "solver.hpp"
#include "triangle.hpp"

namespace blockca {

// Safety of a triangle against an evolved diagram: every covered cell reads 0,
// and for every base cell above the terminal row the full update window of
// that cell holds at most block zeros. A base at the terminal row has its
// support below the board and the window condition is vacuous.
inline bool ca_safe(const Triangle& t, const Diagram& d) {
    if (t.y < 0 || t.h < 1) throw std::invalid_argument("ca_safe: malformed triangle");
    if (t.y + t.h - 1 > d.steps())
        throw std::out_of_range("ca_safe: diagram has too few rows for this triangle");
    for (const Cell& c : triangle_cells(t, d.params))
        if (d.cell(c.x, c.y)) return false;
    if (t.y >= 1) {
        const Tape& below = d.rows[static_cast<size_t>(t.y - 1)];
        for (int64_t c = base_lo(t, d.params); c <= t.x; ++c)
            if (window_counts(below, c, d.params).zeros_full > d.params.block())
                return false;
    }
    return true;
}

// The cell-to-triangle biconditional at (u, v): the cell reads 0 exactly when
// some triangle topped there is safe. The height search walks h = 1..v+1 and
// stops early at the first h whose new bottom row covers a 1; no taller
// triangle can be safe after that.
struct Lemma1Result {
    bool cell_zero;
    std::optional<int64_t> witness_h;
    bool holds() const { return cell_zero == witness_h.has_value(); }
};

inline Lemma1Result lemma1_check(int64_t u, int64_t v, const Diagram& d) {
    Lemma1Result r{!d.cell(u, v), std::nullopt};
    for (int64_t h = 1; h <= v + 1; ++h) {
        Triangle t{u, v - h + 1, h};
        bool row_has_one = false;  // new bottom row of this h = the base row
        for (int64_t c = base_lo(t, d.params); c <= t.x; ++c)
            if (d.cell(c, t.y)) { row_has_one = true; break; }
        if (row_has_one) break;
        if (ca_safe(t, d)) {
            r.witness_h = h;
            break;
        }
    }
    return r;
}

struct Mismatch {
    Triangle triangle;
    Outcome game_outcome;
    bool ca_safe_verdict;
};

struct EquivalenceReport {
    int64_t positions_checked = 0;
    int64_t mismatch_count = 0;          // total found
    std::vector<Mismatch> mismatches;    // first `cap` of them, (y, h, x) order
    std::string params;
    std::string board_digest;
    std::string window_mode;
    bool ok() const { return mismatch_count == 0; }
};

inline std::string window_mode_name(WindowMode m) {
    return m == WindowMode::anchored ? "anchored" : "any-contiguous";
}

// FNV-1a over the canonical board text; enough to tie a report to its input.
inline std::string digest_hex(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct VerifyRegion {
    int64_t xmin, xmax;
    int64_t ymax;
    int64_t hmax;
};

// Game outcome versus diagram safety over every triangle in the region with
// 1 <= y <= ymax. Mismatches are reported in lexicographic (y, h, x) order so
// the first entry is the minimal counterexample; only `cap` of them are kept.
// The sweep always covers the whole region, making the report independent of
// the worker count.
inline EquivalenceReport theorem1_verify(const Board& board, const VerifyRegion& region,
                                         WindowMode mode = WindowMode::anchored,
                                         int jobs = 1, int64_t cap = 16) {
    Diagram d = evolve(board.level0, board.params, region.ymax + region.hmax - 1);
    EquivalenceReport rep;
    rep.params = board.params.to_string();
    rep.window_mode = window_mode_name(mode);

    auto sweep = [&](int64_t y_from, int64_t y_to, EquivalenceReport& out) {
        OutcomeSolver solver(board, mode);
        for (int64_t y = y_from; y <= y_to; ++y)
            for (int64_t h = 1; h <= region.hmax; ++h)
                for (int64_t x = region.xmin; x <= region.xmax; ++x) {
                    Triangle t{x, y, h};
                    ++out.positions_checked;
                    bool p_wins = solver.outcome(t) == Outcome::P;
                    bool safe = ca_safe(t, d);
                    if (p_wins != safe) {
                        ++out.mismatch_count;
                        if (static_cast<int64_t>(out.mismatches.size()) < cap)
                            out.mismatches.push_back(
                                {t, p_wins ? Outcome::P : Outcome::N, safe});
                    }
                }
    };

    if (jobs <= 1 || region.ymax <= 1) {
        sweep(1, region.ymax, rep);
    } else {
        int n = std::min<int64_t>(jobs, region.ymax);
        std::vector<EquivalenceReport> parts(static_cast<size_t>(n));
        std::vector<std::thread> workers;
        int64_t span = region.ymax, base_y = 1;
        for (int i = 0; i < n; ++i) {
            int64_t lo = base_y + span * i / n;
            int64_t hi = base_y + span * (i + 1) / n - 1;
            workers.emplace_back(sweep, lo, hi, std::ref(parts[static_cast<size_t>(i)]));
        }
        for (auto& w : workers) w.join();
        for (auto& part : parts) {  // y-band order keeps (y,h,x) order intact
            rep.positions_checked += part.positions_checked;
            rep.mismatch_count += part.mismatch_count;
            for (auto& m : part.mismatches)
                if (static_cast<int64_t>(rep.mismatches.size()) < cap)
                    rep.mismatches.push_back(m);
        }
    }
    return rep;
}

struct Lemma1Failure {
    int64_t u, v;
};

struct Lemma1Report {
    int64_t cells_checked = 0;
    int64_t failure_count = 0;
    std::vector<Lemma1Failure> failures;  // first `cap`, (v, u) order
    std::string params;
    bool ok() const { return failure_count == 0; }
};

inline Lemma1Report lemma1_verify(const Board& board, int64_t xmin, int64_t xmax,
                                  int64_t tmax, int64_t cap = 16) {
    Diagram d = evolve(board.level0, board.params, tmax + 1);
    Lemma1Report rep;
    rep.params = board.params.to_string();
    for (int64_t v = 1; v <= tmax; ++v)
        for (int64_t u = xmin; u <= xmax; ++u) {
            ++rep.cells_checked;
            if (!lemma1_check(u, v, d).holds()) {
                ++rep.failure_count;
                if (static_cast<int64_t>(rep.failures.size()) < cap)
                    rep.failures.push_back({u, v});
            }
        }
    return rep;
}

}  // namespace blockca
