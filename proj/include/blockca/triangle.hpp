#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rule.hpp"

namespace blockca {

struct Cell {
    int64_t x, y;
    bool operator==(const Cell& o) const { return x == o.x && y == o.y; }
    auto operator<=>(const Cell&) const = default;
};

// Play triangle anchored at its lower-right cell (x, y), height h rows. Row i
// (1-based from the top) spans [x-(i-1)(gamma-1), x] at height y+h-i, so the
// base is the widest row and the right edge is the column x.
struct Triangle {
    int64_t x, y, h;
    bool operator==(const Triangle& o) const { return x == o.x && y == o.y && h == o.h; }
};

inline Cell top(const Triangle& t) { return {t.x, t.y + t.h - 1}; }

inline int64_t base_lo(const Triangle& t, const RuleParams& p) {
    return t.x - (t.h - 1) * (p.gamma() - 1);
}

inline std::vector<Cell> base(const Triangle& t, const RuleParams& p) {
    std::vector<Cell> out;
    for (int64_t c = base_lo(t, p); c <= t.x; ++c) out.push_back({c, t.y});
    return out;
}

// Support: the row just below the base, reaching ell further left than the
// would-be next triangle row and r cells right of x.
inline int64_t support_lo(const Triangle& t, const RuleParams& p) {
    return t.x - t.h * (p.gamma() - 1) - p.left();
}
inline int64_t support_hi(const Triangle& t, const RuleParams& p) { return t.x + p.right(); }

inline std::vector<Cell> support(const Triangle& t, const RuleParams& p) {
    std::vector<Cell> out;
    for (int64_t c = support_lo(t, p); c <= support_hi(t, p); ++c)
        out.push_back({c, t.y - 1});
    return out;
}

inline std::vector<Cell> triangle_cells(const Triangle& t, const RuleParams& p) {
    std::vector<Cell> out;
    for (int64_t i = 1; i <= t.h; ++i)
        for (int64_t c = t.x - (i - 1) * (p.gamma() - 1); c <= t.x; ++c)
            out.push_back({c, t.h - i + t.y});
    return out;
}

// One proposed play window of width delta in the support row.
struct Window {
    int64_t level;   // always y-1 of the triangle it belongs to
    int64_t lo, hi;  // inclusive column bounds, hi-lo+1 == delta
    int64_t anchor;  // base cell column the window is attached to
};

enum class WindowMode {
    anchored,        // one window per base cell c: [c-(gamma-1)-left, c+right]
    any_contiguous,  // every delta-wide window inside the support row
};

// Both modes yield (h-1)(gamma-1)+1 windows whose union is the support; they
// enumerate the same column intervals, differing only in bookkeeping.
inline std::vector<Window> window_anchors(const Triangle& t, const RuleParams& p,
                                          WindowMode mode = WindowMode::anchored) {
    std::vector<Window> out;
    if (t.y < 1) return out;  // terminal: no move windows
    if (mode == WindowMode::anchored) {
        for (int64_t c = base_lo(t, p); c <= t.x; ++c)
            out.push_back({t.y - 1, c - (p.gamma() - 1) - p.left(), c + p.right(), c});
    } else {
        int64_t lo = support_lo(t, p), hi = support_hi(t, p);
        for (int64_t s = lo; s + p.delta() - 1 <= hi; ++s)
            out.push_back({t.y - 1, s, s + p.delta() - 1, s + (p.gamma() - 1) + p.left()});
    }
    return out;
}

// Doubling map on triangles (gamma = 2): the scaled triangle whose safety
// tracks the original's across a parameter-doubled run.
inline Triangle scale_triangle(const Triangle& t, const RuleParams& p) {
    if (p.gamma() != 2) throw std::invalid_argument("scale_triangle: gamma must be 2");
    if (t.y == 0) return {2 * t.x, 0, 2 * t.h - 1};
    return {2 * t.x, 2 * t.y - 1, 2 * t.h};
}

// Limit of the rescaled scale_triangle iterates: a real right triangle, right
// angle at (x, y-1), legs h+1.
struct LimitTriangle {
    int64_t vertex_x, vertex_y;
    int64_t legs;
};

inline LimitTriangle limit_triangle(const Triangle& t) {
    return {t.x, t.y - 1, t.h + 1};
}

}  // namespace blockca
