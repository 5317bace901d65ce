#pragma once

#include "rule.hpp"
#include "tape.hpp"
#include "triangle.hpp"

namespace blockca {

// Game board: rule parameters plus the terminal row. The 1-cells of level0 are
// the obstacles; for the correspondence runs the same tape doubles as the CA
// initial configuration.
struct Board {
    RuleParams params;
    Tape level0;

    bool obstacle(int64_t x) const { return level0.cell(x); }
};

// A triangle is placeable when it sits on the board and, if its base reaches
// the terminal row, covers no obstacle. Obstacles live only at level 0, so no
// other row needs checking.
inline bool triangle_legal(const Triangle& t, const Board& b) {
    if (t.h < 1 || t.y < 0) return false;
    if (t.y == 0) {
        for (int64_t c = base_lo(t, b.params); c <= t.x; ++c)
            if (b.obstacle(c)) return false;
    }
    return true;
}

// Terminal-row win test: some window placement leaves more free cells than the
// blocker can cover, i.e. |W ∩ obstacles| + block < delta.
inline bool terminal_window_win(const Window& w, const Board& b) {
    if (w.level != 0) throw std::invalid_argument("terminal_window_win: window not at level 0");
    int64_t obstructed = b.level0.count_ones(w.lo, w.hi);
    return obstructed + b.params.block() < b.params.delta();
}

}  // namespace blockca
