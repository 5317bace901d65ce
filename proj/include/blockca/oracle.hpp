#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "board.hpp"
#include "solver.hpp"
#include "triangle.hpp"

namespace blockca {

// Independent oracle for OutcomeSolver. Plays the move discussion literally:
// the mover wins a position when some window survives every block subset of
// size at most block, i.e. for each subset some non-blocked cell still admits
// a placement into a P-position. No counting shortcut anywhere; the subsets
// are enumerated outright, which is why the instance size is guarded.
class NaiveSolver {
public:
    NaiveSolver(Board board, WindowMode mode = WindowMode::anchored)
        : board_(std::move(board)), mode_(mode) {
        if (board_.params.block() > 6 || board_.params.delta() > 10)
            throw std::invalid_argument("NaiveSolver: requires block <= 6 and delta <= 10");
        if (board_.level0.all_zero())
            throw std::invalid_argument("NaiveSolver: board has no obstacles");
    }

    Outcome outcome(const Triangle& t) {
        if (!triangle_legal(t, board_))
            throw std::invalid_argument("outcome: illegal triangle");
        return outcome_unchecked(t);
    }

private:
    Outcome outcome_unchecked(const Triangle& t) {
        if (t.y == 0) return Outcome::P;
        detail::TriKey key{t.x, t.y, t.h};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Outcome res = Outcome::P;
        for (const Window& w : window_anchors(t, board_.params, mode_)) {
            if (window_survives_all_blocks(w, t.y)) {
                res = Outcome::N;
                break;
            }
        }
        memo_.emplace(key, res);
        return res;
    }

    bool window_survives_all_blocks(const Window& w, int64_t y) {
        std::vector<int64_t> cells;
        for (int64_t c = w.lo; c <= w.hi; ++c) cells.push_back(c);
        std::vector<int64_t> subset;
        for (int64_t size = 0; size <= board_.params.block(); ++size) {
            subset.assign(static_cast<size_t>(size), 0);
            if (!for_each_subset(cells, 0, size, subset, 0, w.level, y)) return false;
        }
        return true;
    }

    // Enumerates size-sized subsets of cells[from..]; returns false as soon as
    // one subset leaves the mover without a P placement.
    bool for_each_subset(const std::vector<int64_t>& cells, size_t from, int64_t size,
                         std::vector<int64_t>& subset, size_t filled, int64_t level,
                         int64_t y) {
        if (static_cast<int64_t>(filled) == size)
            return mover_escapes(cells, subset, level, y);
        if (from >= cells.size()) return true;  // not enough cells left to block
        for (size_t i = from; i + (static_cast<size_t>(size) - filled) <= cells.size(); ++i) {
            subset[filled] = cells[i];
            if (!for_each_subset(cells, i + 1, size, subset, filled + 1, level, y))
                return false;
        }
        return true;
    }

    bool mover_escapes(const std::vector<int64_t>& cells, const std::vector<int64_t>& blocked,
                       int64_t level, int64_t y) {
        for (int64_t c : cells) {
            bool is_blocked = false;
            for (int64_t s : blocked)
                if (s == c) { is_blocked = true; break; }
            if (is_blocked) continue;
            for (int64_t hp = 1; hp <= y; ++hp) {
                Triangle cand{c, y - hp, hp};
                if (!triangle_legal(cand, board_)) continue;
                if (outcome_unchecked(cand) == Outcome::P) return true;
            }
        }
        return false;
    }

    Board board_;
    WindowMode mode_;
    std::unordered_map<detail::TriKey, Outcome, detail::TriKeyHash> memo_;
};

}  // namespace blockca
