#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "board.hpp"
#include "triangle.hpp"

namespace blockca {

enum class Outcome : uint8_t { P, N };

inline char outcome_char(Outcome o) { return o == Outcome::P ? 'P' : 'N'; }

namespace detail {

inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct TriKey {
    int64_t x, y, h;
    bool operator==(const TriKey&) const = default;
};
struct TriKeyHash {
    size_t operator()(const TriKey& k) const {
        return mix64(static_cast<uint64_t>(k.x) * 0x9E3779B97F4A7C15ull ^
                     mix64(static_cast<uint64_t>(k.y)) ^
                     mix64(static_cast<uint64_t>(k.h) + 0x1234567ull));
    }
};

struct CellKey {
    int64_t col, level;
    bool operator==(const CellKey&) const = default;
};
struct CellKeyHash {
    size_t operator()(const CellKey& k) const {
        return mix64(static_cast<uint64_t>(k.col) * 0x9E3779B97F4A7C15ull ^
                     mix64(static_cast<uint64_t>(k.level)));
    }
};

}  // namespace detail

// First N-window of an N-position, with the columns that witness it.
struct SolveWitness {
    Window window;
    std::vector<int64_t> good_cells;
};

// Exact outcome solver. The blocking maneuver is compiled to counting: the
// blocker sees the proposed window and removes good cells first, so the mover
// wins through a window exactly when it holds more than block good cells. A
// window cell is good when some placement topped there is a P-position.
//
// Single-writer: one instance owns its memo tables. Run one instance per
// thread over the same immutable Board for parallel sweeps.
class OutcomeSolver {
public:
    OutcomeSolver(Board board, WindowMode mode = WindowMode::anchored)
        : board_(std::move(board)), mode_(mode) {
        if (board_.level0.all_zero())
            throw std::invalid_argument("OutcomeSolver: board has no obstacles");
    }

    const Board& board() const { return board_; }

    Outcome outcome(const Triangle& t) {
        if (!triangle_legal(t, board_))
            throw std::invalid_argument("outcome: illegal triangle");
        return outcome_unchecked(t);
    }

    // True when some legal placement with top at (col, level) is a P-position.
    bool placeable_p(int64_t col, int64_t level) {
        detail::CellKey key{col, level};
        if (auto it = place_memo_.find(key); it != place_memo_.end()) return it->second;
        bool res = false;
        for (int64_t hp = 1; hp <= level + 1; ++hp) {
            Triangle cand{col, level + 1 - hp, hp};
            if (!triangle_legal(cand, board_)) continue;
            if (outcome_unchecked(cand) == Outcome::P) {
                res = true;
                break;
            }
        }
        place_memo_.emplace(key, res);
        return res;
    }

    std::vector<int64_t> good_cells(const Window& w) {
        std::vector<int64_t> out;
        for (int64_t c = w.lo; c <= w.hi; ++c)
            if (placeable_p(c, w.level)) out.push_back(c);
        return out;
    }

    // Outcome plus, for N, the first window (in anchor order) with more good
    // cells than the blocker can cover.
    std::pair<Outcome, std::optional<SolveWitness>> solve_report(const Triangle& t) {
        Outcome o = outcome(t);
        if (o == Outcome::N) {
            for (const Window& w : window_anchors(t, board_.params, mode_)) {
                auto good = good_cells(w);
                if (static_cast<int64_t>(good.size()) > board_.params.block())
                    return {o, SolveWitness{w, std::move(good)}};
            }
        }
        return {o, std::nullopt};
    }

    size_t memo_size() const { return memo_.size(); }

private:
    Outcome outcome_unchecked(const Triangle& t) {
        if (t.y == 0) return Outcome::P;  // no move windows: mover loses
        detail::TriKey key{t.x, t.y, t.h};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Outcome res = Outcome::P;
        for (const Window& w : window_anchors(t, board_.params, mode_)) {
            int64_t good = 0;
            for (int64_t c = w.lo; c <= w.hi && good <= board_.params.block(); ++c)
                if (placeable_p(c, w.level)) ++good;
            if (good > board_.params.block()) {
                res = Outcome::N;
                break;
            }
        }
        memo_.emplace(key, res);
        return res;
    }

    Board board_;
    WindowMode mode_;
    std::unordered_map<detail::TriKey, Outcome, detail::TriKeyHash> memo_;
    std::unordered_map<detail::CellKey, bool, detail::CellKeyHash> place_memo_;
};

}  // namespace blockca
