#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>

#include "bitvec.hpp"

namespace blockca {

// One bi-infinite, eventually constant row of cells. Cells left of the core
// read left_fill, cells right of it read right_fill. Normal form: the core is
// empty, or its first bit differs from left_fill and its last bit differs from
// right_fill. Every Tape built through this interface is in normal form.
class Tape {
public:
    Tape() = default;

    Tape(int64_t origin, BitVec core, bool left_fill, bool right_fill)
        : origin_(origin), core_(std::move(core)), lf_(left_fill), rf_(right_fill) {
        normalize();
    }

    static Tape constant(bool fill) { return Tape(0, BitVec(), fill, fill); }

    // 1-cells at the given coordinates, 0 elsewhere.
    static Tape from_ones(const std::set<int64_t>& ones) {
        if (ones.empty()) return constant(false);
        int64_t lo = *ones.begin(), hi = *ones.rbegin();
        BitVec core(static_cast<size_t>(hi - lo + 1));
        for (int64_t x : ones) core.set(static_cast<size_t>(x - lo), true);
        return Tape(lo, std::move(core), false, false);
    }

    // 1 iff x >= threshold.
    static Tape step_at(int64_t threshold) { return Tape(threshold, BitVec(), false, true); }

    bool cell(int64_t x) const {
        if (x < origin_) return lf_;
        int64_t i = x - origin_;
        if (i >= static_cast<int64_t>(core_.size())) return rf_;
        return core_.get(static_cast<size_t>(i));
    }

    int64_t origin() const { return origin_; }
    const BitVec& core() const { return core_; }
    bool left_fill() const { return lf_; }
    bool right_fill() const { return rf_; }

    int64_t core_end() const { return origin_ + static_cast<int64_t>(core_.size()); }

    // Ones in the inclusive cell range [lo, hi].
    int64_t count_ones(int64_t lo, int64_t hi) const {
        if (lo > hi) return 0;
        int64_t n = 0;
        int64_t clo = origin_, chi = core_end();  // core occupies [clo, chi)
        if (lf_ && lo < clo) n += std::min(hi + 1, clo) - lo;
        if (rf_ && hi >= chi) n += hi + 1 - std::max(lo, chi);
        int64_t a = std::max(lo, clo), b = std::min(hi + 1, chi);
        if (a < b)
            n += static_cast<int64_t>(
                core_.popcount_range(static_cast<size_t>(a - clo), static_cast<size_t>(b - clo)));
        return n;
    }

    int64_t count_zeros(int64_t lo, int64_t hi) const {
        return lo > hi ? 0 : (hi - lo + 1) - count_ones(lo, hi);
    }

    bool all_zero() const { return core_.empty() && !lf_ && !rf_; }

    Tape translated(int64_t k) const { return Tape(origin_ + k, core_, lf_, rf_); }

    bool operator==(const Tape& o) const {
        return origin_ == o.origin_ && lf_ == o.lf_ && rf_ == o.rf_ && core_ == o.core_;
    }

private:
    void normalize() {
        size_t a = 0, b = core_.size();
        while (a < b && core_.get(a) == lf_) ++a;
        while (b > a && core_.get(b - 1) == rf_) --b;
        if (a == 0 && b == core_.size()) return;
        origin_ += static_cast<int64_t>(a);
        core_ = core_.slice(a, b);
    }

    int64_t origin_ = 0;
    BitVec core_;
    bool lf_ = false;
    bool rf_ = false;
};

}  // namespace blockca
