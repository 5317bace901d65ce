#pragma once

#include <cstdint>

#include "tape.hpp"

namespace blockca {

// splitmix64: the project's fixed random-bit source. Every "random" initial
// condition is derived from it, so a (seed, width) pair pins the exact bits on
// any platform. Changing this generator is a breaking change for golden files.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    bool next_bit() { return next() >> 63; }

    // Uniform in [0, n), n > 0. Rejection-free modulo is fine here: n is tiny
    // compared to 2^64, bias is far below anything the tests can observe, and
    // the result is identical on every platform.
    uint64_t next_below(uint64_t n) { return next() % n; }

private:
    uint64_t state_;
};

// width random bits on [0, width), zero fills.
inline Tape random_tape(uint64_t seed, int64_t width, int64_t origin = 0) {
    SplitMix64 rng(seed);
    BitVec core(static_cast<size_t>(width));
    for (int64_t i = 0; i < width; ++i) core.set(static_cast<size_t>(i), rng.next_bit());
    return Tape(origin, std::move(core), false, false);
}

}  // namespace blockca
