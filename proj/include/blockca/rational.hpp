#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace blockca {

// Exact dyadic rational num / 2^log2_den. All rescaled diagram coordinates are
// dyadic, so this covers every verification path with no floating point.
class Dyadic {
public:
    Dyadic(int64_t num = 0, int log2_den = 0) : num_(num), k_(log2_den) {
        if (log2_den < 0 || log2_den > 62)
            throw std::invalid_argument("Dyadic: log2_den out of range");
        normalize();
    }

    static Dyadic from_int(int64_t v) { return Dyadic(v, 0); }

    int64_t num() const { return num_; }
    int log2_den() const { return k_; }
    int64_t den() const { return int64_t{1} << k_; }

    Dyadic operator+(const Dyadic& o) const {
        int k = std::max(k_, o.k_);
        return Dyadic((num_ << (k - k_)) + (o.num_ << (k - o.k_)), k);
    }
    Dyadic operator-(const Dyadic& o) const {
        int k = std::max(k_, o.k_);
        return Dyadic((num_ << (k - k_)) - (o.num_ << (k - o.k_)), k);
    }
    Dyadic half() const { return Dyadic(num_, k_ + 1); }
    Dyadic abs() const { return Dyadic(num_ < 0 ? -num_ : num_, k_); }

    bool operator==(const Dyadic& o) const { return num_ == o.num_ && k_ == o.k_; }
    bool operator!=(const Dyadic& o) const { return !(*this == o); }

    bool is_integer() const { return k_ == 0; }

    // "p" when the denominator is 1, else "p/q".
    std::string str() const {
        if (k_ == 0) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den());
    }

private:
    void normalize() {
        while (k_ > 0 && (num_ & 1) == 0) {
            num_ >>= 1;
            --k_;
        }
    }

    int64_t num_;
    int k_;
};

}  // namespace blockca
