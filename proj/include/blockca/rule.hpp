#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace blockca {

// Rule quadruple (gamma, left, right, block). delta = gamma + left + right is
// derived on construction and can never go stale. Construction rejects any
// quadruple with delta <= block.
class RuleParams {
public:
    RuleParams(int64_t gamma, int64_t left, int64_t right, int64_t block)
        : gamma_(gamma), left_(left), right_(right), block_(block),
          delta_(gamma + left + right) {
        if (gamma < 2) throw std::invalid_argument("RuleParams: gamma must be >= 2");
        if (left < 0 || right < 0 || block < 0)
            throw std::invalid_argument("RuleParams: left, right, block must be >= 0");
        if (delta_ <= block_)
            throw std::invalid_argument("RuleParams: delta = gamma+left+right must exceed block");
    }

    int64_t gamma() const { return gamma_; }
    int64_t left() const { return left_; }
    int64_t right() const { return right_; }
    int64_t block() const { return block_; }
    int64_t delta() const { return delta_; }

    bool operator==(const RuleParams& o) const {
        return gamma_ == o.gamma_ && left_ == o.left_ && right_ == o.right_ && block_ == o.block_;
    }

    std::string to_string() const {
        return "gamma=" + std::to_string(gamma_) + " left=" + std::to_string(left_) +
               " right=" + std::to_string(right_) + " block=" + std::to_string(block_);
    }

private:
    int64_t gamma_, left_, right_, block_, delta_;
};

}  // namespace blockca
