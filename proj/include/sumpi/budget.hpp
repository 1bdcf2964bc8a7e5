#pragma once

#include <cstdint>
#include <stdexcept>

namespace sumpi {

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Work budget for identity sweeps, counted in element multiplications.
/// Sweeps reserve their worst-case cost up front and refund the unused part,
/// so accounting is independent of execution order and worker count.
class Budget {
public:
    static constexpr uint64_t kDefaultLimit = 100'000'000;

    explicit Budget(uint64_t limit = kDefaultLimit) : limit_(limit) {}

    uint64_t limit() const { return limit_; }
    uint64_t used() const { return used_; }
    uint64_t remaining() const { return limit_ - used_; }

    bool fits(uint64_t cost) const { return cost <= remaining(); }

    void charge(uint64_t cost) {
        if (!fits(cost))
            throw BudgetError("element-multiplication budget exceeded (limit " +
                              std::to_string(limit_) + ")");
        used_ += cost;
    }

    void refund(uint64_t cost) { used_ -= cost < used_ ? cost : used_; }

private:
    uint64_t limit_;
    uint64_t used_ = 0;
};

// Saturating helpers for predicted sweep sizes.
uint64_t sat_mul(uint64_t a, uint64_t b);
uint64_t sat_pow(uint64_t base, unsigned exp);
uint64_t binom_sat(unsigned n, unsigned k);

}  // namespace sumpi
