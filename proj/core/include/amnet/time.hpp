#pragma once

#include <cstdint>

#include "amnet/errors.hpp"

namespace amnet {

// Integer seconds since simulation epoch 0. No sub-second events exist,
// so expiry comparisons are exact and never drift.
using Timestamp = std::int64_t;
using Seconds = std::int64_t;

inline constexpr Seconds kMinute = 60;
inline constexpr Seconds kHour = 60 * kMinute;
inline constexpr Seconds kDay = 24 * kHour;

/// Virtual clock owned by the scenario runner. The single mutation point
/// enforces monotonicity: time only moves forward.
class VirtualClock {
public:
    Timestamp now() const noexcept { return now_; }

    void advance(Seconds delta) {
        if (delta < 0) {
            throw SimError("clock: negative advance rejected");
        }
        now_ += delta;
    }

    void advance_to(Timestamp t) {
        if (t < now_) {
            throw SimError("clock: cannot move to an earlier time");
        }
        now_ = t;
    }

private:
    Timestamp now_{0};
};

}  // namespace amnet
