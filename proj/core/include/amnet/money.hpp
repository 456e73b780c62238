#pragma once

#include <cstdint>
#include <string>

#include "amnet/errors.hpp"

namespace amnet {

/// Exact currency amount in minor units (cents). Prices and commissions are
/// non-negative everywhere; signed adjustments appear only as settlement
/// ledger deltas, never as Money.
struct Money {
    std::int64_t minor{0};
    std::string currency{"USD"};

    bool operator==(const Money&) const = default;
};

inline Money money(std::int64_t minor, std::string currency = "USD") {
    return Money{minor, std::move(currency)};
}

inline Money operator+(const Money& a, const Money& b) {
    if (a.currency != b.currency) {
        throw SimError("money: currency mismatch " + a.currency + " vs " + b.currency);
    }
    return Money{a.minor + b.minor, a.currency};
}

inline Money& operator+=(Money& a, const Money& b) {
    a = a + b;
    return a;
}

/// rate expressed in basis points of total price, rounded half-up to minor
/// units. Integer arithmetic throughout, so splits are reproducible.
inline std::int64_t commission_minor(std::int64_t price_minor, std::int64_t rate_bps) {
    if (price_minor < 0 || rate_bps < 0) {
        throw SimError("money: negative commission inputs");
    }
    const std::int64_t numerator = price_minor * rate_bps;
    return (numerator + 5000) / 10000;
}

/// "12.34 USD" style rendering for summaries; artifacts keep minor units.
std::string to_display(const Money& m);

}  // namespace amnet
