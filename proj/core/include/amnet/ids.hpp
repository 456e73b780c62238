#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "amnet/rng.hpp"

namespace amnet {

enum class IdKind {
    Affiliate,
    Advertiser,
    Offer,
    Session,
    Click,
    Conversion,
    Booking,
    Profile,
    Device,
};

inline constexpr std::size_t kIdKindCount = 9;

const char* id_prefix(IdKind kind);

/// Opaque token unique per (kind, run). The value embeds a per-kind sequence
/// number, so collisions are impossible; the suffix comes from a stateless
/// SplitMix64 mix of (seed, kind, sequence), so values are reproducible under
/// a seed regardless of interleaving with other kinds.
struct Identifier {
    IdKind kind{IdKind::Session};
    std::string value;

    bool operator==(const Identifier&) const = default;
    auto operator<=>(const Identifier&) const = default;
};

/// Names a party declared in the scenario file rather than generated.
Identifier named_id(IdKind kind, std::string value);

class IdGenerator {
public:
    explicit IdGenerator(std::uint64_t seed) : seed_(seed) {}

    Identifier next(IdKind kind);

private:
    std::uint64_t seed_;
    std::array<std::uint64_t, kIdKindCount> counters_{};
};

}  // namespace amnet
