#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gtwist/rotation_system.hpp"

namespace gtwist {

// Total-order-comparable normal form of a rotation system under relabeling
// and inversion (weak isomorphism).  Encodes [n, row(0), ..., row(n-1)] of
// the lexicographically smallest transformed table.
struct CanonicalKey {
    std::vector<std::uint8_t> bytes;

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
        return a.bytes <=> b.bytes;
    }

    std::string to_hex() const;
};

inline constexpr int kCanonicalKeyMaxN = 9;

// Minimum over all n! relabelings x {identity, inversion}.  Factorial cost;
// intended for catalog-scale n only, throws PreconditionError for
// n > kCanonicalKeyMaxN.
CanonicalKey canonical_key(const RotationSystem& rs);

}  // namespace gtwist
