#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace batchrmq {

/// Largest e with 2^e <= x. Branch-free via std::bit_width; throws on x == 0.
inline std::uint32_t floor_log2(std::uint64_t x) {
    if (x == 0) throw std::domain_error("floor_log2: argument must be positive");
    return static_cast<std::uint32_t>(std::bit_width(x) - 1);
}

}  // namespace batchrmq
