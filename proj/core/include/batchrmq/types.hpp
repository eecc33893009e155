#pragma once

#include <cstdint>
#include <vector>

namespace batchrmq {

using Value = std::int32_t;
using Index = std::uint64_t;

/// Inclusive 0-based index range [left, right] into an input array.
/// The constructor normalizes reversed input by swapping the endpoints.
struct Query {
    Index left{0};
    Index right{0};

    Query() = default;
    Query(Index l, Index r) : left(l), right(r) {
        if (left > right) std::swap(left, right);
    }

    bool operator==(const Query&) const = default;
};

/// Batch of queries; answers are always emitted in this (input) order.
using QueryBatch = std::vector<Query>;

/// Answer positions, one per query, in input order.
using Answers = std::vector<Index>;

}  // namespace batchrmq
