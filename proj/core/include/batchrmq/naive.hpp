#pragma once

#include <span>
#include <stdexcept>

#include "batchrmq/types.hpp"

namespace batchrmq {

/// Linear-scan range minimum. Returns the LEFTMOST position of the minimum
/// of values[q.left .. q.right]. This is the ground-truth oracle all other
/// algorithms are tested against.
inline Index naive_rmq(std::span<const Value> values, const Query& q) {
    if (q.right >= values.size())
        throw std::out_of_range("naive_rmq: query exceeds array bounds");
    Index best = q.left;
    for (Index i = q.left + 1; i <= q.right; ++i) {
        if (values[i] < values[best]) best = i;
    }
    return best;
}

}  // namespace batchrmq
