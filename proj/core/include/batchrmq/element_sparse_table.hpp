#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "batchrmq/types.hpp"

namespace batchrmq {

/// Doubling table over individual elements: row e holds, for every start j,
/// the position of the minimum of values[j .. j + 2^e - 1]. Rows are stored
/// jagged (only starts where the full span fits), so row e has n - 2^e + 1
/// entries and row 0 is the identity. Ties resolve to the leftmost position,
/// which makes arg_min agree with naive_rmq exactly.
class ElementSparseTable {
public:
    ElementSparseTable() = default;
    explicit ElementSparseTable(std::span<const Value> values);

    /// Two-lookup range minimum: with e = floor_log2(right - left), combines
    /// the stored minima of [left, left + 2^e - 1] and [right - 2^e + 1, right].
    Index arg_min(std::span<const Value> values, const Query& q) const;

    std::size_t size() const { return n_; }
    std::size_t level_count() const { return rows_.size(); }
    const std::vector<std::uint32_t>& level(std::size_t e) const { return rows_[e]; }

    /// Total stored entries; construction performs exactly this many writes.
    std::size_t cell_count() const;

private:
    std::size_t n_{0};
    std::vector<std::vector<std::uint32_t>> rows_;
};

}  // namespace batchrmq
