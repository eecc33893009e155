#include "batchrmq/element_sparse_table.hpp"

#include <limits>
#include <stdexcept>

#include "batchrmq/bits.hpp"

namespace batchrmq {

ElementSparseTable::ElementSparseTable(std::span<const Value> values) : n_(values.size()) {
    if (n_ == 0) throw std::invalid_argument("ElementSparseTable: empty input");
    if (n_ > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("ElementSparseTable: input too long for 32-bit positions");

    const std::uint32_t levels = floor_log2(n_) + 1;
    rows_.resize(levels);
    rows_[0].resize(n_);
    for (std::uint32_t j = 0; j < n_; ++j) rows_[0][j] = j;

    for (std::uint32_t e = 1; e < levels; ++e) {
        const std::size_t half = std::size_t{1} << (e - 1);
        const std::size_t count = n_ - (std::size_t{1} << e) + 1;
        const auto& prev = rows_[e - 1];
        auto& cur = rows_[e];
        cur.resize(count);
        for (std::size_t j = 0; j < count; ++j) {
            const std::uint32_t a = prev[j];
            const std::uint32_t b = prev[j + half];
            cur[j] = values[b] < values[a] ? b : a;  // leftmost wins ties
        }
    }
}

Index ElementSparseTable::arg_min(std::span<const Value> values, const Query& q) const {
    if (values.size() != n_)
        throw std::invalid_argument("ElementSparseTable: array does not match table");
    if (q.right >= n_) throw std::out_of_range("ElementSparseTable: query exceeds bounds");
    if (q.left == q.right) return q.left;

    const std::uint32_t e = floor_log2(q.right - q.left);
    const std::uint32_t a = rows_[e][q.left];
    const std::uint32_t b = rows_[e][q.right - (std::uint64_t{1} << e) + 1];
    return values[b] < values[a] ? b : a;
}

std::size_t ElementSparseTable::cell_count() const {
    std::size_t total = 0;
    for (const auto& row : rows_) total += row.size();
    return total;
}

}  // namespace batchrmq
