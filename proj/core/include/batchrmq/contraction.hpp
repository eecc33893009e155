#pragma once

#include <cstdint>
#include <vector>

#include "batchrmq/types.hpp"

namespace batchrmq {

/// One query endpoint, packed for sorting: pos is the 32-bit sort key,
/// origin carries the query index and a left/right flag as satellite data.
struct Endpoint {
    std::uint32_t pos{0};
    std::uint32_t origin{0};

    static std::uint32_t make_origin(std::uint32_t query_index, bool is_right) {
        return (query_index << 1) | (is_right ? 1u : 0u);
    }
    std::uint32_t query_index() const { return origin >> 1; }
    bool is_right() const { return (origin & 1u) != 0; }
};

enum class SortKind { Radix, Comparison };

/// Array contraction result: one minimum per area between consecutive
/// distinct endpoint positions. Areas are inclusive of both boundaries, so
/// adjacent areas share exactly one position.
struct ContractedArray {
    std::vector<Value> aq_values;    // area minima, at most 2q - 1
    std::vector<Index> aq_origin;    // leftmost original position per minimum
    std::vector<Index> boundary;     // sorted, deduplicated endpoint positions

    std::size_t size() const { return aq_values.size(); }
};

/// Query endpoints remapped into contracted coordinates. Non-degenerate
/// queries satisfy boundary[cleft] == left and boundary[cright + 1] == right;
/// queries with left == right bypass contraction entirely.
struct ContractedQuery {
    std::uint32_t cleft{0};
    std::uint32_t cright{0};
    bool degenerate{false};
};

using ContractedQueryBatch = std::vector<ContractedQuery>;

struct ContractionStats {
    std::uint64_t array_reads{0};
};

std::vector<Endpoint> collect_endpoints(const QueryBatch& batch);

/// Sorts by pos, non-decreasing. Radix is a 4-pass LSD byte sort that skips
/// passes whose key byte is constant; Comparison is std::sort on the key.
void sort_endpoints(std::vector<Endpoint>& endpoints, SortKind kind = SortKind::Radix);

/// Builds the contracted array from sorted endpoints with one linear scan of
/// the input restricted to [boundary.front(), boundary.back()]. threads > 1
/// splits the area list into contiguous chunks processed independently.
/// With stats set, counts every read of `values` (serial path reads <= n).
ContractedArray build_contracted(std::span<const Value> values,
                                 const std::vector<Endpoint>& sorted_endpoints,
                                 unsigned threads = 1,
                                 ContractionStats* stats = nullptr);

/// Per-endpoint lookup by binary search over the boundary list.
ContractedQueryBatch remap_queries(const QueryBatch& batch, const ContractedArray& contracted);

/// Same result computed without searching: a single merge-style walk over the
/// sorted endpoint list and the boundary list. Used by the solve pipeline.
ContractedQueryBatch remap_queries_from_sorted(const std::vector<Endpoint>& sorted_endpoints,
                                               const ContractedArray& contracted,
                                               std::size_t query_count);

}  // namespace batchrmq
