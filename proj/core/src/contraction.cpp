#include "batchrmq/contraction.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <stdexcept>

#include "batchrmq/parallel.hpp"

namespace batchrmq {

std::vector<Endpoint> collect_endpoints(const QueryBatch& batch) {
    if (batch.size() > (std::size_t{1} << 31))
        throw std::invalid_argument("collect_endpoints: too many queries for 32-bit origins");
    std::vector<Endpoint> endpoints;
    endpoints.reserve(batch.size() * 2);
    for (std::uint32_t i = 0; i < batch.size(); ++i) {
        endpoints.push_back({static_cast<std::uint32_t>(batch[i].left), Endpoint::make_origin(i, false)});
        endpoints.push_back({static_cast<std::uint32_t>(batch[i].right), Endpoint::make_origin(i, true)});
    }
    return endpoints;
}

namespace {

void radix_sort_by_pos(std::vector<Endpoint>& endpoints) {
    const std::size_t n = endpoints.size();
    if (n < 64) {
        std::sort(endpoints.begin(), endpoints.end(),
                  [](const Endpoint& a, const Endpoint& b) { return a.pos < b.pos; });
        return;
    }

    std::array<std::array<std::size_t, 256>, 4> hist{};
    for (const Endpoint& e : endpoints) {
        hist[0][e.pos & 0xFF]++;
        hist[1][(e.pos >> 8) & 0xFF]++;
        hist[2][(e.pos >> 16) & 0xFF]++;
        hist[3][(e.pos >> 24) & 0xFF]++;
    }

    std::vector<Endpoint> buffer(n);
    Endpoint* src = endpoints.data();
    Endpoint* dst = buffer.data();
    for (unsigned pass = 0; pass < 4; ++pass) {
        auto& counts = hist[pass];
        // a constant key byte leaves the order unchanged
        if (std::any_of(counts.begin(), counts.end(), [n](std::size_t c) { return c == n; }))
            continue;
        std::size_t offset = 0;
        std::array<std::size_t, 256> start;
        for (unsigned b = 0; b < 256; ++b) {
            start[b] = offset;
            offset += counts[b];
        }
        const unsigned shift = pass * 8;
        for (std::size_t i = 0; i < n; ++i) dst[start[(src[i].pos >> shift) & 0xFF]++] = src[i];
        std::swap(src, dst);
    }
    if (src != endpoints.data())
        std::copy(src, src + n, endpoints.data());
}

}  // namespace

void sort_endpoints(std::vector<Endpoint>& endpoints, SortKind kind) {
    if (kind == SortKind::Radix) {
        radix_sort_by_pos(endpoints);
    } else {
        std::sort(endpoints.begin(), endpoints.end(),
                  [](const Endpoint& a, const Endpoint& b) { return a.pos < b.pos; });
    }
}

namespace {

// Scans values[boundary[first_area] .. boundary[last_area + 1]] once, filling
// minima for areas [first_area, last_area]. An element on a shared boundary
// updates both adjacent areas but is read only once.
void scan_areas(std::span<const Value> values, const std::vector<Index>& boundary,
                std::size_t first_area, std::size_t last_area,
                std::vector<Value>& aq_values, std::vector<Index>& aq_origin,
                std::uint64_t* reads) {
    std::size_t area = first_area;
    Value cur_min = values[boundary[first_area]];
    Index cur_pos = boundary[first_area];
    std::uint64_t local_reads = 1;

    for (Index pos = boundary[first_area] + 1; pos <= boundary[last_area + 1]; ++pos) {
        const Value v = values[pos];
        ++local_reads;
        if (v < cur_min) {
            cur_min = v;
            cur_pos = pos;
        }
        if (pos == boundary[area + 1]) {
            aq_values[area] = cur_min;
            aq_origin[area] = cur_pos;
            ++area;
            if (area > last_area) break;
            // the boundary element itself opens the next area
            cur_min = v;
            cur_pos = pos;
        }
    }
    if (reads) *reads += local_reads;
}

}  // namespace

ContractedArray build_contracted(std::span<const Value> values,
                                 const std::vector<Endpoint>& sorted_endpoints,
                                 unsigned threads, ContractionStats* stats) {
    ContractedArray out;
    if (sorted_endpoints.empty()) return out;

    out.boundary.reserve(sorted_endpoints.size());
    std::uint32_t prev = sorted_endpoints.front().pos;
    out.boundary.push_back(prev);
    for (const Endpoint& e : sorted_endpoints) {
        if (e.pos != prev) {
            if (e.pos < prev) throw std::invalid_argument("build_contracted: endpoints not sorted");
            out.boundary.push_back(e.pos);
            prev = e.pos;
        }
    }

    const std::size_t areas = out.boundary.size() - 1;
    if (areas == 0) return out;
    out.aq_values.resize(areas);
    out.aq_origin.resize(areas);

    if (threads <= 1) {
        std::uint64_t reads = 0;
        scan_areas(values, out.boundary, 0, areas - 1, out.aq_values, out.aq_origin,
                   stats ? &reads : nullptr);
        if (stats) stats->array_reads += reads;
        return out;
    }

    std::atomic<std::uint64_t> total_reads{0};
    parallel_chunks(areas, threads, [&](std::size_t begin, std::size_t end, unsigned) {
        std::uint64_t reads = 0;
        scan_areas(values, out.boundary, begin, end - 1, out.aq_values, out.aq_origin,
                   stats ? &reads : nullptr);
        if (stats) total_reads.fetch_add(reads, std::memory_order_relaxed);
    });
    if (stats) stats->array_reads += total_reads.load();
    return out;
}

ContractedQueryBatch remap_queries(const QueryBatch& batch, const ContractedArray& contracted) {
    ContractedQueryBatch out(batch.size());
    const auto& boundary = contracted.boundary;
    auto index_of = [&](Index pos) -> std::uint32_t {
        auto it = std::lower_bound(boundary.begin(), boundary.end(), pos);
        if (it == boundary.end() || *it != pos)
            throw std::logic_error("remap_queries: endpoint missing from boundary");
        return static_cast<std::uint32_t>(it - boundary.begin());
    };
    for (std::size_t i = 0; i < batch.size(); ++i) {
        const Query& q = batch[i];
        if (q.left == q.right) {
            out[i].degenerate = true;
            continue;
        }
        out[i].cleft = index_of(q.left);
        out[i].cright = index_of(q.right) - 1;
    }
    return out;
}

ContractedQueryBatch remap_queries_from_sorted(const std::vector<Endpoint>& sorted_endpoints,
                                               const ContractedArray& contracted,
                                               std::size_t query_count) {
    ContractedQueryBatch out(query_count);
    const auto& boundary = contracted.boundary;
    std::size_t b = 0;
    for (const Endpoint& e : sorted_endpoints) {
        while (b + 1 < boundary.size() && boundary[b] < e.pos) ++b;
        if (b >= boundary.size() || boundary[b] != e.pos)
            throw std::logic_error("remap_queries_from_sorted: endpoint missing from boundary");
        auto& cq = out[e.query_index()];
        if (e.is_right()) {
            cq.cright = static_cast<std::uint32_t>(b);  // adjusted below
        } else {
            cq.cleft = static_cast<std::uint32_t>(b);
        }
    }
    for (auto& cq : out) {
        if (cq.cright == cq.cleft) {
            cq.degenerate = true;
        } else {
            --cq.cright;
        }
    }
    return out;
}

}  // namespace batchrmq
