#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coanet/index/graph.hpp"

namespace coanet {

/// CSR form of a CoauthorGraph for the centrality kernels. Vertex ids are the
/// ranks of the canonical names in sorted order, so the mapping is stable for
/// a given graph; neighbor lists are sorted by id.
struct CompactGraph {
    std::vector<std::string> names;       // id -> canonical name, sorted
    std::vector<int> publications;        // id -> publication count
    std::vector<std::size_t> offsets;     // size node_count() + 1
    std::vector<std::uint32_t> adjacency; // neighbor ids
    std::vector<int> weights;             // parallel to adjacency, all >= 1

    static CompactGraph from(const CoauthorGraph& graph);

    std::size_t node_count() const { return names.size(); }
    std::size_t edge_count() const { return adjacency.size() / 2; }
    std::size_t degree(std::uint32_t v) const { return offsets[v + 1] - offsets[v]; }
};

} // namespace coanet
