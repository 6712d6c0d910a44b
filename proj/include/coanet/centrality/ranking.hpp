#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coanet/centrality/betweenness.hpp"
#include "coanet/index/graph.hpp"

namespace coanet {

struct RankedAuthor {
    int rank = 0; ///< 1-based, dense
    std::string author; ///< canonical name
    double raw = 0.0;
    double normalized = 0.0;
    int publication_count = 0;
};

struct CentralityRanking {
    PartitionKey partition;
    std::size_t k = 0; ///< requested size; entries may be fewer
    std::vector<RankedAuthor> entries;
};

/// Top min(k, node_count) authors ordered by raw score descending, ties by
/// canonical name ascending: a total order, so equal scores still rank
/// deterministically.
CentralityRanking top_central(const BetweennessResult& result, const CoauthorGraph& graph,
                              std::size_t k, const PartitionKey& partition);

} // namespace coanet
