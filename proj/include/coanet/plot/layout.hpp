#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "coanet/centrality/betweenness.hpp"
#include "coanet/index/graph.hpp"

namespace coanet {

struct LayoutConfig {
    int width = 1200;
    int height = 1200;
    int iterations = 300;
    std::uint64_t seed = 42;
    int label_top_k = 10;

    /// Throws ConfigError: width and height >= 64, iterations >= 1,
    /// label_top_k >= 0.
    void validate() const;
};

struct NodeLayout {
    /// Positions in [margin, width-margin] x [margin, height-margin].
    std::map<std::string, std::pair<double, double>> positions;
    /// Node radius in pixels: 3 + 21 * normalized betweenness.
    std::map<std::string, double> radii;
};

inline constexpr double kMinRadius = 3.0;
inline constexpr double kMaxRadius = 24.0;
inline constexpr double kCanvasMargin = 32.0;

/// Fruchterman-Reingold force-directed layout: repulsion k^2/d between all
/// pairs, attraction d^2/k along edges, k = sqrt(area/n), displacement capped
/// by a linearly cooling temperature. Initial positions come from a generator
/// seeded with cfg.seed, so identical inputs and seed give identical output.
/// A single node is centered. Throws EmptyGraphError for an empty graph;
/// `scores` must cover every graph node.
NodeLayout layout(const CoauthorGraph& graph, const BetweennessResult& scores,
                  const LayoutConfig& cfg);

} // namespace coanet
