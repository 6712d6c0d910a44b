#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "coanet/centrality/betweenness.hpp"
#include "coanet/centrality/ranking.hpp"
#include "coanet/index/graph.hpp"
#include "coanet/plot/layout.hpp"

namespace coanet {

/// Plots keep the repulsion loop and the image legible by rendering at most
/// this many nodes.
inline constexpr std::size_t kMaxPlotNodes = 500;

/// Induced subgraph on the max_nodes highest-betweenness nodes (raw score
/// descending, canonical name ascending). *truncated reports whether any node
/// was dropped.
CoauthorGraph induced_top_subgraph(const CoauthorGraph& graph,
                                   const BetweennessResult& scores,
                                   std::size_t max_nodes, bool* truncated = nullptr);

/// Rasterize a laid-out graph: edges as lines with opacity growing with
/// weight (capped), nodes as filled circles with the layout's radii, text
/// labels for the ranking entries. Labels use display_names where present,
/// otherwise the canonical name.
std::string render_png(const CoauthorGraph& graph, const NodeLayout& layout,
                       const CentralityRanking& ranking, const LayoutConfig& cfg,
                       const std::map<std::string, std::string>& display_names = {});

struct PlotOutput {
    std::string png;
    bool truncated = false;
};

/// Whole pipeline: cap at kMaxPlotNodes, lay out, pick the top label_top_k
/// labels, rasterize. Throws EmptyGraphError for an empty graph.
PlotOutput render_network(const CoauthorGraph& graph, const BetweennessResult& scores,
                          const LayoutConfig& cfg,
                          const std::map<std::string, std::string>& display_names = {});

} // namespace coanet
