#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "coanet/centrality/compact_graph.hpp"
#include "coanet/index/graph.hpp"
#include "coanet/util/datestamp.hpp"

namespace coanet {

/// How path lengths are measured: every edge counts 1, or distance 1/weight
/// so that frequent collaborations are "closer".
enum class EdgeMode { unweighted, weighted };

std::string_view to_string(EdgeMode mode);

struct BetweennessResult {
    EdgeMode mode = EdgeMode::unweighted;
    std::size_t node_count = 0;
    Datestamp computed_at;
    /// Raw betweenness, each unordered pair counted once. Bounded by
    /// (n-1)(n-2)/2.
    std::map<std::string, double> raw;
    /// raw / ((n-1)(n-2)/2) for n >= 3, otherwise 0.
    std::map<std::string, double> normalized;
};

struct BetweennessOptions {
    EdgeMode mode = EdgeMode::unweighted;
    bool parallel = true;
    int threads = 0; ///< 0 = OpenMP default
};

/// Brandes' exact algorithm over all sources. Empty graph gives an empty
/// result; disconnected pairs contribute nothing; isolated nodes score 0.
BetweennessResult betweenness(const CoauthorGraph& graph, const BetweennessOptions& opts);
BetweennessResult betweenness(const CoauthorGraph& graph, EdgeMode mode = EdgeMode::unweighted);

/// Reference kernel: one source at a time with explicit predecessor lists.
/// Returns raw scores indexed by CompactGraph vertex id.
std::vector<double> brandes_serial(const CompactGraph& g, EdgeMode mode);

/// OpenMP kernel: sources split statically across threads, each accumulating
/// into a private vector, merged in thread order; predecessors recovered by
/// rescanning neighbor distances instead of storing lists. Bit-stable across
/// runs for a fixed thread count.
std::vector<double> brandes_parallel(const CompactGraph& g, EdgeMode mode, int threads = 0);

} // namespace coanet
