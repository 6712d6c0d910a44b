#include "coanet/centrality/betweenness.hpp"

namespace coanet {

std::string_view to_string(EdgeMode mode) {
    return mode == EdgeMode::weighted ? "weighted" : "unweighted";
}

BetweennessResult betweenness(const CoauthorGraph& graph, const BetweennessOptions& opts) {
    CompactGraph g = CompactGraph::from(graph);
    std::vector<double> raw = opts.parallel
                                  ? brandes_parallel(g, opts.mode, opts.threads)
                                  : brandes_serial(g, opts.mode);

    const std::size_t n = g.node_count();
    const double pairs =
        n >= 3 ? static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0 : 0.0;

    BetweennessResult result;
    result.mode = opts.mode;
    result.node_count = n;
    for (std::size_t i = 0; i < n; ++i) {
        result.raw.emplace(g.names[i], raw[i]);
        result.normalized.emplace(g.names[i], pairs > 0.0 ? raw[i] / pairs : 0.0);
    }
    result.computed_at = Datestamp::now();
    return result;
}

BetweennessResult betweenness(const CoauthorGraph& graph, EdgeMode mode) {
    BetweennessOptions opts;
    opts.mode = mode;
    return betweenness(graph, opts);
}

} // namespace coanet
