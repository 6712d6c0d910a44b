#include "coanet/centrality/compact_graph.hpp"

#include <string_view>
#include <unordered_map>

namespace coanet {

CompactGraph CompactGraph::from(const CoauthorGraph& graph) {
    CompactGraph g;
    g.names.reserve(graph.publication_count.size());
    g.publications.reserve(graph.publication_count.size());
    for (const auto& [name, count] : graph.publication_count) {
        g.names.push_back(name);
        g.publications.push_back(count);
    }

    std::unordered_map<std::string_view, std::uint32_t> id;
    id.reserve(g.names.size());
    for (std::uint32_t i = 0; i < g.names.size(); ++i)
        id.emplace(g.names[i], i);

    g.offsets.assign(g.names.size() + 1, 0);
    for (std::uint32_t i = 0; i < g.names.size(); ++i) {
        auto it = graph.adjacency.find(g.names[i]);
        std::size_t degree = it == graph.adjacency.end() ? 0 : it->second.size();
        g.offsets[i + 1] = g.offsets[i] + degree;
    }

    g.adjacency.resize(g.offsets.back());
    g.weights.resize(g.offsets.back());
    for (std::uint32_t i = 0; i < g.names.size(); ++i) {
        auto it = graph.adjacency.find(g.names[i]);
        if (it == graph.adjacency.end())
            continue;
        std::size_t e = g.offsets[i];
        for (const auto& [neighbor, weight] : it->second) {
            g.adjacency[e] = id.at(neighbor);
            g.weights[e] = weight;
            ++e;
        }
    }
    return g;
}

} // namespace coanet
