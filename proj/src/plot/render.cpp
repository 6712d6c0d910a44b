#include "coanet/plot/render.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "coanet/plot/canvas.hpp"
#include "coanet/plot/font.hpp"
#include "coanet/plot/png.hpp"

namespace coanet {

CoauthorGraph induced_top_subgraph(const CoauthorGraph& graph,
                                   const BetweennessResult& scores,
                                   std::size_t max_nodes, bool* truncated) {
    if (truncated)
        *truncated = false;
    if (graph.node_count() <= max_nodes)
        return graph;
    if (truncated)
        *truncated = true;

    std::vector<std::pair<double, const std::string*>> order;
    order.reserve(graph.node_count());
    for (const auto& [name, count] : graph.publication_count) {
        auto it = scores.raw.find(name);
        order.emplace_back(it == scores.raw.end() ? 0.0 : it->second, &name);
    }
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first > b.first;
        return *a.second < *b.second;
    });

    std::set<std::string> keep;
    for (std::size_t i = 0; i < max_nodes; ++i)
        keep.insert(*order[i].second);

    CoauthorGraph sub;
    for (const auto& name : keep)
        sub.publication_count[name] = graph.publication_count.at(name);
    for (const auto& [a, neighbors] : graph.adjacency) {
        if (!keep.count(a))
            continue;
        for (const auto& [b, w] : neighbors)
            if (keep.count(b))
                sub.adjacency[a][b] = w;
    }
    return sub;
}

std::string render_png(const CoauthorGraph& graph, const NodeLayout& layout,
                       const CentralityRanking& ranking, const LayoutConfig& cfg,
                       const std::map<std::string, std::string>& display_names) {
    Canvas canvas(cfg.width, cfg.height, Rgba{255, 255, 255, 255});

    for (const auto& [a, neighbors] : graph.adjacency) {
        const auto& pa = layout.positions.at(a);
        for (const auto& [b, w] : neighbors) {
            if (b <= a)
                continue; // each undirected edge once
            const auto& pb = layout.positions.at(b);
            auto alpha = static_cast<std::uint8_t>(std::min(220, 36 * w));
            canvas.draw_line(static_cast<int>(std::lround(pa.first)),
                             static_cast<int>(std::lround(pa.second)),
                             static_cast<int>(std::lround(pb.first)),
                             static_cast<int>(std::lround(pb.second)),
                             Rgba{90, 90, 90, alpha});
        }
    }

    for (const auto& [name, pos] : layout.positions) {
        double r = layout.radii.at(name);
        canvas.fill_circle(pos.first, pos.second, r, Rgba{70, 130, 180, 255});
        canvas.circle_outline(pos.first, pos.second, r, Rgba{30, 60, 90, 255});
    }

    for (const auto& entry : ranking.entries) {
        auto pos = layout.positions.find(entry.author);
        if (pos == layout.positions.end())
            continue;
        auto label_it = display_names.find(entry.author);
        const std::string& label =
            label_it == display_names.end() ? entry.author : label_it->second;
        int x = static_cast<int>(std::lround(pos->second.first +
                                             layout.radii.at(entry.author) + 3.0));
        int y = static_cast<int>(std::lround(pos->second.second - kGlyphHeight / 2.0));
        canvas.draw_text(x, y, label, Rgba{10, 10, 10, 255});
    }

    return encode_png(canvas.width(), canvas.height(), canvas.pixels());
}

PlotOutput render_network(const CoauthorGraph& graph, const BetweennessResult& scores,
                          const LayoutConfig& cfg,
                          const std::map<std::string, std::string>& display_names) {
    cfg.validate();
    PlotOutput out;
    CoauthorGraph sub = induced_top_subgraph(graph, scores, kMaxPlotNodes, &out.truncated);
    NodeLayout positions = layout(sub, scores, cfg);
    CentralityRanking labels = top_central(scores, sub,
                                           static_cast<std::size_t>(cfg.label_top_k),
                                           PartitionKey::repository_wide());
    out.png = render_png(sub, positions, labels, cfg, display_names);
    return out;
}

} // namespace coanet
