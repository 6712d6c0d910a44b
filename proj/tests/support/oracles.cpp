#include "oracles.hpp"

#include <algorithm>
#include <cstddef>

namespace coanet::testing {

namespace {

struct PathEnumerator {
    const std::vector<std::vector<std::pair<int, double>>>& adj;
    int target;
    std::vector<int> stack;
    std::vector<bool> on_path;
    double length = 0;
    std::vector<std::vector<int>> paths;
    std::vector<double> lengths;

    void run(int v) {
        if (v == target) {
            paths.push_back(stack);
            lengths.push_back(length);
            return;
        }
        for (auto [w, cost] : adj[v]) {
            if (on_path[w])
                continue;
            on_path[w] = true;
            stack.push_back(w);
            length += cost;
            run(w);
            length -= cost;
            stack.pop_back();
            on_path[w] = false;
        }
    }
};

} // namespace

std::map<std::string, double> brute_force_betweenness(const CoauthorGraph& graph,
                                                      EdgeMode mode) {
    std::vector<std::string> names;
    names.reserve(graph.publication_count.size());
    for (const auto& [name, count] : graph.publication_count)
        names.push_back(name);
    int n = static_cast<int>(names.size());

    std::map<std::string, int> id;
    for (int i = 0; i < n; ++i)
        id[names[i]] = i;

    std::vector<std::vector<std::pair<int, double>>> adj(n);
    for (const auto& [a, neighbors] : graph.adjacency)
        for (const auto& [b, w] : neighbors)
            adj[id.at(a)].emplace_back(id.at(b),
                                       mode == EdgeMode::weighted ? 1.0 / w : 1.0);

    std::vector<double> bc(n, 0.0);
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            PathEnumerator en{adj, t, {}, std::vector<bool>(n, false), 0, {}, {}};
            en.on_path[s] = true;
            en.stack.push_back(s);
            en.run(s);
            if (en.paths.empty())
                continue; // s and t are disconnected; the pair contributes nothing

            double best = *std::min_element(en.lengths.begin(), en.lengths.end());
            long sigma = 0;
            std::vector<long> through(n, 0);
            for (size_t p = 0; p < en.paths.size(); ++p) {
                if (en.lengths[p] != best)
                    continue;
                ++sigma;
                for (size_t k = 1; k + 1 < en.paths[p].size(); ++k)
                    ++through[en.paths[p][k]];
            }
            for (int v = 0; v < n; ++v)
                if (through[v] > 0)
                    bc[v] += static_cast<double>(through[v]) / static_cast<double>(sigma);
        }
    }

    std::map<std::string, double> out;
    for (int i = 0; i < n; ++i)
        out[names[i]] = bc[i];
    return out;
}

CoauthorGraph rebuild_partition(const std::vector<Publication>& publications,
                                const PartitionKey& key) {
    CoauthorGraph g;
    for (const Publication& pub : publications) {
        bool selected = false;
        switch (key.kind) {
        case PartitionKey::Kind::repository_wide:
            selected = true;
            break;
        case PartitionKey::Kind::ddc_main:
            for (const DdcClass& c : pub.ddc_classes)
                if (!c.code.empty() && std::string(1, c.code[0]) + "00" == key.code)
                    selected = true;
            break;
        case PartitionKey::Kind::ddc_exact:
            for (const DdcClass& c : pub.ddc_classes)
                if (c.code == key.code)
                    selected = true;
            break;
        }
        if (!selected)
            continue;

        for (const CanonicalName& author : pub.authors)
            g.add_node(author.canonical);
        size_t limit = std::min(pub.authors.size(), kMaxPairAuthors);
        for (size_t i = 0; i < limit; ++i)
            for (size_t j = i + 1; j < limit; ++j)
                g.add_edge_weight(pub.authors[i].canonical, pub.authors[j].canonical, 1);
    }
    return g;
}

} // namespace coanet::testing
