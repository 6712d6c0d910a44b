#include <limits>
#include <queue>
#include <utility>

#include "coanet/centrality/betweenness.hpp"

namespace coanet {

std::vector<double> brandes_serial(const CompactGraph& g, EdgeMode mode) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    const std::size_t n = g.node_count();
    std::vector<double> bc(n, 0.0);
    std::vector<double> sigma(n, 0.0);
    std::vector<double> delta(n, 0.0);
    std::vector<double> dist(n, inf);
    std::vector<int> hop(n, -1);
    std::vector<char> settled(n, 0);
    std::vector<std::vector<std::uint32_t>> preds(n);
    std::vector<std::uint32_t> order;
    order.reserve(n);

    for (std::uint32_t s = 0; s < n; ++s) {
        // Reset only what the previous source touched; with positive edge
        // lengths every relaxed vertex settles, so `order` covers them all.
        for (std::uint32_t v : order) {
            sigma[v] = 0.0;
            delta[v] = 0.0;
            dist[v] = inf;
            hop[v] = -1;
            settled[v] = 0;
            preds[v].clear();
        }
        order.clear();

        if (mode == EdgeMode::unweighted) {
            hop[s] = 0;
            sigma[s] = 1.0;
            order.push_back(s);
            for (std::size_t head = 0; head < order.size(); ++head) {
                std::uint32_t u = order[head];
                for (std::size_t e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
                    std::uint32_t v = g.adjacency[e];
                    if (hop[v] < 0) {
                        hop[v] = hop[u] + 1;
                        order.push_back(v);
                    }
                    if (hop[v] == hop[u] + 1) {
                        sigma[v] += sigma[u];
                        preds[v].push_back(u);
                    }
                }
            }
        } else {
            dist[s] = 0.0;
            sigma[s] = 1.0;
            using Entry = std::pair<double, std::uint32_t>;
            std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
            pq.push({0.0, s});
            while (!pq.empty()) {
                auto [d, u] = pq.top();
                pq.pop();
                if (settled[u])
                    continue;
                settled[u] = 1;
                order.push_back(u);
                for (std::size_t e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
                    std::uint32_t v = g.adjacency[e];
                    double nd = d + 1.0 / g.weights[e];
                    if (nd < dist[v]) {
                        dist[v] = nd;
                        sigma[v] = sigma[u];
                        preds[v].assign(1, u);
                        pq.push({nd, v});
                    } else if (nd == dist[v] && !settled[v]) {
                        sigma[v] += sigma[u];
                        preds[v].push_back(u);
                    }
                }
            }
        }

        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            std::uint32_t w = *it;
            double coeff = (1.0 + delta[w]) / sigma[w];
            for (std::uint32_t v : preds[w])
                delta[v] += sigma[v] * coeff;
            if (w != s)
                bc[w] += delta[w];
        }
    }

    for (double& x : bc)
        x /= 2.0;
    return bc;
}

} // namespace coanet
