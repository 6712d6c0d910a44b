#include <limits>
#include <queue>
#include <utility>

#include <omp.h>

#include "coanet/centrality/betweenness.hpp"

namespace coanet {

namespace {

/// Per-thread scratch for one source's shortest-path phase. Instead of
/// predecessor lists, the accumulation pass re-detects predecessors by
/// scanning each vertex's neighbors against the distance array.
struct Scratch {
    std::vector<double> sigma;
    std::vector<double> delta;
    std::vector<double> dist;
    std::vector<int> hop;
    std::vector<char> settled;
    std::vector<std::uint32_t> order;

    explicit Scratch(std::size_t n)
        : sigma(n, 0.0), delta(n, 0.0),
          dist(n, std::numeric_limits<double>::infinity()), hop(n, -1),
          settled(n, 0) {
        order.reserve(n);
    }

    void reset() {
        constexpr double inf = std::numeric_limits<double>::infinity();
        for (std::uint32_t v : order) {
            sigma[v] = 0.0;
            delta[v] = 0.0;
            dist[v] = inf;
            hop[v] = -1;
            settled[v] = 0;
        }
        order.clear();
    }
};

void accumulate_source(const CompactGraph& g, EdgeMode mode, std::uint32_t s,
                       Scratch& sc, std::vector<double>& bc) {
    sc.reset();

    if (mode == EdgeMode::unweighted) {
        sc.hop[s] = 0;
        sc.sigma[s] = 1.0;
        sc.order.push_back(s);
        for (std::size_t head = 0; head < sc.order.size(); ++head) {
            std::uint32_t u = sc.order[head];
            for (std::size_t e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
                std::uint32_t v = g.adjacency[e];
                if (sc.hop[v] < 0) {
                    sc.hop[v] = sc.hop[u] + 1;
                    sc.order.push_back(v);
                }
                if (sc.hop[v] == sc.hop[u] + 1)
                    sc.sigma[v] += sc.sigma[u];
            }
        }
        for (auto it = sc.order.rbegin(); it != sc.order.rend(); ++it) {
            std::uint32_t w = *it;
            double coeff = (1.0 + sc.delta[w]) / sc.sigma[w];
            for (std::size_t e = g.offsets[w]; e < g.offsets[w + 1]; ++e) {
                std::uint32_t v = g.adjacency[e];
                if (sc.hop[v] >= 0 && sc.hop[v] + 1 == sc.hop[w])
                    sc.delta[v] += sc.sigma[v] * coeff;
            }
            if (w != s)
                bc[w] += sc.delta[w];
        }
    } else {
        sc.dist[s] = 0.0;
        sc.sigma[s] = 1.0;
        using Entry = std::pair<double, std::uint32_t>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
        pq.push({0.0, s});
        while (!pq.empty()) {
            auto [d, u] = pq.top();
            pq.pop();
            if (sc.settled[u])
                continue;
            sc.settled[u] = 1;
            sc.order.push_back(u);
            for (std::size_t e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
                std::uint32_t v = g.adjacency[e];
                double nd = d + 1.0 / g.weights[e];
                if (nd < sc.dist[v]) {
                    sc.dist[v] = nd;
                    sc.sigma[v] = sc.sigma[u];
                    pq.push({nd, v});
                } else if (nd == sc.dist[v] && !sc.settled[v]) {
                    sc.sigma[v] += sc.sigma[u];
                }
            }
        }
        for (auto it = sc.order.rbegin(); it != sc.order.rend(); ++it) {
            std::uint32_t w = *it;
            double coeff = (1.0 + sc.delta[w]) / sc.sigma[w];
            for (std::size_t e = g.offsets[w]; e < g.offsets[w + 1]; ++e) {
                std::uint32_t v = g.adjacency[e];
                if (sc.dist[v] + 1.0 / g.weights[e] == sc.dist[w])
                    sc.delta[v] += sc.sigma[v] * coeff;
            }
            if (w != s)
                bc[w] += sc.delta[w];
        }
    }
}

} // namespace

std::vector<double> brandes_parallel(const CompactGraph& g, EdgeMode mode, int threads) {
    const std::size_t n = g.node_count();
    if (threads <= 0)
        threads = omp_get_max_threads();

    std::vector<std::vector<double>> partial(threads, std::vector<double>(n, 0.0));

#pragma omp parallel num_threads(threads)
    {
        int t = omp_get_thread_num();
        Scratch sc(n);
#pragma omp for schedule(static)
        for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s)
            accumulate_source(g, mode, static_cast<std::uint32_t>(s), sc, partial[t]);
    }

    // Summing in thread order keeps the result bit-stable for a fixed thread
    // count; the static schedule fixes which sources each thread owns.
    std::vector<double> bc(n, 0.0);
    for (const auto& local : partial)
        for (std::size_t v = 0; v < n; ++v)
            bc[v] += local[v];
    for (double& x : bc)
        x /= 2.0;
    return bc;
}

} // namespace coanet
