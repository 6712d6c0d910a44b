#include "coanet/plot/layout.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "coanet/centrality/compact_graph.hpp"
#include "coanet/errors.hpp"

namespace coanet {

void LayoutConfig::validate() const {
    if (width < 64 || height < 64)
        throw ConfigError("plot dimensions must be at least 64x64");
    if (iterations < 1)
        throw ConfigError("layout iterations must be >= 1");
    if (label_top_k < 0)
        throw ConfigError("label_top_k must be >= 0");
}

namespace {

/// Uniform double in [0, 1) from the top 53 bits; std::uniform_real_distribution
/// is implementation-defined, this is not.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

NodeLayout layout(const CoauthorGraph& graph, const BetweennessResult& scores,
                  const LayoutConfig& cfg) {
    cfg.validate();
    if (graph.empty())
        throw EmptyGraphError("nothing to lay out");

    CompactGraph g = CompactGraph::from(graph);
    const std::size_t n = g.node_count();
    const double lo_x = kCanvasMargin;
    const double hi_x = cfg.width - kCanvasMargin;
    const double lo_y = kCanvasMargin;
    const double hi_y = cfg.height - kCanvasMargin;

    std::vector<double> x(n), y(n);
    if (n == 1) {
        x[0] = cfg.width / 2.0;
        y[0] = cfg.height / 2.0;
    } else {
        std::mt19937_64 rng(cfg.seed);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = lo_x + next_unit(rng) * (hi_x - lo_x);
            y[i] = lo_y + next_unit(rng) * (hi_y - lo_y);
        }

        const double area = (hi_x - lo_x) * (hi_y - lo_y);
        const double k = std::sqrt(area / static_cast<double>(n));
        const double t0 = (hi_x - lo_x) / 10.0;
        std::vector<double> dx(n), dy(n);

        for (int iter = 0; iter < cfg.iterations; ++iter) {
            std::fill(dx.begin(), dx.end(), 0.0);
            std::fill(dy.begin(), dy.end(), 0.0);

            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    double ddx = x[i] - x[j];
                    double ddy = y[i] - y[j];
                    double d2 = ddx * ddx + ddy * ddy;
                    if (d2 < 1e-12) {
                        // coincident points: separate along a pair-dependent
                        // direction so the push stays deterministic
                        ddx = 1e-6 * static_cast<double>(i + 1);
                        ddy = 1e-6 * static_cast<double>(j + 1);
                        d2 = ddx * ddx + ddy * ddy;
                    }
                    double d = std::sqrt(d2);
                    double force = k * k / d;
                    double fx = ddx / d * force;
                    double fy = ddy / d * force;
                    dx[i] += fx;
                    dy[i] += fy;
                    dx[j] -= fx;
                    dy[j] -= fy;
                }
            }

            for (std::size_t u = 0; u < n; ++u) {
                for (std::size_t e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
                    std::uint32_t v = g.adjacency[e];
                    if (v <= u)
                        continue; // undirected edge handled once
                    double ddx = x[u] - x[v];
                    double ddy = y[u] - y[v];
                    double d = std::sqrt(ddx * ddx + ddy * ddy);
                    if (d < 1e-9)
                        continue;
                    double force = d * d / k;
                    double fx = ddx / d * force;
                    double fy = ddy / d * force;
                    dx[u] -= fx;
                    dy[u] -= fy;
                    dx[v] += fx;
                    dy[v] += fy;
                }
            }

            double t = t0 * (1.0 - static_cast<double>(iter) / cfg.iterations);
            if (t < 0.5)
                t = 0.5;
            for (std::size_t i = 0; i < n; ++i) {
                double len = std::sqrt(dx[i] * dx[i] + dy[i] * dy[i]);
                if (len > 1e-12) {
                    double step = std::min(len, t);
                    x[i] += dx[i] / len * step;
                    y[i] += dy[i] / len * step;
                }
                x[i] = std::clamp(x[i], lo_x, hi_x);
                y[i] = std::clamp(y[i], lo_y, hi_y);
            }
        }
    }

    NodeLayout out;
    for (std::size_t i = 0; i < n; ++i) {
        auto it = scores.normalized.find(g.names[i]);
        double norm = it == scores.normalized.end() ? 0.0 : it->second;
        out.positions.emplace(g.names[i], std::make_pair(x[i], y[i]));
        out.radii.emplace(g.names[i],
                          kMinRadius + (kMaxRadius - kMinRadius) * std::clamp(norm, 0.0, 1.0));
    }
    return out;
}

} // namespace coanet
