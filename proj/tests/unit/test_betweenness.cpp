#include <doctest.h>

#include <cmath>
#include <random>
#include <tuple>
#include <vector>

#include "coanet/centrality/betweenness.hpp"
#include "coanet/centrality/compact_graph.hpp"
#include "graph_gen.hpp"
#include "oracles.hpp"

using namespace coanet;
using namespace coanet::testing;

namespace {

CoauthorGraph make_graph(const std::vector<std::tuple<std::string, std::string, int>>& edges,
                         const std::vector<std::string>& extra_nodes = {}) {
    CoauthorGraph g;
    for (const auto& [a, b, w] : edges) {
        g.add_node(a);
        g.add_node(b);
        g.add_edge_weight(a, b, w);
    }
    for (const auto& name : extra_nodes)
        g.add_node(name);
    return g;
}

CoauthorGraph star(int leaves) {
    std::vector<std::tuple<std::string, std::string, int>> edges;
    for (int i = 0; i < leaves; ++i)
        edges.emplace_back("center", node_name(i), 1);
    return make_graph(edges);
}

CoauthorGraph complete(int n) {
    std::vector<std::tuple<std::string, std::string, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(node_name(i), node_name(j), 1);
    return make_graph(edges);
}

void check_against(const BetweennessResult& result,
                   const std::map<std::string, double>& expected_raw, double tol) {
    REQUIRE(result.raw.size() == expected_raw.size());
    std::size_t n = result.node_count;
    double denom = n >= 3 ? static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0 : 0.0;
    for (const auto& [name, want] : expected_raw) {
        REQUIRE(result.raw.count(name) == 1);
        CHECK(std::abs(result.raw.at(name) - want) <= tol);
        double norm = denom > 0 ? want / denom : 0.0;
        CHECK(std::abs(result.normalized.at(name) - norm) <= tol);
    }
}

} // namespace

TEST_CASE("path of three puts all betweenness on the middle node") {
    auto g = make_graph({{"a", "b", 1}, {"b", "c", 1}});
    auto r = betweenness(g);
    CHECK(r.node_count == 3);
    CHECK(r.raw.at("a") == 0.0);
    CHECK(r.raw.at("b") == 1.0);
    CHECK(r.raw.at("c") == 0.0);
    CHECK(r.normalized.at("b") == 1.0); // (n-1)(n-2)/2 == 1
    CHECK(r.normalized.at("a") == 0.0);
}

TEST_CASE("star centers score choose(k, 2), leaves zero") {
    for (int k = 2; k <= 6; ++k) {
        CAPTURE(k);
        auto g = star(k);
        auto r = betweenness(g);
        double pairs = k * (k - 1) / 2.0;
        CHECK(r.raw.at("center") == pairs);
        CHECK(r.normalized.at("center") == 1.0);
        for (int i = 0; i < k; ++i) {
            CHECK(r.raw.at(node_name(i)) == 0.0);
            CHECK(r.normalized.at(node_name(i)) == 0.0);
        }
    }
}

TEST_CASE("complete graphs have zero betweenness everywhere") {
    for (int n = 3; n <= 6; ++n) {
        CAPTURE(n);
        auto r = betweenness(complete(n));
        for (const auto& [name, raw] : r.raw) {
            CHECK(raw == 0.0);
            CHECK(r.normalized.at(name) == 0.0);
        }
    }
}

TEST_CASE("four-cycle splits shortest paths evenly") {
    auto g = make_graph({{"a", "b", 1}, {"b", "c", 1}, {"c", "d", 1}, {"d", "a", 1}});
    auto r = betweenness(g);
    for (const auto& name : {"a", "b", "c", "d"}) {
        CHECK(std::abs(r.raw.at(name) - 0.5) <= 1e-12);
        CHECK(std::abs(r.normalized.at(name) - 0.5 / 3.0) <= 1e-12);
    }
}

TEST_CASE("two disconnected paths accumulate within components only") {
    auto g = make_graph({{"a", "b", 1}, {"b", "c", 1}, {"x", "y", 1}, {"y", "z", 1}});
    auto r = betweenness(g);
    CHECK(r.node_count == 6);
    CHECK(r.raw.at("b") == 1.0);
    CHECK(r.raw.at("y") == 1.0);
    CHECK(r.raw.at("a") == 0.0);
    CHECK(r.raw.at("z") == 0.0);
    CHECK(std::abs(r.normalized.at("b") - 1.0 / 10.0) <= 1e-12);
}

TEST_CASE("isolated nodes score zero and still appear in the result") {
    auto g = make_graph({{"a", "b", 1}, {"b", "c", 1}}, {"lonely"});
    auto r = betweenness(g);
    CHECK(r.node_count == 4);
    CHECK(r.raw.at("lonely") == 0.0);
    CHECK(r.normalized.at("lonely") == 0.0);
    CHECK(r.raw.at("b") == 1.0); // pair (a,c) only; lonely is unreachable
}

TEST_CASE("empty graph yields an empty result without error") {
    CoauthorGraph g;
    auto r = betweenness(g);
    CHECK(r.node_count == 0);
    CHECK(r.raw.empty());
    CHECK(r.normalized.empty());
}

TEST_CASE("weighted mode prefers heavy edges as short hops") {
    // Triangle where the two-hop route over b carries weight 4 on each leg:
    // distance 1/4 + 1/4 beats the direct weight-1 edge, so b mediates (a, c).
    auto g = make_graph({{"a", "b", 4}, {"b", "c", 4}, {"a", "c", 1}});

    auto unweighted = betweenness(g, EdgeMode::unweighted);
    CHECK(unweighted.raw.at("b") == 0.0);

    auto weighted = betweenness(g, EdgeMode::weighted);
    CHECK(weighted.mode == EdgeMode::weighted);
    CHECK(weighted.raw.at("b") == 1.0);
    CHECK(weighted.raw.at("a") == 0.0);
    CHECK(weighted.raw.at("c") == 0.0);
}

TEST_CASE("unweighted results match the all-paths oracle on random graphs") {
    std::mt19937_64 seed_gen(2024);
    int checked = 0;
    for (int round = 0; round < 120; ++round) {
        int n = 2 + static_cast<int>(seed_gen() % 6); // 2..7
        int max_edges = n * (n - 1) / 2;
        int edges = static_cast<int>(seed_gen() % (max_edges + 1));
        auto g = random_graph(seed_gen(), n, edges);
        CAPTURE(round);
        CAPTURE(n);
        CAPTURE(edges);

        auto expected = brute_force_betweenness(g, EdgeMode::unweighted);
        auto serial = betweenness(g, BetweennessOptions{EdgeMode::unweighted, false, 0});
        auto parallel = betweenness(g, BetweennessOptions{EdgeMode::unweighted, true, 0});
        for (const auto& [name, want] : expected) {
            CHECK(std::abs(serial.raw.at(name) - want) < 1e-9);
            CHECK(std::abs(parallel.raw.at(name) - want) < 1e-9);
        }
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("weighted results match the all-paths oracle on random graphs") {
    std::mt19937_64 seed_gen(4096);
    int checked = 0;
    for (int round = 0; round < 120; ++round) {
        int n = 2 + static_cast<int>(seed_gen() % 6);
        int max_edges = n * (n - 1) / 2;
        int edges = static_cast<int>(seed_gen() % (max_edges + 1));
        auto g = random_graph(seed_gen(), n, edges, 8, /*power_of_two_weights=*/true);
        CAPTURE(round);
        CAPTURE(n);
        CAPTURE(edges);

        auto expected = brute_force_betweenness(g, EdgeMode::weighted);
        auto serial = betweenness(g, BetweennessOptions{EdgeMode::weighted, false, 0});
        auto parallel = betweenness(g, BetweennessOptions{EdgeMode::weighted, true, 0});
        for (const auto& [name, want] : expected) {
            CHECK(std::abs(serial.raw.at(name) - want) < 1e-9);
            CHECK(std::abs(parallel.raw.at(name) - want) < 1e-9);
        }
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("degree-one nodes never mediate a shortest path") {
    std::mt19937_64 seed_gen(515);
    for (int round = 0; round < 30; ++round) {
        auto g = random_graph(seed_gen(), 10, 12);
        auto r = betweenness(g);
        for (const auto& [name, neighbors] : g.adjacency)
            if (neighbors.size() == 1)
                CHECK(r.raw.at(name) == 0.0);
    }
}

TEST_CASE("raw scores respect the pair-count bound") {
    std::mt19937_64 seed_gen(99);
    for (int round = 0; round < 40; ++round) {
        int n = 2 + static_cast<int>(seed_gen() % 9);
        auto g = random_graph(seed_gen(), n, static_cast<int>(seed_gen() % 20),
                              8, true);
        double bound = (n - 1) * (n - 2) / 2.0;
        for (auto mode : {EdgeMode::unweighted, EdgeMode::weighted}) {
            auto r = betweenness(g, mode);
            for (const auto& [name, raw] : r.raw) {
                CHECK(raw >= 0.0);
                CHECK(raw <= bound + 1e-9);
            }
        }
    }
}

TEST_CASE("scaling every weight by two leaves weighted scores unchanged") {
    std::mt19937_64 seed_gen(77);
    for (int round = 0; round < 20; ++round) {
        auto g = random_graph(seed_gen(), 9, 14, 8, true);
        CoauthorGraph doubled = g;
        for (auto& [a, neighbors] : doubled.adjacency)
            for (auto& [b, w] : neighbors)
                w *= 2;
        auto base = betweenness(g, EdgeMode::weighted);
        auto scaled = betweenness(doubled, EdgeMode::weighted);
        for (const auto& [name, raw] : base.raw)
            CHECK(scaled.raw.at(name) == raw);
    }
}

TEST_CASE("scores are invariant under node relabeling") {
    std::mt19937_64 seed_gen(31337);
    for (int round = 0; round < 15; ++round) {
        auto g = random_graph(seed_gen(), 8, 11, 4, true);
        // Prefixing with "z" reverses the sorted order of the vertex ids.
        CoauthorGraph renamed;
        for (const auto& [name, count] : g.publication_count)
            renamed.add_node("z" + name, count);
        for (const auto& [a, neighbors] : g.adjacency)
            for (const auto& [b, w] : neighbors)
                if (a < b)
                    renamed.add_edge_weight("z" + a, "z" + b, w);
        for (auto mode : {EdgeMode::unweighted, EdgeMode::weighted}) {
            auto base = betweenness(g, mode);
            auto moved = betweenness(renamed, mode);
            for (const auto& [name, raw] : base.raw)
                CHECK(std::abs(moved.raw.at("z" + name) - raw) < 1e-9);
        }
    }
}

TEST_CASE("repeated runs are bit-identical") {
    auto g = random_graph(8675309, 40, 90, 8, true);
    for (auto mode : {EdgeMode::unweighted, EdgeMode::weighted}) {
        auto serial_a = betweenness(g, BetweennessOptions{mode, false, 0});
        auto serial_b = betweenness(g, BetweennessOptions{mode, false, 0});
        CHECK(serial_a.raw == serial_b.raw);
        CHECK(serial_a.normalized == serial_b.normalized);

        auto parallel_a = betweenness(g, BetweennessOptions{mode, true, 2});
        auto parallel_b = betweenness(g, BetweennessOptions{mode, true, 2});
        CHECK(parallel_a.raw == parallel_b.raw);
    }
}

TEST_CASE("parallel kernel agrees with the serial reference") {
    std::mt19937_64 seed_gen(424242);
    for (int round = 0; round < 6; ++round) {
        auto g = random_graph(seed_gen(), 60, 150, 8, true);
        auto compact = CompactGraph::from(g);
        for (auto mode : {EdgeMode::unweighted, EdgeMode::weighted}) {
            auto serial = brandes_serial(compact, mode);
            for (int threads : {1, 2, 3}) {
                auto parallel = brandes_parallel(compact, mode, threads);
                REQUIRE(parallel.size() == serial.size());
                for (std::size_t v = 0; v < serial.size(); ++v)
                    CHECK(std::abs(parallel[v] - serial[v]) < 1e-9);
            }
        }
    }
}

TEST_CASE("normalization divides by the pair count only from three nodes up") {
    auto two = make_graph({{"a", "b", 1}});
    auto r2 = betweenness(two);
    CHECK(r2.raw.at("a") == 0.0);
    CHECK(r2.normalized.at("a") == 0.0);
    CHECK(r2.normalized.at("b") == 0.0);

    CoauthorGraph one;
    one.add_node("solo");
    auto r1 = betweenness(one);
    CHECK(r1.raw.at("solo") == 0.0);
    CHECK(r1.normalized.at("solo") == 0.0);

    auto g = make_graph({{"a", "b", 1}, {"b", "c", 1}, {"c", "d", 1}});
    auto r = betweenness(g);
    double denom = 3.0; // (4-1)(4-2)/2
    for (const auto& [name, raw] : r.raw)
        CHECK(std::abs(r.normalized.at(name) - raw / denom) <= 1e-12);
}

TEST_CASE("result carries mode, node count and a timestamp") {
    auto g = make_graph({{"a", "b", 1}, {"b", "c", 1}});
    auto r = betweenness(g, EdgeMode::weighted);
    CHECK(r.mode == EdgeMode::weighted);
    CHECK(r.node_count == 3);
    CHECK(r.computed_at.to_string().size() == 20); // seconds granularity
    CHECK(r.raw.size() == r.normalized.size());
}

TEST_CASE("closed-form cases hold through the oracle too") {
    // Sanity check of the oracle itself against hand-computed structures.
    check_against(betweenness(star(4)), brute_force_betweenness(star(4)), 1e-12);
    auto bridge = make_graph({{"a", "b", 1},
                              {"a", "c", 1},
                              {"b", "c", 1},
                              {"c", "d", 1},
                              {"d", "e", 1},
                              {"d", "f", 1},
                              {"e", "f", 1}});
    check_against(betweenness(bridge), brute_force_betweenness(bridge), 1e-12);
    // Two triangles joined by the bridge c-d: each bridge endpoint mediates
    // the six cross pairs it is not part of, nothing within its own triangle.
    auto r = betweenness(bridge);
    CHECK(r.raw.at("c") == 6.0);
    CHECK(r.raw.at("d") == 6.0);
    CHECK(r.raw.at("a") == 0.0);
}

TEST_CASE("edge mode names round-trip") {
    CHECK(to_string(EdgeMode::unweighted) == "unweighted");
    CHECK(to_string(EdgeMode::weighted) == "weighted");
}
