#include "coanet/centrality/ranking.hpp"

#include <algorithm>

namespace coanet {

CentralityRanking top_central(const BetweennessResult& result, const CoauthorGraph& graph,
                              std::size_t k, const PartitionKey& partition) {
    std::vector<std::pair<const std::string*, double>> order;
    order.reserve(result.raw.size());
    for (const auto& [name, raw] : result.raw)
        order.emplace_back(&name, raw);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second)
            return a.second > b.second;
        return *a.first < *b.first;
    });

    CentralityRanking ranking;
    ranking.partition = partition;
    ranking.k = k;
    std::size_t take = std::min(k, order.size());
    ranking.entries.reserve(take);
    for (std::size_t i = 0; i < take; ++i) {
        const std::string& name = *order[i].first;
        RankedAuthor entry;
        entry.rank = static_cast<int>(i) + 1;
        entry.author = name;
        entry.raw = order[i].second;
        entry.normalized = result.normalized.at(name);
        auto it = graph.publication_count.find(name);
        entry.publication_count = it == graph.publication_count.end() ? 0 : it->second;
        ranking.entries.push_back(std::move(entry));
    }
    return ranking;
}

} // namespace coanet
