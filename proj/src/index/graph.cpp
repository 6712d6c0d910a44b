#include "coanet/index/graph.hpp"

#include "coanet/errors.hpp"
#include "coanet/util/strings.hpp"

namespace coanet {

std::size_t CoauthorGraph::edge_count() const {
    std::size_t directed = 0;
    for (const auto& [node, neighbors] : adjacency)
        directed += neighbors.size();
    return directed / 2;
}

int CoauthorGraph::weight(const std::string& a, const std::string& b) const {
    auto it = adjacency.find(a);
    if (it == adjacency.end())
        return 0;
    auto jt = it->second.find(b);
    return jt == it->second.end() ? 0 : jt->second;
}

void CoauthorGraph::add_node(const std::string& author, int publications) {
    publication_count[author] += publications;
}

void CoauthorGraph::add_edge_weight(const std::string& a, const std::string& b, int delta) {
    if (a == b)
        return;
    adjacency[a][b] += delta;
    adjacency[b][a] += delta;
    if (adjacency[a][b] <= 0) {
        adjacency[a].erase(b);
        adjacency[b].erase(a);
        if (adjacency[a].empty())
            adjacency.erase(a);
        if (adjacency[b].empty())
            adjacency.erase(b);
    }
}

PartitionKey PartitionKey::ddc_main(std::string code) {
    if (code.size() != 3 || !all_digits(code) || code[1] != '0' || code[2] != '0')
        throw ConfigError("ddc_main partition requires an X00 code, got '" + code + "'");
    return {Kind::ddc_main, std::move(code)};
}

PartitionKey PartitionKey::ddc_exact(std::string code) {
    if (code.size() != 3 || !all_digits(code))
        throw ConfigError("ddc_exact partition requires a 3-digit code, got '" + code + "'");
    return {Kind::ddc_exact, std::move(code)};
}

std::string PartitionKey::to_string() const {
    switch (kind) {
    case Kind::repository_wide: return "repository_wide";
    case Kind::ddc_main: return "ddc_main:" + code;
    case Kind::ddc_exact: return "ddc_exact:" + code;
    }
    return "?";
}

std::string_view to_string(PartitionKey::Kind kind) {
    switch (kind) {
    case PartitionKey::Kind::repository_wide: return "repository_wide";
    case PartitionKey::Kind::ddc_main: return "ddc_main";
    case PartitionKey::Kind::ddc_exact: return "ddc_exact";
    }
    return "?";
}

} // namespace coanet
