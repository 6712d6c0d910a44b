#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>

namespace coanet {

/// Undirected weighted co-authorship graph. Nodes are canonical author names;
/// an edge weight counts joint publications. The node set is the key set of
/// publication_count (isolated vertices are legal); adjacency is kept
/// symmetric and free of self-loops, all weights >= 1.
struct CoauthorGraph {
    std::map<std::string, std::map<std::string, int>> adjacency;
    std::map<std::string, int> publication_count;

    std::size_t node_count() const { return publication_count.size(); }
    std::size_t edge_count() const;

    bool has_node(const std::string& author) const {
        return publication_count.count(author) > 0;
    }

    /// 0 when the edge is absent.
    int weight(const std::string& a, const std::string& b) const;

    void add_node(const std::string& author, int publications = 1);
    /// Adds `delta` to the symmetric edge (a, b); both endpoints must already
    /// be nodes. a == b is ignored (no self-loops).
    void add_edge_weight(const std::string& a, const std::string& b, int delta);

    bool empty() const { return publication_count.empty(); }

    bool operator==(const CoauthorGraph&) const = default;
};

/// Selects one materialized graph: the whole repository, one DDC main class
/// (X00, covering every XYZ code below it), or one exact 3-digit code.
struct PartitionKey {
    enum class Kind { repository_wide, ddc_main, ddc_exact };

    Kind kind = Kind::repository_wide;
    std::string code; // empty for repository_wide

    static PartitionKey repository_wide() { return {Kind::repository_wide, ""}; }
    /// Throws ConfigError unless code is X00.
    static PartitionKey ddc_main(std::string code);
    static PartitionKey ddc_exact(std::string code);

    std::string to_string() const;

    friend auto operator<=>(const PartitionKey&, const PartitionKey&) = default;
};

std::string_view to_string(PartitionKey::Kind kind);

} // namespace coanet
