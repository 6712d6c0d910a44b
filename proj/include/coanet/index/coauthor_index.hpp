#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>

#include "coanet/extract/publication.hpp"
#include "coanet/index/graph.hpp"

namespace coanet {

struct IngestDelta {
    int edges_added = 0;       ///< pairs whose repository-wide weight went 0 -> 1
    int edges_incremented = 0; ///< pairs whose weight was already >= 1
};

struct IndexStats {
    long hyper_authored_truncated = 0; ///< publications whose pair expansion hit the cap
};

/// Store of publications plus the derived per-partition co-author graphs.
/// Publications are the source of truth; partition graphs are memoized caches,
/// rebuilt lazily after any write. Single writer; concurrent readers may call
/// the const interface on an index the writer no longer mutates (the service
/// layer publishes immutable copies for that).
class CoauthorIndex {
public:
    CoauthorIndex() = default;
    explicit CoauthorIndex(std::string repository_id);

    CoauthorIndex(const CoauthorIndex& other);
    CoauthorIndex& operator=(const CoauthorIndex& other);

    /// Upsert keyed by record_id: re-ingesting first retracts the previous
    /// contribution, so ingesting identical content twice is a no-op for the
    /// graphs. Publications with fewer than two authors still register their
    /// author nodes.
    IngestDelta ingest(const Publication& pub);

    /// Remove a record's contribution everywhere. Returns false (and changes
    /// nothing) for an unknown record_id.
    bool retract(const std::string& record_id);

    /// Materialized graph for one partition; unknown or empty partitions give
    /// the empty graph. The reference stays valid until the next write.
    const CoauthorGraph& subgraph(const PartitionKey& key) const;

    const std::map<std::string, Publication>& publications() const { return publications_; }

    /// Deterministic display form for an author: the lexicographically least
    /// display string observed across surviving publications.
    std::string display_name(const std::string& canonical) const;

    const std::string& repository_id() const { return repository_id_; }
    void set_repository_id(std::string id) { repository_id_ = std::move(id); }

    /// Bumped on every successful write; keys derived caches downstream.
    std::uint64_t generation() const { return generation_; }

    const IndexStats& stats() const { return stats_; }
    std::size_t size() const { return publications_.size(); }

    /// Newest datestamp over stored publications; the cursor for incremental
    /// harvests.
    std::optional<Datestamp> latest_datestamp() const;

    /// Equality of the persisted state (publications), which fully determines
    /// every derived graph.
    bool operator==(const CoauthorIndex& other) const {
        return publications_ == other.publications_;
    }

private:
    void apply(const Publication& pub, int direction);
    CoauthorGraph build_partition(const PartitionKey& key) const;
    bool selects(const PartitionKey& key, const Publication& pub) const;

    std::string repository_id_;
    std::map<std::string, Publication> publications_;
    /// canonical -> display -> number of surviving publications using it
    std::map<std::string, std::map<std::string, int>> displays_;
    /// canonical -> record ids; powers IngestDelta without materializing graphs
    std::map<std::string, std::set<std::string>> postings_;
    IndexStats stats_;
    std::uint64_t generation_ = 0;

    mutable std::mutex cache_mu_;
    mutable std::map<PartitionKey, CoauthorGraph> partition_cache_;
};

} // namespace coanet
