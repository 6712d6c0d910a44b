#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "coanet/centrality/betweenness.hpp"
#include "coanet/index/coauthor_index.hpp"
#include "coanet/oai/types.hpp"
#include "coanet/service/config.hpp"

namespace coanet {

/// Everything behind the HTTP handlers and the CLI subcommands: the
/// repository registry, the published index snapshot per repository, the
/// betweenness cache, and the harvest job registry. Thread-safe; harvest
/// workers are the single writer per repository, queries read immutable
/// snapshots, so a read never sees a partially applied record.
class ServiceState {
public:
    /// Creates the data directory, loads persisted registrations and any
    /// existing index snapshots. Throws ConfigError for an unusable
    /// configuration, snapshot errors for damaged snapshot files.
    explicit ServiceState(ServiceConfig config);
    ~ServiceState();

    ServiceState(const ServiceState&) = delete;
    ServiceState& operator=(const ServiceState&) = delete;

    const ServiceConfig& config() const { return config_; }

    /// Registers and persists a repository; false if the id already exists.
    /// The config must already be validated.
    bool add_repository(const std::string& id, RepositoryConfig repo);
    std::optional<RepositoryConfig> repository(const std::string& id) const;
    std::vector<std::string> repository_ids() const;

    /// Current published snapshot, or nullptr for unknown ids. The snapshot
    /// is immutable; holding the pointer pins a consistent point-in-time view.
    std::shared_ptr<const CoauthorIndex> index(const std::string& id) const;

    /// Starts an asynchronous harvest worker. nullopt for unknown ids;
    /// StateError if a job is already running for the repository.
    std::optional<std::string> start_harvest(const std::string& id);

    /// Synchronous harvest for the CLI. Throws NotFoundError for unknown ids,
    /// StateError if busy, and harvest errors (NetworkError and friends).
    JobStatus harvest_blocking(const std::string& id);

    std::optional<JobStatus> job(const std::string& job_id) const;

    /// Betweenness for one partition of the snapshot, cached per
    /// (repository, partition, mode, index generation).
    std::shared_ptr<const BetweennessResult>
    centrality(const std::shared_ptr<const CoauthorIndex>& snapshot,
               const PartitionKey& partition, EdgeMode mode);

    std::filesystem::path snapshot_path(const std::string& id) const;

private:
    struct Repo {
        RepositoryConfig config;
        std::shared_ptr<const CoauthorIndex> published;
        bool job_running = false;
        bool dynamic = false; ///< registered via the API, not the config file
    };

    struct CacheEntry {
        std::uint64_t generation = 0;
        std::shared_ptr<const BetweennessResult> result;
    };

    void install_repository(const std::string& id, RepositoryConfig repo, bool dynamic);
    void persist_dynamic_locked();
    void publish(const std::string& id, const CoauthorIndex& working);
    void run_harvest_job(const std::string& id, const std::shared_ptr<HarvestJob>& job);

    ServiceConfig config_;
    mutable std::mutex mu_;
    std::map<std::string, Repo> repos_;
    std::map<std::string, std::shared_ptr<HarvestJob>> jobs_;
    long job_counter_ = 0;
    std::map<std::string, CacheEntry> bc_cache_;
    std::vector<std::thread> workers_;
};

} // namespace coanet
