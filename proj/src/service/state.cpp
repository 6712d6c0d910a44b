#include "coanet/service/state.hpp"

#include <fstream>
#include <iostream>

#include "coanet/errors.hpp"
#include "coanet/extract/publication.hpp"
#include "coanet/index/snapshot.hpp"
#include "coanet/oai/client.hpp"

namespace coanet {

namespace {

/// How many records may accumulate before the worker publishes a fresh
/// snapshot for readers; bounds the copy cost during large harvests.
constexpr long kPublishBatch = 100;

} // namespace

ServiceState::ServiceState(ServiceConfig config) : config_(std::move(config)) {
    config_.validate();

    std::error_code ec;
    std::filesystem::create_directories(config_.data_dir, ec);
    if (ec)
        throw ConfigError("cannot create data_dir '" + config_.data_dir.string() +
                          "': " + ec.message());
    auto probe = config_.data_dir / ".writable";
    {
        std::ofstream out(probe, std::ios::trunc);
        if (!out)
            throw ConfigError("data_dir '" + config_.data_dir.string() +
                              "' is not writable");
    }
    std::filesystem::remove(probe, ec);

    for (const auto& [id, repo] : config_.repositories)
        install_repository(id, repo, false);

    auto persisted = config_.data_dir / "repositories.json";
    if (std::filesystem::exists(persisted)) {
        std::ifstream in(persisted);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError("damaged '" + persisted.string() + "': " + e.what());
        }
        for (const auto& entry : j) {
            auto [id, repo] = repository_from_json(entry);
            if (repos_.count(id)) {
                std::cerr << "repository '" << id
                          << "' in both config file and registry; config file wins\n";
                continue;
            }
            install_repository(id, std::move(repo), true);
        }
    }
}

ServiceState::~ServiceState() {
    for (auto& worker : workers_)
        if (worker.joinable())
            worker.join();
}

void ServiceState::install_repository(const std::string& id, RepositoryConfig repo,
                                      bool dynamic) {
    Repo entry;
    entry.config = std::move(repo);
    entry.dynamic = dynamic;
    auto path = snapshot_path(id);
    if (std::filesystem::exists(path)) {
        entry.published = std::make_shared<const CoauthorIndex>(load_snapshot(path));
    } else {
        entry.published = std::make_shared<const CoauthorIndex>(id);
    }
    repos_.emplace(id, std::move(entry));
}

std::filesystem::path ServiceState::snapshot_path(const std::string& id) const {
    return config_.data_dir / (id + ".snapshot");
}

bool ServiceState::add_repository(const std::string& id, RepositoryConfig repo) {
    if (!valid_repository_id(id))
        throw ConfigError("invalid repository_id '" + id + "'");
    repo.validate();
    std::lock_guard lock(mu_);
    if (repos_.count(id))
        return false;
    install_repository(id, std::move(repo), true);
    persist_dynamic_locked();
    return true;
}

void ServiceState::persist_dynamic_locked() {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [id, repo] : repos_)
        if (repo.dynamic)
            j.push_back(repository_to_json(id, repo.config));
    auto path = config_.data_dir / "repositories.json";
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw IoError("cannot write '" + path.string() + "'");
    out << j.dump(2) << "\n";
}

std::optional<RepositoryConfig> ServiceState::repository(const std::string& id) const {
    std::lock_guard lock(mu_);
    auto it = repos_.find(id);
    if (it == repos_.end())
        return std::nullopt;
    return it->second.config;
}

std::vector<std::string> ServiceState::repository_ids() const {
    std::lock_guard lock(mu_);
    std::vector<std::string> ids;
    ids.reserve(repos_.size());
    for (const auto& [id, repo] : repos_)
        ids.push_back(id);
    return ids;
}

std::shared_ptr<const CoauthorIndex> ServiceState::index(const std::string& id) const {
    std::lock_guard lock(mu_);
    auto it = repos_.find(id);
    return it == repos_.end() ? nullptr : it->second.published;
}

void ServiceState::publish(const std::string& id, const CoauthorIndex& working) {
    auto snapshot = std::make_shared<const CoauthorIndex>(working);
    std::lock_guard lock(mu_);
    repos_.at(id).published = std::move(snapshot);
}

std::optional<std::string> ServiceState::start_harvest(const std::string& id) {
    std::lock_guard lock(mu_);
    auto it = repos_.find(id);
    if (it == repos_.end())
        return std::nullopt;
    if (it->second.job_running)
        throw StateError("a harvest is already running for '" + id + "'");
    it->second.job_running = true;
    auto job = std::make_shared<HarvestJob>("job-" + std::to_string(++job_counter_), id);
    std::string job_id = job->status().job_id;
    jobs_.emplace(job_id, job);
    workers_.emplace_back([this, id, job] {
        try {
            run_harvest_job(id, job);
        } catch (const std::exception& e) {
            // failures are reported through the job; this catches trouble
            // after completion, like an unwritable snapshot file
            std::cerr << "harvest worker for '" << id << "': " << e.what() << "\n";
        }
    });
    return job_id;
}

JobStatus ServiceState::harvest_blocking(const std::string& id) {
    std::shared_ptr<HarvestJob> job;
    {
        std::lock_guard lock(mu_);
        auto it = repos_.find(id);
        if (it == repos_.end())
            throw NotFoundError("unknown repository '" + id + "'");
        if (it->second.job_running)
            throw StateError("a harvest is already running for '" + id + "'");
        it->second.job_running = true;
        job = std::make_shared<HarvestJob>("job-" + std::to_string(++job_counter_), id);
        jobs_.emplace(job->status().job_id, job);
    }
    run_harvest_job(id, job);
    return job->status();
}

void ServiceState::run_harvest_job(const std::string& id,
                                   const std::shared_ptr<HarvestJob>& job) {
    RepositoryConfig repo_config;
    std::shared_ptr<const CoauthorIndex> base;
    {
        std::lock_guard lock(mu_);
        auto& repo = repos_.at(id);
        repo_config = repo.config;
        base = repo.published;
    }

    struct Release {
        ServiceState* state;
        const std::string& id;
        ~Release() {
            std::lock_guard lock(state->mu_);
            state->repos_.at(id).job_running = false;
        }
    } release{this, id};

    CoauthorIndex working(*base);
    working.set_repository_id(id);
    OaiClient client(repo_config);
    long since_publish = 0;
    client.harvest(*job, [&](const OaiRecord& record) {
        auto extracted = extract_publication(record);
        if (std::holds_alternative<Deletion>(extracted)) {
            if (working.retract(std::get<Deletion>(extracted).record_id))
                job->add_ingested(1);
        } else {
            working.ingest(std::get<Publication>(extracted));
            job->add_ingested(1);
        }
        if (++since_publish >= kPublishBatch) {
            publish(id, working);
            since_publish = 0;
        }
        return true;
    });
    publish(id, working);
    save_snapshot(working, snapshot_path(id));
}

std::optional<JobStatus> ServiceState::job(const std::string& job_id) const {
    std::lock_guard lock(mu_);
    auto it = jobs_.find(job_id);
    if (it == jobs_.end())
        return std::nullopt;
    return it->second->status();
}

std::shared_ptr<const BetweennessResult>
ServiceState::centrality(const std::shared_ptr<const CoauthorIndex>& snapshot,
                         const PartitionKey& partition, EdgeMode mode) {
    std::string key = snapshot->repository_id() + "|" + partition.to_string() + "|" +
                      std::string(to_string(mode));
    {
        std::lock_guard lock(mu_);
        auto it = bc_cache_.find(key);
        if (it != bc_cache_.end() && it->second.generation == snapshot->generation())
            return it->second.result;
    }
    auto result = std::make_shared<const BetweennessResult>(
        betweenness(snapshot->subgraph(partition), mode));
    std::lock_guard lock(mu_);
    bc_cache_[key] = {snapshot->generation(), result};
    return result;
}

} // namespace coanet
