#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "coanet/oai/types.hpp"

namespace coanet {

/// Receives one record at a time, in arrival order. Return true to continue,
/// false to stop the harvest after this record (job ends up cancelled).
using RecordSink = std::function<bool(const OaiRecord&)>;

/// OAI-PMH 2.0 protocol client for a single repository. Requests are strictly
/// sequential (token chaining demands it) and spaced by polite_delay_ms;
/// transport failures and 5xx responses are retried with exponential backoff,
/// honoring Retry-After. Not thread-safe; use one client per harvest.
class OaiClient {
public:
    struct Options {
        std::string user_agent = "coanet/1.0 (OAI-PMH harvester)";
        std::chrono::seconds connect_timeout{10};
        std::chrono::seconds read_timeout{60};
    };

    explicit OaiClient(RepositoryConfig config);
    OaiClient(RepositoryConfig config, Options options);
    ~OaiClient();

    OaiClient(const OaiClient&) = delete;
    OaiClient& operator=(const OaiClient&) = delete;

    /// Identify pre-flight. Throws NetworkError, ProtocolError,
    /// UnsupportedVersion.
    RepositoryInfo identify();

    /// Pages through ListRecords, feeding every record to `sink` exactly once.
    /// The job must be pending; it ends completed, failed or cancelled. A
    /// pending job carrying a resumption token continues from that cursor.
    void harvest(HarvestJob& job, const RecordSink& sink);

    const RepositoryConfig& config() const { return config_; }

private:
    using Query = std::vector<std::pair<std::string, std::string>>;

    /// One HTTP round trip with politeness pacing and per-page retry budget.
    std::string fetch(const Query& query);
    void polite_pause();
    void run_harvest(HarvestJob& job, const RecordSink& sink);

    RepositoryConfig config_;
    Options options_;
    struct Http;
    std::unique_ptr<Http> http_;
    std::chrono::steady_clock::time_point last_request_;
    bool any_request_sent_ = false;
};

} // namespace coanet
