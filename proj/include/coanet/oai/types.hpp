#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "coanet/util/datestamp.hpp"

namespace coanet {

/// How to reach one OAI-PMH repository and how politely to do it.
struct RepositoryConfig {
    std::string base_url;
    std::string metadata_prefix = "oai_dc";
    std::optional<std::string> set_spec;
    std::optional<Datestamp> from;
    std::optional<Datestamp> until;
    int polite_delay_ms = 1000;
    int max_retries = 5;

    /// Throws ConfigError if any invariant is violated: base_url must be an
    /// absolute http(s) URL, from <= until, and both bounds must share the
    /// same granularity.
    void validate() const;
};

/// Parsed Identify response.
struct RepositoryInfo {
    std::string repository_name;
    std::string base_url;
    std::string protocol_version;
    std::string earliest_datestamp;
    std::string granularity;
};

/// One harvested metadata record.
struct OaiRecord {
    std::string identifier;
    Datestamp datestamp;
    std::vector<std::string> set_specs;
    bool deleted = false;
    /// Dublin Core element local name -> values in document order. Keys are
    /// restricted to the 15 DC element names; anything else is dropped.
    std::map<std::string, std::vector<std::string>> dc_fields;
    std::string raw_xml;

    bool operator==(const OaiRecord&) const = default;
};

/// One ListRecords response page. An absent resumption_token marks the final
/// page (an empty <resumptionToken/> element maps to absent here).
struct ListRecordsPage {
    std::vector<OaiRecord> records;
    std::optional<std::string> resumption_token;
    std::optional<long> complete_list_size;
    std::optional<long> cursor;
};

enum class JobState { pending, running, completed, failed, cancelled };

std::string_view to_string(JobState state);

/// Point-in-time copy of a job's observable state.
struct JobStatus {
    std::string job_id;
    std::string repository_id;
    JobState state = JobState::pending;
    long records_received = 0;
    long records_ingested = 0;
    std::optional<std::string> last_resumption_token;
    std::optional<std::string> error;
};

/// Tracks one harvest run. Thread-safe: the harvester mutates it while API
/// handlers poll status(). Transitions only along
/// pending -> running -> {completed, failed, cancelled}.
class HarvestJob {
public:
    HarvestJob(std::string job_id, std::string repository_id);

    /// Resume support: seed the cursor of a fresh (pending) job so the next
    /// harvest continues after the last fully consumed page.
    void seed_resumption_token(std::string token);

    void start();
    void complete();
    void fail(std::string error);
    void cancel();

    void add_received(long n);
    void add_ingested(long n);
    void set_resumption_token(std::optional<std::string> token);

    JobStatus status() const;
    JobState state() const;

private:
    void transition(JobState next);

    mutable std::mutex mu_;
    JobStatus status_;
};

} // namespace coanet
