#include "coanet/oai/types.hpp"

#include "coanet/errors.hpp"
#include "coanet/util/strings.hpp"

namespace coanet {

void RepositoryConfig::validate() const {
    if (!starts_with_ignore_case(base_url, "http://") &&
        !starts_with_ignore_case(base_url, "https://"))
        throw ConfigError("base_url must be an absolute http or https URL: '" + base_url + "'");
    size_t scheme_end = base_url.find("://");
    if (base_url.size() <= scheme_end + 3 || base_url[scheme_end + 3] == '/')
        throw ConfigError("base_url has no host: '" + base_url + "'");
    if (metadata_prefix.empty())
        throw ConfigError("metadata_prefix must not be empty");
    if (polite_delay_ms < 0)
        throw ConfigError("polite_delay_ms must be non-negative");
    if (max_retries < 0)
        throw ConfigError("max_retries must be non-negative");
    if (from && until) {
        if (*from > *until)
            throw ConfigError("'from' is after 'until'");
        if (from->date_only() != until->date_only())
            throw ConfigError("'from' and 'until' must share the same granularity");
    }
}

std::string_view to_string(JobState state) {
    switch (state) {
    case JobState::pending: return "pending";
    case JobState::running: return "running";
    case JobState::completed: return "completed";
    case JobState::failed: return "failed";
    case JobState::cancelled: return "cancelled";
    }
    return "unknown";
}

HarvestJob::HarvestJob(std::string job_id, std::string repository_id) {
    status_.job_id = std::move(job_id);
    status_.repository_id = std::move(repository_id);
}

void HarvestJob::seed_resumption_token(std::string token) {
    std::lock_guard lock(mu_);
    if (status_.state != JobState::pending)
        throw StateError("resumption token may only be seeded on a pending job");
    status_.last_resumption_token = std::move(token);
}

void HarvestJob::transition(JobState next) {
    std::lock_guard lock(mu_);
    bool ok = (status_.state == JobState::pending && next == JobState::running) ||
              (status_.state == JobState::running &&
               (next == JobState::completed || next == JobState::failed ||
                next == JobState::cancelled));
    if (!ok)
        throw StateError("invalid job transition " + std::string(to_string(status_.state)) +
                         " -> " + std::string(to_string(next)));
    status_.state = next;
}

void HarvestJob::start() { transition(JobState::running); }
void HarvestJob::complete() { transition(JobState::completed); }

void HarvestJob::fail(std::string error) {
    transition(JobState::failed);
    std::lock_guard lock(mu_);
    status_.error = std::move(error);
}

void HarvestJob::cancel() { transition(JobState::cancelled); }

void HarvestJob::add_received(long n) {
    std::lock_guard lock(mu_);
    status_.records_received += n;
}

void HarvestJob::add_ingested(long n) {
    std::lock_guard lock(mu_);
    status_.records_ingested += n;
}

void HarvestJob::set_resumption_token(std::optional<std::string> token) {
    std::lock_guard lock(mu_);
    status_.last_resumption_token = std::move(token);
}

JobStatus HarvestJob::status() const {
    std::lock_guard lock(mu_);
    return status_;
}

JobState HarvestJob::state() const {
    std::lock_guard lock(mu_);
    return status_.state;
}

} // namespace coanet
