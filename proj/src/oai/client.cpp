#include "coanet/oai/client.hpp"

#include <algorithm>
#include <charconv>
#include <thread>
#include <unordered_set>

#include <httplib.h>

#include "coanet/errors.hpp"
#include "coanet/oai/parser.hpp"

namespace coanet {

namespace {

constexpr std::chrono::seconds kBackoffBase{1};
constexpr std::chrono::seconds kBackoffCap{64};

std::string percent_encode(std::string_view value) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    out.reserve(value.size());
    for (unsigned char c : value) {
        bool unreserved = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                          (c >= '0' && c <= '9') || c == '-' || c == '.' || c == '_' || c == '~';
        if (unreserved) {
            out.push_back(static_cast<char>(c));
        } else {
            out.push_back('%');
            out.push_back(hex[c >> 4]);
            out.push_back(hex[c & 0xf]);
        }
    }
    return out;
}

/// Split an absolute URL into origin (scheme://host[:port]) and path.
std::pair<std::string, std::string> split_url(const std::string& url) {
    size_t scheme_end = url.find("://");
    if (scheme_end == std::string::npos)
        throw ConfigError("base_url is not absolute: '" + url + "'");
    size_t path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos)
        return {url, "/"};
    return {url.substr(0, path_start), url.substr(path_start)};
}

std::optional<std::chrono::seconds> parse_retry_after(const std::string& value) {
    long seconds = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), seconds);
    if (ec != std::errc{} || ptr != value.data() + value.size() || seconds < 0)
        return std::nullopt; // HTTP-date form not supported
    return std::chrono::seconds{seconds};
}

} // namespace

struct OaiClient::Http {
    httplib::Client client;
    std::string path;

    Http(const std::string& origin, std::string path_arg)
        : client(origin), path(std::move(path_arg)) {}
};

OaiClient::OaiClient(RepositoryConfig config) : OaiClient(std::move(config), Options()) {}

OaiClient::OaiClient(RepositoryConfig config, Options options)
    : config_(std::move(config)), options_(std::move(options)) {
    config_.validate();
    auto [origin, path] = split_url(config_.base_url);
    http_ = std::make_unique<Http>(origin, std::move(path));
    http_->client.set_connection_timeout(options_.connect_timeout);
    http_->client.set_read_timeout(options_.read_timeout);
    http_->client.set_follow_location(true);
    http_->client.set_default_headers({{"User-Agent", options_.user_agent}});
}

OaiClient::~OaiClient() = default;

void OaiClient::polite_pause() {
    if (!any_request_sent_ || config_.polite_delay_ms == 0)
        return;
    std::this_thread::sleep_until(last_request_ +
                                  std::chrono::milliseconds(config_.polite_delay_ms));
}

std::string OaiClient::fetch(const Query& query) {
    std::string target = http_->path;
    target.push_back('?');
    for (size_t i = 0; i < query.size(); ++i) {
        if (i > 0)
            target.push_back('&');
        target += percent_encode(query[i].first);
        target.push_back('=');
        target += percent_encode(query[i].second);
    }

    std::string last_error;
    for (int attempt = 0;; ++attempt) {
        polite_pause();
        last_request_ = std::chrono::steady_clock::now();
        any_request_sent_ = true;

        httplib::Result res = http_->client.Get(target);

        std::optional<std::chrono::seconds> retry_after;
        if (!res) {
            last_error = "transport failure: " + httplib::to_string(res.error());
        } else if (res->status >= 500) {
            last_error = "HTTP " + std::to_string(res->status);
            if (res->has_header("Retry-After"))
                retry_after = parse_retry_after(res->get_header_value("Retry-After"));
        } else if (res->status != 200) {
            throw ProtocolError("unexpected HTTP status " + std::to_string(res->status) +
                                " from " + config_.base_url);
        } else {
            return res->body;
        }

        if (attempt >= config_.max_retries)
            throw RetriesExhausted("giving up on " + config_.base_url + " after " +
                                   std::to_string(attempt + 1) + " attempts (" + last_error + ")");

        std::chrono::seconds delay = retry_after.value_or(
            std::min(kBackoffCap, kBackoffBase * (1L << std::min(attempt, 6))));
        std::this_thread::sleep_for(delay);
    }
}

RepositoryInfo OaiClient::identify() {
    return parse_identify(fetch({{"verb", "Identify"}}));
}

void OaiClient::harvest(HarvestJob& job, const RecordSink& sink) {
    if (job.state() != JobState::pending)
        throw StateError("harvest requires a pending job");
    job.start();
    try {
        run_harvest(job, sink);
    } catch (const std::exception& e) {
        job.fail(e.what());
        throw;
    }
}

void OaiClient::run_harvest(HarvestJob& job, const RecordSink& sink) {
    std::optional<std::string> token = job.status().last_resumption_token;
    std::unordered_set<std::string> delivered;
    bool restarted = false;

    while (true) {
        Query query;
        if (token) {
            query = {{"verb", "ListRecords"}, {"resumptionToken", *token}};
        } else {
            query = {{"verb", "ListRecords"}, {"metadataPrefix", config_.metadata_prefix}};
            if (config_.set_spec)
                query.emplace_back("set", *config_.set_spec);
            if (config_.from)
                query.emplace_back("from", config_.from->to_string());
            if (config_.until)
                query.emplace_back("until", config_.until->to_string());
        }

        ListRecordsPage page;
        try {
            page = parse_list_records(fetch(query));
        } catch (const OaiError& e) {
            if (e.code() == "noRecordsMatch") {
                job.set_resumption_token(std::nullopt);
                job.complete();
                return;
            }
            // Tokens are allowed to expire; restart the list once from the top.
            // Already-delivered identifiers are suppressed below, so the
            // stream still yields each record at most once.
            if (e.code() == "badResumptionToken" && !restarted) {
                restarted = true;
                token = std::nullopt;
                job.set_resumption_token(std::nullopt);
                continue;
            }
            throw;
        }

        job.add_received(static_cast<long>(page.records.size()));

        bool stop = false;
        size_t consumed = 0;
        for (const OaiRecord& record : page.records) {
            if (!delivered.insert(record.identifier).second) {
                ++consumed;
                continue;
            }
            bool keep_going = sink(record);
            ++consumed;
            if (!keep_going) {
                stop = true;
                break;
            }
        }

        bool full_page = consumed == page.records.size();
        if (full_page)
            job.set_resumption_token(page.resumption_token);

        if (stop) {
            job.cancel();
            return;
        }
        if (!page.resumption_token) {
            job.complete();
            return;
        }
        token = page.resumption_token;
    }
}

} // namespace coanet
