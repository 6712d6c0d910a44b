#include <doctest.h>

#include <chrono>
#include <set>
#include <vector>

#include "coanet/errors.hpp"
#include "coanet/oai/client.hpp"
#include "mock_repository.hpp"

using namespace coanet;
using namespace coanet::testing;
using namespace std::chrono;

namespace {

std::vector<MockRecord> make_records(int n, const std::string& prefix = "oai:mock:") {
    std::vector<MockRecord> records;
    for (int i = 1; i <= n; ++i) {
        MockRecord rec;
        rec.identifier = prefix + std::to_string(i);
        char day[3];
        std::snprintf(day, sizeof day, "%02d", (i - 1) % 28 + 1);
        rec.datestamp = std::string("2024-03-") + day;
        rec.set_specs = {i % 2 == 0 ? "even" : "odd"};
        rec.dc.emplace_back("title", "Record " + std::to_string(i));
        rec.dc.emplace_back("creator", "Author, Number" + std::to_string(i));
        records.push_back(std::move(rec));
    }
    return records;
}

RepositoryConfig config_for(const MockRepository& repo, int delay_ms = 0) {
    RepositoryConfig config;
    config.base_url = repo.base_url();
    config.polite_delay_ms = delay_ms;
    return config;
}

std::vector<std::string> harvest_ids(OaiClient& client, HarvestJob& job) {
    std::vector<std::string> ids;
    client.harvest(job, [&](const OaiRecord& rec) {
        ids.push_back(rec.identifier);
        return true;
    });
    return ids;
}

} // namespace

TEST_CASE("identify round-trips the mock's self-description") {
    MockRepository repo;
    OaiClient client(config_for(repo));
    RepositoryInfo info = client.identify();
    CHECK(info.repository_name == "Mock Repository");
    CHECK(info.protocol_version == "2.0");
    CHECK(info.base_url == repo.base_url());
}

TEST_CASE("identify rejects other protocol versions") {
    MockRepository repo;
    repo.set_protocol_version("1.1");
    OaiClient client(config_for(repo));
    CHECK_THROWS_AS(client.identify(), UnsupportedVersion);
}

TEST_CASE("25 records over three pages arrive exactly once, in order") {
    MockRepository repo(make_records(25));
    repo.set_page_size(10);
    OaiClient client(config_for(repo));
    HarvestJob job("j1", "mock");

    auto ids = harvest_ids(client, job);

    REQUIRE(ids.size() == 25);
    for (int i = 0; i < 25; ++i)
        CHECK(ids[i] == "oai:mock:" + std::to_string(i + 1));
    CHECK(repo.request_count() == 3);

    JobStatus status = job.status();
    CHECK(status.state == JobState::completed);
    CHECK(status.records_received == 25);
    CHECK_FALSE(status.last_resumption_token.has_value());
    CHECK_FALSE(status.error.has_value());
}

TEST_CASE("noRecordsMatch completes the job with an empty stream") {
    MockRepository repo; // zero records
    OaiClient client(config_for(repo));
    HarvestJob job("j1", "mock");
    auto ids = harvest_ids(client, job);
    CHECK(ids.empty());
    CHECK(job.status().state == JobState::completed);
    CHECK(job.status().records_received == 0);
}

TEST_CASE("consecutive requests honor the polite delay") {
    MockRepository repo(make_records(9));
    repo.set_page_size(3);
    const int delay_ms = 80;
    OaiClient client(config_for(repo, delay_ms));
    HarvestJob job("j1", "mock");
    harvest_ids(client, job);

    // The client spaces the *sends*; the log records handler starts, so each
    // gap carries connection-setup jitter. Allow a little per-gap slack and
    // require the full budget across the run.
    auto log = repo.request_log();
    REQUIRE(log.size() == 3);
    for (size_t i = 1; i < log.size(); ++i)
        CHECK(log[i].at - log[i - 1].at >= milliseconds(delay_ms - 25));
    CHECK(log.back().at - log.front().at >=
          milliseconds((static_cast<int>(log.size()) - 1) * delay_ms - 25));
}

TEST_CASE("a 503 with Retry-After is retried after the advertised wait") {
    MockRepository repo(make_records(25));
    repo.set_page_size(10);
    repo.fail_once(2, 503, 1); // second request = page 2 fetch

    OaiClient client(config_for(repo));
    HarvestJob job("j1", "mock");
    auto ids = harvest_ids(client, job);

    std::set<std::string> unique(ids.begin(), ids.end());
    CHECK(ids.size() == 25);
    CHECK(unique.size() == 25);
    CHECK(job.status().state == JobState::completed);

    // Requests: page1, failed page2, retried page2, page3.
    auto log = repo.request_log();
    REQUIRE(log.size() == 4);
    CHECK(log[2].at - log[1].at >= seconds(1));
}

TEST_CASE("retries stop after max_retries and fail the job") {
    MockRepository repo(make_records(5));
    repo.fail_once(1, 503, 0);
    repo.fail_once(2, 503, 0);

    RepositoryConfig config = config_for(repo);
    config.max_retries = 1;
    OaiClient client(config);
    HarvestJob job("j1", "mock");
    CHECK_THROWS_AS(harvest_ids(client, job), RetriesExhausted);
    CHECK(job.status().state == JobState::failed);
    REQUIRE(job.status().error.has_value());
    CHECK(job.status().error->find("HTTP 503") != std::string::npos);
}

TEST_CASE("non-5xx error statuses are protocol errors, not retried") {
    MockRepository repo(make_records(5));
    repo.fail_once(1, 404, -1);
    OaiClient client(config_for(repo));
    HarvestJob job("j1", "mock");
    CHECK_THROWS_AS(harvest_ids(client, job), ProtocolError);
    CHECK(repo.request_count() == 1);
    CHECK(job.status().state == JobState::failed);
}

TEST_CASE("unparseable responses are protocol errors") {
    MockRepository repo(make_records(5));
    repo.garble_next_response();
    OaiClient client(config_for(repo));
    HarvestJob job("j1", "mock");
    CHECK_THROWS_AS(harvest_ids(client, job), ProtocolError);
}

TEST_CASE("an unreachable endpoint raises a network error") {
    RepositoryConfig config;
    config.base_url = "http://127.0.0.1:9/oai"; // discard port, nothing listens
    config.polite_delay_ms = 0;
    config.max_retries = 0;
    OaiClient client(config);
    HarvestJob job("j1", "mock");
    CHECK_THROWS_AS(harvest_ids(client, job), NetworkError);
}

TEST_CASE("an expired token restarts the list once without duplicates") {
    MockRepository repo(make_records(12));
    repo.set_page_size(4);
    repo.invalidate_next_token();

    OaiClient client(config_for(repo));
    HarvestJob job("j1", "mock");
    auto ids = harvest_ids(client, job);

    REQUIRE(ids.size() == 12);
    std::set<std::string> unique(ids.begin(), ids.end());
    CHECK(unique.size() == 12);
    CHECK(job.status().state == JobState::completed);
    // page1, rejected token fetch, restart page1, pages 2 and 3.
    CHECK(repo.request_count() == 5);
}

TEST_CASE("a second expired token fails the job") {
    MockRepository repo(make_records(12));
    repo.set_page_size(4);
    repo.invalidate_next_token(2);

    OaiClient client(config_for(repo));
    HarvestJob job("j1", "mock");
    CHECK_THROWS_AS(harvest_ids(client, job), OaiError);
    CHECK(job.status().state == JobState::failed);
}

TEST_CASE("stopping at a page boundary keeps a resumable cursor") {
    MockRepository repo(make_records(25));
    repo.set_page_size(10);
    OaiClient client(config_for(repo));

    HarvestJob first("j1", "mock");
    int seen = 0;
    client.harvest(first, [&](const OaiRecord&) { return ++seen < 10; });

    CHECK(first.status().state == JobState::cancelled);
    CHECK(first.status().records_received == 10);
    REQUIRE(first.status().last_resumption_token.has_value());

    HarvestJob second("j2", "mock");
    second.seed_resumption_token(*first.status().last_resumption_token);
    OaiClient client2(config_for(repo));
    auto rest = harvest_ids(client2, second);

    REQUIRE(rest.size() == 15);
    for (int i = 0; i < 15; ++i)
        CHECK(rest[i] == "oai:mock:" + std::to_string(i + 11));
    CHECK(second.status().state == JobState::completed);
}

TEST_CASE("set filtering reaches the wire and filters records") {
    MockRepository repo(make_records(10));
    RepositoryConfig config = config_for(repo);
    config.set_spec = "even";
    OaiClient client(config);
    HarvestJob job("j1", "mock");
    auto ids = harvest_ids(client, job);
    CHECK(ids.size() == 5);
    for (const std::string& id : ids) {
        int n = std::stoi(id.substr(id.rfind(':') + 1));
        CHECK(n % 2 == 0);
    }
}

TEST_CASE("from and until bound the harvest window inclusively") {
    MockRepository repo(make_records(10)); // datestamps 2024-03-01 .. 2024-03-10
    RepositoryConfig config = config_for(repo);
    config.from = Datestamp::parse("2024-03-04");
    config.until = Datestamp::parse("2024-03-06");
    OaiClient client(config);
    HarvestJob job("j1", "mock");
    auto ids = harvest_ids(client, job);
    CHECK(ids == std::vector<std::string>{"oai:mock:4", "oai:mock:5", "oai:mock:6"});
}

TEST_CASE("harvest requires a pending job") {
    MockRepository repo(make_records(1));
    OaiClient client(config_for(repo));
    HarvestJob job("j1", "mock");
    harvest_ids(client, job);
    CHECK_THROWS_AS(harvest_ids(client, job), StateError);
}
