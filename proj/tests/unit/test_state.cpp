#include <doctest.h>

#include <chrono>
#include <thread>

#include "coanet/errors.hpp"
#include "coanet/service/state.hpp"
#include "fixtures.hpp"
#include "mock_repository.hpp"

using namespace coanet;
using namespace coanet::testing;
using namespace std::chrono;

namespace {

ServiceConfig base_config(const TempDir& dir) {
    ServiceConfig config;
    config.data_dir = dir.path() / "data";
    return config;
}

RepositoryConfig repo_config(const MockRepository& repo, int delay_ms = 0) {
    RepositoryConfig config;
    config.base_url = repo.base_url();
    config.polite_delay_ms = delay_ms;
    return config;
}

JobStatus wait_for_job(ServiceState& state, const std::string& job_id) {
    auto deadline = steady_clock::now() + seconds(15);
    while (steady_clock::now() < deadline) {
        auto status = state.job(job_id);
        REQUIRE(status.has_value());
        if (status->state != JobState::pending && status->state != JobState::running)
            return *status;
        std::this_thread::sleep_for(milliseconds(10));
    }
    FAIL("job did not finish in time");
    return {};
}

} // namespace

TEST_CASE("fresh state starts empty and creates its data directory") {
    TempDir dir;
    ServiceState state(base_config(dir));
    CHECK(std::filesystem::is_directory(dir.path() / "data"));
    CHECK(state.repository_ids().empty());
    CHECK(state.index("nope") == nullptr);
    CHECK_FALSE(state.repository("nope").has_value());
    CHECK_FALSE(state.job("job-1").has_value());
    CHECK(state.snapshot_path("x") == dir.path() / "data" / "x.snapshot");
}

TEST_CASE("an unusable data directory is rejected") {
    TempDir dir;
    write_file(dir.path() / "blocker", "file, not a directory");
    ServiceConfig config;
    config.data_dir = dir.path() / "blocker";
    CHECK_THROWS_AS(ServiceState{std::move(config)}, ConfigError);
}

TEST_CASE("config-file repositories are installed with empty indexes") {
    TempDir dir;
    MockRepository repo;
    auto config = base_config(dir);
    config.repositories["mock"] = repo_config(repo);
    ServiceState state(config);
    CHECK(state.repository_ids() == std::vector<std::string>{"mock"});
    auto snapshot = state.index("mock");
    REQUIRE(snapshot != nullptr);
    CHECK(snapshot->size() == 0);
    CHECK(snapshot->repository_id() == "mock");
}

TEST_CASE("dynamic registrations persist across restarts") {
    TempDir dir;
    {
        ServiceState state(base_config(dir));
        RepositoryConfig repo;
        repo.base_url = "http://example.org/oai";
        CHECK(state.add_repository("added", repo));
        CHECK_FALSE(state.add_repository("added", repo)); // duplicate
        CHECK_THROWS_AS(state.add_repository("bad id", repo), ConfigError);
        RepositoryConfig ftp;
        ftp.base_url = "ftp://example.org/oai";
        CHECK_THROWS_AS(state.add_repository("ftp", ftp), ConfigError);
        CHECK(std::filesystem::exists(dir.path() / "data" / "repositories.json"));
    }
    ServiceState reloaded(base_config(dir));
    CHECK(reloaded.repository_ids() == std::vector<std::string>{"added"});
    CHECK(reloaded.repository("added")->base_url == "http://example.org/oai");
}

TEST_CASE("blocking harvest ingests the fixture corpus and saves a snapshot") {
    TempDir dir;
    MockRepository repo(fixture_records());
    auto config = base_config(dir);
    config.repositories["mock"] = repo_config(repo);
    ServiceState state(config);

    CHECK_THROWS_AS(state.harvest_blocking("unknown"), NotFoundError);

    auto status = state.harvest_blocking("mock");
    CHECK(status.state == JobState::completed);
    CHECK(status.records_received == 12);
    CHECK(status.records_ingested == 12);
    CHECK(state.job(status.job_id)->state == JobState::completed);

    auto snapshot = state.index("mock");
    REQUIRE(snapshot != nullptr);
    CHECK(snapshot->size() == 12);
    CHECK(snapshot->display_name("hopper, grace") == "Grace Hopper");
    CHECK(snapshot->subgraph(PartitionKey::ddc_exact("004")).node_count() == 6);
    CHECK(std::filesystem::exists(state.snapshot_path("mock")));
}

TEST_CASE("a failed harvest releases the repository for the next attempt") {
    TempDir dir;
    MockRepository repo(fixture_records());
    auto config = base_config(dir);
    config.repositories["mock"] = repo_config(repo);
    ServiceState state(config);

    repo.garble_next_response();
    CHECK_THROWS_AS(state.harvest_blocking("mock"), ProtocolError);

    auto status = state.harvest_blocking("mock");
    CHECK(status.state == JobState::completed);
    CHECK(state.index("mock")->size() == 12);
}

TEST_CASE("asynchronous harvests run to completion and refuse overlap") {
    TempDir dir;
    MockRepository repo(fixture_records());
    repo.set_page_size(3);
    auto config = base_config(dir);
    config.repositories["mock"] = repo_config(repo, 120);
    ServiceState state(config);

    CHECK_FALSE(state.start_harvest("unknown").has_value());

    auto job_id = state.start_harvest("mock");
    REQUIRE(job_id.has_value());
    CHECK_THROWS_AS(state.start_harvest("mock"), StateError);
    CHECK_THROWS_AS(state.harvest_blocking("mock"), StateError);

    auto status = wait_for_job(state, *job_id);
    CHECK(status.state == JobState::completed);
    CHECK(status.records_received == 12);
    CHECK(state.index("mock")->size() == 12);

    // Released: a second round trips over nothing.
    auto second = state.start_harvest("mock");
    REQUIRE(second.has_value());
    CHECK(wait_for_job(state, *second).state == JobState::completed);
}

TEST_CASE("centrality results are cached per snapshot generation") {
    TempDir dir;
    MockRepository repo(fixture_records());
    auto config = base_config(dir);
    config.repositories["mock"] = repo_config(repo);
    ServiceState state(config);
    state.harvest_blocking("mock");

    auto snapshot = state.index("mock");
    auto wide = PartitionKey::repository_wide();
    auto r1 = state.centrality(snapshot, wide, EdgeMode::unweighted);
    auto r2 = state.centrality(snapshot, wide, EdgeMode::unweighted);
    CHECK(r1.get() == r2.get()); // cache hit, same object

    auto weighted = state.centrality(snapshot, wide, EdgeMode::weighted);
    CHECK(weighted.get() != r1.get());
    auto partition = state.centrality(snapshot, PartitionKey::ddc_exact("004"),
                                      EdgeMode::unweighted);
    CHECK(partition.get() != r1.get());
    CHECK(partition->raw.at("hopper, grace") == 9.0);

    // Re-harvesting identical records is a no-op: generation and cache hold.
    state.harvest_blocking("mock");
    auto unchanged = state.index("mock");
    CHECK(unchanged->generation() == snapshot->generation());
    CHECK(state.centrality(unchanged, wide, EdgeMode::unweighted).get() == r1.get());

    // New material bumps the generation and invalidates the entry.
    auto records = fixture_records();
    MockRecord extra;
    extra.identifier = "oai:fixture:13";
    extra.datestamp = "2024-01-13";
    extra.set_specs = {"cs"};
    extra.dc = {{"title", "Switching networks"},
                {"creator", "Radia Perlman"},
                {"creator", "Barbara Liskov"},
                {"subject", "ddc:004"}};
    records.push_back(extra);
    repo.set_records(records);
    state.harvest_blocking("mock");

    auto grown = state.index("mock");
    CHECK(grown->generation() > snapshot->generation());
    CHECK(grown->size() == 13);
    auto fresh = state.centrality(grown, wide, EdgeMode::unweighted);
    CHECK(fresh.get() != r1.get());
    CHECK(fresh->raw.count("perlman, radia") == 1);
    // The pinned older snapshot still answers from its own view.
    CHECK(snapshot->size() == 12);
}

TEST_CASE("restart loads the persisted snapshot") {
    TempDir dir;
    MockRepository repo(fixture_records());
    auto config = base_config(dir);
    config.repositories["mock"] = repo_config(repo);
    {
        ServiceState state(config);
        state.harvest_blocking("mock");
    }
    ServiceState reloaded(config);
    auto snapshot = reloaded.index("mock");
    REQUIRE(snapshot != nullptr);
    CHECK(snapshot->size() == 12);
    CHECK(snapshot->display_name("lovelace, ada") == "Ada Lovelace");
    auto result = reloaded.centrality(snapshot, PartitionKey::ddc_exact("004"),
                                      EdgeMode::unweighted);
    CHECK(result->raw.at("hopper, grace") == 9.0);
    CHECK(result->normalized.at("hopper, grace") == 0.9);
}
