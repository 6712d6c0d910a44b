#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "coanet/centrality/ranking.hpp"
#include "coanet/errors.hpp"
#include "coanet/plot/render.hpp"
#include "coanet/service/config.hpp"
#include "coanet/service/params.hpp"
#include "coanet/service/response.hpp"
#include "coanet/service/server.hpp"
#include "coanet/service/state.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitHarvest = 2;
constexpr int kExitNotFound = 3;

using namespace coanet;

int cmd_serve(const std::string& config_path) {
    ServiceConfig config = load_config(config_path);
    ServiceState state(config);
    auto [host, port] = split_listen_address(state.config().listen_address);
    HttpServer server(state);
    std::cerr << "coanet: listening on " << host << ":" << port << "\n";
    if (!server.listen(host, port)) {
        std::cerr << "coanet: cannot listen on " << host << ":" << port << "\n";
        return kExitConfig;
    }
    return kExitOk;
}

int cmd_harvest(const std::string& config_path, const std::string& repo_id) {
    ServiceConfig config = load_config(config_path);
    ServiceState state(config);
    JobStatus status = state.harvest_blocking(repo_id);
    std::cerr << "coanet: harvest " << to_string(status.state) << ", received "
              << status.records_received << ", ingested " << status.records_ingested
              << "\n";
    return status.state == JobState::completed ? kExitOk : kExitHarvest;
}

int cmd_centrality(const std::string& config_path, const std::string& repo_id,
                   const std::optional<std::string>& ddc, std::size_t top,
                   const std::string& mode_name, const std::string& format) {
    ServiceConfig config = load_config(config_path);
    ServiceState state(config);
    auto snapshot = state.index(repo_id);
    if (!snapshot)
        throw NotFoundError("unknown repository '" + repo_id + "'");
    PartitionKey partition = parse_ddc_param(ddc);
    EdgeMode mode = parse_mode_param(mode_name);
    if (top == 0)
        top = state.config().default_top_k;

    auto result = state.centrality(snapshot, partition, mode);
    const CoauthorGraph& graph = snapshot->subgraph(partition);
    CentralityRanking ranking = top_central(*result, graph, top, partition);
    auto response = CentralityResponse::build(
        repo_id, partition, *result, ranking,
        [&](const std::string& name) { return snapshot->display_name(name); });
    if (format == "xml")
        std::cout << response.to_xml();
    else
        std::cout << response.to_json().dump(2) << "\n";
    return kExitOk;
}

int cmd_plot(const std::string& config_path, const std::string& repo_id,
             const std::optional<std::string>& ddc, std::uint64_t seed, int label_top_k,
             const std::string& out_path) {
    ServiceConfig config = load_config(config_path);
    ServiceState state(config);
    auto snapshot = state.index(repo_id);
    if (!snapshot)
        throw NotFoundError("unknown repository '" + repo_id + "'");
    PartitionKey partition = parse_ddc_param(ddc);
    const CoauthorGraph& graph = snapshot->subgraph(partition);
    if (graph.empty())
        throw NotFoundError("partition '" + partition.to_string() +
                            "' has no publications");

    auto result = state.centrality(snapshot, partition, EdgeMode::unweighted);
    LayoutConfig cfg;
    cfg.seed = seed;
    cfg.label_top_k = label_top_k;
    std::map<std::string, std::string> displays;
    for (const auto& [name, count] : graph.publication_count)
        displays.emplace(name, snapshot->display_name(name));
    PlotOutput plot = render_network(graph, *result, cfg, displays);
    if (plot.truncated)
        std::cerr << "coanet: plot truncated to the " << kMaxPlotNodes
                  << " most central authors\n";

    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot write '" + out_path + "'");
    out.write(plot.png.data(), static_cast<std::streamsize>(plot.png.size()));
    if (!out)
        throw IoError("write failed for '" + out_path + "'");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"co-authorship network harvester and centrality service"};
    app.require_subcommand(1);

    std::string config_path = "coanet.json";
    app.add_option("--config", config_path, "service configuration file")
        ->capture_default_str();

    auto* serve = app.add_subcommand("serve", "run the HTTP service");

    std::string repo_id;
    auto* harvest =
        app.add_subcommand("harvest", "harvest one repository and exit");
    harvest->add_option("--repo", repo_id, "repository id")->required();

    std::optional<std::string> ddc;
    std::size_t top = 0;
    std::string mode = "unweighted";
    std::string format = "xml";
    auto* centrality = app.add_subcommand(
        "centrality", "print the most central authors of a partition");
    centrality->add_option("--repo", repo_id, "repository id")->required();
    centrality->add_option("--ddc", ddc, "DDC code (1 digit or 3 digits)");
    centrality->add_option("--top", top, "how many authors (default from config)");
    centrality->add_option("--mode", mode, "unweighted|weighted")
        ->capture_default_str();
    centrality->add_option("--format", format, "xml|json")
        ->check(CLI::IsMember({"xml", "json"}))
        ->capture_default_str();

    std::uint64_t seed = 42;
    int label_top_k = 10;
    std::string out_path;
    auto* plot = app.add_subcommand("plot", "render a partition as a PNG plot");
    plot->add_option("--repo", repo_id, "repository id")->required();
    plot->add_option("--ddc", ddc, "DDC code (1 digit or 3 digits)");
    plot->add_option("--seed", seed, "layout seed")->capture_default_str();
    plot->add_option("--top", label_top_k, "how many authors get labels")
        ->capture_default_str();
    plot->add_option("--out", out_path, "output PNG file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (serve->parsed())
            return cmd_serve(config_path);
        if (harvest->parsed())
            return cmd_harvest(config_path, repo_id);
        if (centrality->parsed())
            return cmd_centrality(config_path, repo_id, ddc, top, mode, format);
        if (plot->parsed())
            return cmd_plot(config_path, repo_id, ddc, seed, label_top_k, out_path);
        return kExitConfig;
    } catch (const NotFoundError& e) {
        std::cerr << "coanet: " << e.what() << "\n";
        return kExitNotFound;
    } catch (const NetworkError& e) {
        std::cerr << "coanet: " << e.what() << "\n";
        return kExitHarvest;
    } catch (const OaiError& e) {
        std::cerr << "coanet: " << e.what() << "\n";
        return kExitHarvest;
    } catch (const ProtocolError& e) {
        std::cerr << "coanet: " << e.what() << "\n";
        return kExitHarvest;
    } catch (const StateError& e) {
        std::cerr << "coanet: " << e.what() << "\n";
        return kExitHarvest;
    } catch (const std::exception& e) {
        std::cerr << "coanet: " << e.what() << "\n";
        return kExitConfig;
    }
}
