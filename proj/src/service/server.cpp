#include "coanet/service/server.hpp"

#include <charconv>

#include <httplib.h>
#include <json.hpp>

#include "coanet/centrality/ranking.hpp"
#include "coanet/errors.hpp"
#include "coanet/plot/render.hpp"
#include "coanet/service/params.hpp"
#include "coanet/service/response.hpp"
#include "coanet/service/schema.hpp"

namespace coanet {

using nlohmann::json;

namespace {

constexpr char kIdPattern[] = R"(([A-Za-z0-9._-]+))";

void send_json(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(2) + "\n", "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& message) {
    send_json(res, status, json{{"error", message}});
}

std::optional<std::string> optional_param(const httplib::Request& req, const char* name) {
    if (!req.has_param(name))
        return std::nullopt;
    return req.get_param_value(name);
}

/// Positive integer query parameter; ConfigError on junk.
std::size_t parse_top(const std::string& value) {
    std::size_t top = 0;
    const char* begin = value.data();
    const char* end = begin + value.size();
    auto [ptr, ec] = std::from_chars(begin, end, top);
    if (ec != std::errc{} || ptr != end || top < 1)
        throw ConfigError("top must be a positive integer, got '" + value + "'");
    return top;
}

std::uint64_t parse_seed(const std::string& value) {
    std::uint64_t seed = 0;
    const char* begin = value.data();
    const char* end = begin + value.size();
    auto [ptr, ec] = std::from_chars(begin, end, seed);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError("seed must be an unsigned integer, got '" + value + "'");
    return seed;
}

json job_to_json(const JobStatus& status) {
    json j{{"job_id", status.job_id},
           {"repository_id", status.repository_id},
           {"state", std::string(to_string(status.state))},
           {"records_received", status.records_received},
           {"records_ingested", status.records_ingested}};
    if (status.last_resumption_token)
        j["resumption_token"] = *status.last_resumption_token;
    if (status.error)
        j["error"] = *status.error;
    return j;
}

} // namespace

HttpServer::HttpServer(ServiceState& state)
    : state_(state), server_(std::make_unique<httplib::Server>()) {
    install_routes();
}

HttpServer::~HttpServer() = default;

bool HttpServer::listen(const std::string& host, int port) {
    return server_->listen(host, port);
}

int HttpServer::bind_any_port(const std::string& host) {
    return server_->bind_to_any_port(host);
}

bool HttpServer::serve_after_bind() {
    return server_->listen_after_bind();
}

void HttpServer::stop() {
    server_->stop();
}

void HttpServer::install_routes() {
    server_->Post("/repositories", [this](const httplib::Request& req,
                                          httplib::Response& res) {
        json body;
        try {
            body = json::parse(req.body);
        } catch (const json::exception& e) {
            return send_error(res, 400, std::string("invalid JSON body: ") + e.what());
        }
        try {
            auto [id, repo] = repository_from_json(body);
            if (!state_.add_repository(id, repo))
                return send_error(res, 409, "repository '" + id + "' already exists");
            res.set_header("Location", "/repositories/" + id);
            send_json(res, 201, repository_to_json(id, repo));
        } catch (const ConfigError& e) {
            send_error(res, 400, e.what());
        }
    });

    server_->Get("/repositories", [this](const httplib::Request&, httplib::Response& res) {
        json list = json::array();
        for (const auto& id : state_.repository_ids())
            list.push_back(repository_to_json(id, *state_.repository(id)));
        send_json(res, 200, list);
    });

    server_->Get(std::string("/repositories/") + kIdPattern,
                 [this](const httplib::Request& req, httplib::Response& res) {
                     const std::string& id = req.matches[1];
                     auto repo = state_.repository(id);
                     if (!repo)
                         return send_error(res, 404, "unknown repository '" + id + "'");
                     json body = repository_to_json(id, *repo);
                     auto snapshot = state_.index(id);
                     body["publications"] = snapshot->size();
                     send_json(res, 200, body);
                 });

    server_->Post(std::string("/repositories/") + kIdPattern + "/harvest",
                  [this](const httplib::Request& req, httplib::Response& res) {
                      const std::string& id = req.matches[1];
                      try {
                          auto job_id = state_.start_harvest(id);
                          if (!job_id)
                              return send_error(res, 404, "unknown repository '" + id + "'");
                          send_json(res, 202,
                                    json{{"job_id", *job_id},
                                         {"status_url", "/jobs/" + *job_id}});
                      } catch (const StateError& e) {
                          send_error(res, 409, e.what());
                      }
                  });

    server_->Get(std::string("/jobs/") + kIdPattern,
                 [this](const httplib::Request& req, httplib::Response& res) {
                     const std::string& job_id = req.matches[1];
                     auto status = state_.job(job_id);
                     if (!status)
                         return send_error(res, 404, "unknown job '" + job_id + "'");
                     send_json(res, 200, job_to_json(*status));
                 });

    server_->Get(std::string("/repositories/") + kIdPattern + "/centrality",
                 [this](const httplib::Request& req, httplib::Response& res) {
                     const std::string& id = req.matches[1];
                     auto snapshot = state_.index(id);
                     if (!snapshot)
                         return send_error(res, 404, "unknown repository '" + id + "'");
                     PartitionKey partition;
                     EdgeMode mode = EdgeMode::unweighted;
                     std::size_t top = state_.config().default_top_k;
                     std::string format = "xml";
                     try {
                         partition = parse_ddc_param(optional_param(req, "ddc"));
                         if (auto v = optional_param(req, "top"))
                             top = parse_top(*v);
                         if (auto v = optional_param(req, "mode"))
                             mode = parse_mode_param(*v);
                         if (auto v = optional_param(req, "format")) {
                             if (*v != "xml" && *v != "json")
                                 throw ConfigError("format must be 'xml' or 'json'");
                             format = *v;
                         }
                     } catch (const ConfigError& e) {
                         return send_error(res, 400, e.what());
                     }

                     auto result = state_.centrality(snapshot, partition, mode);
                     const CoauthorGraph& graph = snapshot->subgraph(partition);
                     CentralityRanking ranking = top_central(*result, graph, top, partition);
                     auto response = CentralityResponse::build(
                         id, partition, *result, ranking,
                         [&](const std::string& name) { return snapshot->display_name(name); });
                     if (format == "xml")
                         res.set_content(response.to_xml(), "application/xml");
                     else
                         send_json(res, 200, response.to_json());
                 });

    server_->Get(std::string("/repositories/") + kIdPattern + "/network.png",
                 [this](const httplib::Request& req, httplib::Response& res) {
                     const std::string& id = req.matches[1];
                     auto snapshot = state_.index(id);
                     if (!snapshot)
                         return send_error(res, 404, "unknown repository '" + id + "'");
                     PartitionKey partition;
                     LayoutConfig cfg;
                     try {
                         partition = parse_ddc_param(optional_param(req, "ddc"));
                         if (auto v = optional_param(req, "top"))
                             cfg.label_top_k = static_cast<int>(parse_top(*v));
                         if (auto v = optional_param(req, "seed"))
                             cfg.seed = parse_seed(*v);
                     } catch (const ConfigError& e) {
                         return send_error(res, 400, e.what());
                     }

                     const CoauthorGraph& graph = snapshot->subgraph(partition);
                     if (graph.empty())
                         return send_error(res, 404,
                                           "partition '" + partition.to_string() +
                                               "' has no publications");
                     auto result = state_.centrality(snapshot, partition,
                                                     EdgeMode::unweighted);
                     std::map<std::string, std::string> displays;
                     for (const auto& [name, count] : graph.publication_count)
                         displays.emplace(name, snapshot->display_name(name));
                     PlotOutput plot = render_network(graph, *result, cfg, displays);
                     if (plot.truncated)
                         res.set_header("X-Plot-Truncated", "true");
                     res.set_content(plot.png, "image/png");
                 });

    server_->Get("/schema/centrality", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(std::string(centrality_schema_xsd()), "application/xml");
    });
}

} // namespace coanet
