#pragma once

#include <memory>
#include <string>

#include "coanet/service/state.hpp"

namespace httplib {
class Server;
}

namespace coanet {

/// HTTP facade over ServiceState: repository registration, harvest jobs,
/// centrality queries (XML/JSON), network plots, and the response schema.
class HttpServer {
public:
    explicit HttpServer(ServiceState& state);
    ~HttpServer();

    /// Bind and serve; blocks until stop(). False if the address is taken.
    bool listen(const std::string& host, int port);

    /// Test support: bind an ephemeral port and return it (-1 on failure),
    /// then call serve_after_bind() on a background thread.
    int bind_any_port(const std::string& host);
    bool serve_after_bind();

    void stop();

private:
    void install_routes();

    ServiceState& state_;
    std::unique_ptr<httplib::Server> server_;
};

} // namespace coanet
