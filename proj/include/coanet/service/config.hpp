#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "coanet/oai/types.hpp"

namespace coanet {

struct ServiceConfig {
    std::string listen_address = "127.0.0.1:8080";
    std::filesystem::path data_dir = "data";
    int default_top_k = 10;
    std::map<std::string, RepositoryConfig> repositories;

    /// Throws ConfigError: address splits, top_k >= 1, every repository
    /// config valid.
    void validate() const;
};

/// Tokens usable in URL paths and file names: [A-Za-z0-9._-]+, no leading dot.
bool valid_repository_id(std::string_view id);

/// {"repository_id": ..., "base_url": ..., "set_spec"?, "metadata_prefix"?,
///  "from"?, "until"?, "polite_delay_ms"?, "max_retries"?}
/// Throws ConfigError on missing/malformed fields. Shared by the config file
/// loader and the POST /repositories body parser.
std::pair<std::string, RepositoryConfig> repository_from_json(const nlohmann::json& j);
nlohmann::json repository_to_json(const std::string& id, const RepositoryConfig& config);

ServiceConfig config_from_json(const nlohmann::json& j);

/// Reads a JSON config file, applies COANET_LISTEN and COANET_DATA_DIR
/// overrides, validates. Throws ConfigError (also for unreadable files).
ServiceConfig load_config(const std::filesystem::path& path);

/// "host:port" -> (host, port). Throws ConfigError.
std::pair<std::string, int> split_listen_address(const std::string& address);

} // namespace coanet
