#include "coanet/service/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "coanet/errors.hpp"

namespace coanet {

using nlohmann::json;

void ServiceConfig::validate() const {
    split_listen_address(listen_address);
    if (default_top_k < 1)
        throw ConfigError("default_top_k must be >= 1");
    if (data_dir.empty())
        throw ConfigError("data_dir must not be empty");
    for (const auto& [id, repo] : repositories) {
        if (!valid_repository_id(id))
            throw ConfigError("invalid repository_id '" + id + "'");
        repo.validate();
    }
}

bool valid_repository_id(std::string_view id) {
    if (id.empty() || id.size() > 128 || id.front() == '.')
        return false;
    for (char c : id) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                  (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
        if (!ok)
            return false;
    }
    return true;
}

namespace {

std::string require_string(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string())
        throw ConfigError(std::string("missing or non-string field '") + key + "'");
    return j.at(key).get<std::string>();
}

std::optional<Datestamp> optional_datestamp(const json& j, const char* key) {
    if (!j.contains(key))
        return std::nullopt;
    if (!j.at(key).is_string())
        throw ConfigError(std::string("field '") + key + "' must be a datestamp string");
    auto ds = Datestamp::try_parse(j.at(key).get<std::string>());
    if (!ds)
        throw ConfigError(std::string("field '") + key +
                          "' must be YYYY-MM-DD or YYYY-MM-DDThh:mm:ssZ");
    return ds;
}

int optional_int(const json& j, const char* key, int fallback) {
    if (!j.contains(key))
        return fallback;
    if (!j.at(key).is_number_integer())
        throw ConfigError(std::string("field '") + key + "' must be an integer");
    return j.at(key).get<int>();
}

} // namespace

std::pair<std::string, RepositoryConfig> repository_from_json(const json& j) {
    if (!j.is_object())
        throw ConfigError("repository entry must be a JSON object");
    std::string id = require_string(j, "repository_id");
    if (!valid_repository_id(id))
        throw ConfigError("invalid repository_id '" + id + "'");
    RepositoryConfig config;
    config.base_url = require_string(j, "base_url");
    if (j.contains("metadata_prefix"))
        config.metadata_prefix = require_string(j, "metadata_prefix");
    if (j.contains("set_spec"))
        config.set_spec = require_string(j, "set_spec");
    config.from = optional_datestamp(j, "from");
    config.until = optional_datestamp(j, "until");
    config.polite_delay_ms = optional_int(j, "polite_delay_ms", config.polite_delay_ms);
    config.max_retries = optional_int(j, "max_retries", config.max_retries);
    config.validate();
    return {std::move(id), std::move(config)};
}

json repository_to_json(const std::string& id, const RepositoryConfig& config) {
    json j{{"repository_id", id},
           {"base_url", config.base_url},
           {"metadata_prefix", config.metadata_prefix},
           {"polite_delay_ms", config.polite_delay_ms},
           {"max_retries", config.max_retries}};
    if (config.set_spec)
        j["set_spec"] = *config.set_spec;
    if (config.from)
        j["from"] = config.from->to_string();
    if (config.until)
        j["until"] = config.until->to_string();
    return j;
}

ServiceConfig config_from_json(const json& j) {
    if (!j.is_object())
        throw ConfigError("config root must be a JSON object");
    ServiceConfig config;
    if (j.contains("listen_address"))
        config.listen_address = require_string(j, "listen_address");
    if (j.contains("data_dir"))
        config.data_dir = require_string(j, "data_dir");
    config.default_top_k = optional_int(j, "default_top_k", config.default_top_k);
    if (j.contains("repositories")) {
        if (!j.at("repositories").is_array())
            throw ConfigError("'repositories' must be an array");
        for (const auto& entry : j.at("repositories")) {
            auto [id, repo] = repository_from_json(entry);
            if (!config.repositories.emplace(id, std::move(repo)).second)
                throw ConfigError("duplicate repository_id '" + id + "'");
        }
    }
    return config;
}

ServiceConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file '" + path.string() + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config file '" + path.string() + "': " + e.what());
    }
    ServiceConfig config = config_from_json(j);
    if (const char* listen = std::getenv("COANET_LISTEN"); listen && *listen)
        config.listen_address = listen;
    if (const char* dir = std::getenv("COANET_DATA_DIR"); dir && *dir)
        config.data_dir = dir;
    config.validate();
    return config;
}

std::pair<std::string, int> split_listen_address(const std::string& address) {
    auto colon = address.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == address.size())
        throw ConfigError("listen_address must be host:port, got '" + address + "'");
    std::string host = address.substr(0, colon);
    int port = 0;
    const char* begin = address.data() + colon + 1;
    const char* end = address.data() + address.size();
    auto [ptr, ec] = std::from_chars(begin, end, port);
    if (ec != std::errc{} || ptr != end || port < 0 || port > 65535)
        throw ConfigError("invalid port in listen_address '" + address + "'");
    return {std::move(host), port};
}

} // namespace coanet
