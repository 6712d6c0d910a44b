#include "coanet/service/response.hpp"

#include <charconv>

#include "coanet/xml/xml.hpp"

namespace coanet {

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

CentralityResponse CentralityResponse::build(
    std::string repository_id, const PartitionKey& partition,
    const BetweennessResult& result, const CentralityRanking& ranking,
    const std::function<std::string(const std::string&)>& display_name) {
    CentralityResponse response;
    response.repository_id = std::move(repository_id);
    response.partition = partition;
    response.mode = result.mode;
    response.generated_at = result.computed_at;
    response.entries.reserve(ranking.entries.size());
    for (const auto& entry : ranking.entries) {
        ResponseEntry out;
        out.rank = entry.rank;
        out.name = display_name ? display_name(entry.author) : entry.author;
        out.raw = entry.raw;
        out.normalized = entry.normalized;
        out.publication_count = entry.publication_count;
        response.entries.push_back(std::move(out));
    }
    return response;
}

std::string CentralityResponse::to_xml() const {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<centralityResult repository=\"" + xml::escape(repository_id) + "\"";
    out += " partitionKind=\"" + std::string(to_string(partition.kind)) + "\"";
    if (partition.kind != PartitionKey::Kind::repository_wide)
        out += " partitionCode=\"" + xml::escape(partition.code) + "\"";
    out += " mode=\"" + std::string(to_string(mode)) + "\"";
    out += " generatedAt=\"" + generated_at.to_string() + "\">\n";
    for (const auto& entry : entries) {
        out += "  <author rank=\"" + std::to_string(entry.rank) + "\"";
        out += " raw=\"" + format_double(entry.raw) + "\"";
        out += " normalized=\"" + format_double(entry.normalized) + "\"";
        out += " publications=\"" + std::to_string(entry.publication_count) + "\">";
        out += xml::escape(entry.name);
        out += "</author>\n";
    }
    out += "</centralityResult>\n";
    return out;
}

nlohmann::json CentralityResponse::to_json() const {
    nlohmann::json authors = nlohmann::json::array();
    for (const auto& entry : entries) {
        authors.push_back({{"rank", entry.rank},
                           {"name", entry.name},
                           {"raw", entry.raw},
                           {"normalized", entry.normalized},
                           {"publications", entry.publication_count}});
    }
    nlohmann::json j{{"repository", repository_id},
                     {"partitionKind", std::string(to_string(partition.kind))},
                     {"mode", std::string(to_string(mode))},
                     {"generatedAt", generated_at.to_string()},
                     {"authors", std::move(authors)}};
    if (partition.kind != PartitionKey::Kind::repository_wide)
        j["partitionCode"] = partition.code;
    return j;
}

} // namespace coanet
