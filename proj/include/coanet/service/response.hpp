#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coanet/centrality/betweenness.hpp"
#include "coanet/centrality/ranking.hpp"

namespace coanet {

struct ResponseEntry {
    int rank = 0;
    std::string name; ///< display form
    double raw = 0.0;
    double normalized = 0.0;
    int publication_count = 0;
};

/// What both the XML and the JSON body carry; the two serializations hold
/// identical values.
struct CentralityResponse {
    std::string repository_id;
    PartitionKey partition;
    EdgeMode mode = EdgeMode::unweighted;
    Datestamp generated_at;
    std::vector<ResponseEntry> entries;

    static CentralityResponse
    build(std::string repository_id, const PartitionKey& partition,
          const BetweennessResult& result, const CentralityRanking& ranking,
          const std::function<std::string(const std::string&)>& display_name);

    /// <centralityResult repository=.. partitionKind=.. partitionCode?=..
    ///  mode=.. generatedAt=..> with one <author> per entry; validates against
    /// the schema served at /schema/centrality.
    std::string to_xml() const;
    nlohmann::json to_json() const;
};

/// Shortest decimal form that round-trips the exact double (std::to_chars).
std::string format_double(double value);

} // namespace coanet
