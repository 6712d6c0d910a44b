#pragma once

#include <optional>
#include <string>

#include "coanet/centrality/betweenness.hpp"
#include "coanet/index/graph.hpp"

namespace coanet {

/// Query-parameter resolution shared by the HTTP handlers and the CLI:
/// absent -> repository_wide, one digit or X00 -> that main class,
/// any other three digits -> exact code. Throws ConfigError otherwise
/// (e.g. "9999").
PartitionKey parse_ddc_param(const std::optional<std::string>& ddc);

/// "unweighted" | "weighted"; throws ConfigError otherwise.
EdgeMode parse_mode_param(const std::string& mode);

} // namespace coanet
