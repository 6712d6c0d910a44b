#pragma once

#include <string_view>

namespace coanet {

/// The XML schema for centrality responses, served at GET /schema/centrality.
/// Identical to schema/centrality.xsd in the source tree (a test keeps the
/// two in sync).
std::string_view centrality_schema_xsd();

} // namespace coanet
