#pragma once

#include <string_view>

#include "coanet/oai/types.hpp"

namespace coanet {

/// Parse an Identify response.
/// Throws ProtocolError for non-OAI documents, UnsupportedVersion when the
/// advertised protocolVersion is not "2.0", and OaiError for a top-level
/// <error> element.
RepositoryInfo parse_identify(std::string_view xml_text);

/// Parse a ListRecords response into records plus flow-control data.
/// Throws ProtocolError when the document has neither a ListRecords element
/// nor an OAI error, and OaiError when a top-level <error> element is present.
ListRecordsPage parse_list_records(std::string_view xml_text);

} // namespace coanet
