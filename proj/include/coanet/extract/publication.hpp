#pragma once

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "coanet/extract/ddc.hpp"
#include "coanet/extract/names.hpp"
#include "coanet/oai/types.hpp"
#include "coanet/util/datestamp.hpp"

namespace coanet {

/// Extracted view of one record: the unit of graph ingestion.
struct Publication {
    std::string record_id;
    /// Canonicalized dc:creator values, duplicates removed, original order kept.
    std::vector<CanonicalName> authors;
    std::set<DdcClass> ddc_classes;
    Datestamp datestamp;

    bool operator==(const Publication&) const = default;
};

/// A deleted record: the ingester must retract this id.
struct Deletion {
    std::string record_id;
};

using ExtractResult = std::variant<Publication, Deletion>;

/// Map a harvested record to a Publication (or Deletion for deleted records).
/// Unusable creator values are skipped; a record can legitimately end up with
/// zero authors, in which case the ingester records nothing for it.
ExtractResult extract_publication(const OaiRecord& record,
                                  const DdcPatterns& patterns = {});

/// Pair-expansion guard for hyper-authored records: only the first
/// `kMaxPairAuthors` authors contribute co-author edges.
inline constexpr size_t kMaxPairAuthors = 50;

/// All C(n,2) unordered pairs of distinct canonical authors, each oriented so
/// that first.canonical < second.canonical. If `truncated` is non-null it is
/// set when the author list exceeded `max_pair_authors`.
std::vector<std::pair<CanonicalName, CanonicalName>>
coauthor_pairs(const Publication& pub, size_t max_pair_authors = kMaxPairAuthors,
               bool* truncated = nullptr);

} // namespace coanet
