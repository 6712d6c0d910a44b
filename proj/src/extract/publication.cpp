#include "coanet/extract/publication.hpp"

#include <algorithm>

namespace coanet {

ExtractResult extract_publication(const OaiRecord& record, const DdcPatterns& patterns) {
    if (record.deleted)
        return Deletion{record.identifier};

    Publication pub;
    pub.record_id = record.identifier;
    pub.datestamp = record.datestamp;
    pub.ddc_classes = extract_ddc(record, patterns);

    if (auto it = record.dc_fields.find("creator"); it != record.dc_fields.end()) {
        for (const std::string& raw : it->second) {
            auto name = try_normalize_author_name(raw);
            if (!name)
                continue;
            bool seen = std::any_of(pub.authors.begin(), pub.authors.end(),
                                    [&](const CanonicalName& existing) {
                                        return existing.canonical == name->canonical;
                                    });
            if (!seen)
                pub.authors.push_back(std::move(*name));
        }
    }
    return pub;
}

std::vector<std::pair<CanonicalName, CanonicalName>>
coauthor_pairs(const Publication& pub, size_t max_pair_authors, bool* truncated) {
    if (truncated)
        *truncated = pub.authors.size() > max_pair_authors;

    size_t n = std::min(pub.authors.size(), max_pair_authors);
    std::vector<std::pair<CanonicalName, CanonicalName>> pairs;
    if (n >= 2)
        pairs.reserve(n * (n - 1) / 2);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            const CanonicalName& a = pub.authors[i];
            const CanonicalName& b = pub.authors[j];
            if (a.canonical < b.canonical)
                pairs.emplace_back(a, b);
            else
                pairs.emplace_back(b, a);
        }
    }
    return pairs;
}

} // namespace coanet
