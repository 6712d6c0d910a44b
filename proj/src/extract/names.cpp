#include "coanet/extract/names.hpp"

#include "coanet/errors.hpp"
#include "coanet/util/strings.hpp"

namespace coanet {

CanonicalName normalize_author_name(std::string_view raw) {
    std::string cleaned = collapse_whitespace(raw);
    if (cleaned.empty())
        throw EmptyNameError("author name is empty or whitespace-only");

    std::string reordered;
    size_t comma = cleaned.find(',');
    if (comma != std::string::npos) {
        // Already "Last, First ..." — normalize spacing around the first comma.
        std::string last(trim(std::string_view(cleaned).substr(0, comma)));
        std::string first(trim(std::string_view(cleaned).substr(comma + 1)));
        if (last.empty())
            reordered = first; // ", First" degenerates to a bare name
        else if (first.empty())
            reordered = last;
        else
            reordered = last + ", " + first;
        if (reordered.empty())
            throw EmptyNameError("author name contains only separators");
    } else {
        // Western order: the final token is taken as the surname.
        size_t last_space = cleaned.rfind(' ');
        if (last_space == std::string::npos)
            reordered = cleaned;
        else
            reordered = cleaned.substr(last_space + 1) + ", " + cleaned.substr(0, last_space);
    }

    return CanonicalName{to_lower(reordered), cleaned};
}

std::optional<CanonicalName> try_normalize_author_name(std::string_view raw) {
    try {
        return normalize_author_name(raw);
    } catch (const EmptyNameError&) {
        return std::nullopt;
    }
}

} // namespace coanet
