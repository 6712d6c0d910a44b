#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace coanet {

/// An author name in canonical "lastname, firstnames" lowercase form plus a
/// best-effort original-cased display form. Two names denote the same author
/// exactly when their canonical strings match.
struct CanonicalName {
    std::string canonical;
    std::string display;

    friend auto operator<=>(const CanonicalName&, const CanonicalName&) = default;
};

/// Canonicalize a raw dc:creator value: trim, collapse whitespace, case-fold,
/// and reorder "First Last" to "last, first". "Last, First" is kept as-is and
/// single-token names pass through. Throws EmptyNameError for empty or
/// whitespace-only input.
CanonicalName normalize_author_name(std::string_view raw);

/// Same, but empty input yields nullopt instead of throwing.
std::optional<CanonicalName> try_normalize_author_name(std::string_view raw);

} // namespace coanet
